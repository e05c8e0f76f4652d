#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace codeveil {

enum class LanguageId { C, Cpp, Go, Java, Python, Rust, TypeScript };

inline constexpr std::array<LanguageId, 7> kAllLanguages = {
    LanguageId::C,    LanguageId::Cpp,  LanguageId::Go,  LanguageId::Java,
    LanguageId::Python, LanguageId::Rust, LanguageId::TypeScript};

std::string_view language_name(LanguageId lang);
std::optional<LanguageId> language_from_name(std::string_view name);

/// Conventional file extensions per language. Files with other extensions
/// are dropped at intake.
const std::vector<std::string>& language_extensions(LanguageId lang);
std::optional<LanguageId> language_from_extension(std::string_view ext);

struct SourceDocument {
    LanguageId language;
    std::string content;  // UTF-8
    std::string path;
    long fork_count = 0;

    std::size_t line_count() const;
};

}  // namespace codeveil
