#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "codeveil/identifiers.hpp"
#include "codeveil/language.hpp"

namespace codeveil {

/// How names are drawn from the eligible pool.
enum class SelectionMode {
    /// Exactly floor(p_obf * D) names via a seeded shuffle (default).
    ExactCount,
    /// Independent per-name coin flips with probability p_obf.
    Bernoulli,
};

/// Tuning knobs for a single obfuscation run.
struct ObfuscationConfig {
    double p_obf = 0.0;
    std::size_t max_per_category = 150;
    bool obfuscate_imports = false;
    double import_sample_rate = 0.25;
    std::uint64_t seed = 0;
    SelectionMode mode = SelectionMode::ExactCount;

    /// Throws ConfigError when a field is outside its legal range.
    void validate() const;
};

/// A canonical replacement token such as VAR_3 or IMPORT_0.
struct Placeholder {
    SyntaxCategory category = SyntaxCategory::Variable;
    std::uint32_t index = 0;

    std::string render() const;
    bool operator==(const Placeholder&) const = default;
};

/// Returns the placeholder prefix for a category (VAR, FUNC, CLASS, ID, IMPORT).
std::string_view placeholder_prefix(SyntaxCategory category);

/// Parses a rendered placeholder; returns nullopt when the token does not
/// match the placeholder grammar.
std::optional<Placeholder> parse_placeholder(std::string_view token);

/// True when the token is shaped like a placeholder (any index value).
bool looks_like_placeholder(std::string_view token);

/// Ordered placeholder -> original-name assignment.  Entry order equals the
/// order of first occurrence in the obfuscated text.
class IdentifierMap {
public:
    struct Entry {
        Placeholder placeholder;
        std::string original;
    };

    /// Appends an entry; throws CategoryMismatch when either side repeats.
    void add(Placeholder placeholder, std::string original);

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// Original name for a rendered placeholder, or nullopt.
    std::optional<std::string> original_for(const std::string& rendered) const;
    /// Rendered placeholder for an original name, or nullopt.
    std::optional<std::string> placeholder_for(const std::string& original) const;

private:
    std::vector<Entry> entries_;
    std::unordered_map<std::string, std::size_t> by_placeholder_;
    std::unordered_map<std::string, std::size_t> by_original_;
};

/// Output of obfuscate() or replay().
struct ObfuscationResult {
    std::string obfuscated;
    IdentifierMap map;
    double realized_proportion = 0.0;
    std::uint64_t seed = 0;
    ObfuscationConfig config_echo;
    std::size_t skipped_collisions = 0;
    /// True when renaming a document with pre-existing parse errors made the
    /// error recovery worse, so the identity result was returned instead.
    bool parse_guard = false;
};

/// Renames a stochastic selection of identifiers to placeholders.
/// Deterministic for a fixed (content, config) pair.
ObfuscationResult obfuscate(const SourceDocument& doc,
                            const std::vector<IdentifierOccurrence>& occurrences,
                            const ObfuscationConfig& config);

/// Replaces every placeholder token in the text by its original name.
/// In strict mode a placeholder-shaped token absent from the map raises
/// UnknownPlaceholder; otherwise it is left untouched.
std::string deobfuscate(const std::string& obfuscated, const IdentifierMap& map,
                        bool strict = false);

/// Applies a fixed placeholder assignment, bypassing sampling.  Used to
/// reproduce golden listings exactly.
ObfuscationResult replay(const SourceDocument& doc,
                         const std::vector<IdentifierOccurrence>& occurrences,
                         const IdentifierMap& map);

}  // namespace codeveil
