#include "codeveil/syntax.hpp"

#include <tree_sitter/api.h>

#include <algorithm>

#include "codeveil/errors.hpp"

extern "C" {
const TSLanguage* tree_sitter_c(void);
const TSLanguage* tree_sitter_cpp(void);
const TSLanguage* tree_sitter_go(void);
const TSLanguage* tree_sitter_java(void);
const TSLanguage* tree_sitter_python(void);
const TSLanguage* tree_sitter_rust(void);
const TSLanguage* tree_sitter_typescript(void);
}

namespace codeveil {

std::string_view language_name(LanguageId lang) {
    switch (lang) {
        case LanguageId::C: return "c";
        case LanguageId::Cpp: return "cpp";
        case LanguageId::Go: return "go";
        case LanguageId::Java: return "java";
        case LanguageId::Python: return "python";
        case LanguageId::Rust: return "rust";
        case LanguageId::TypeScript: return "typescript";
    }
    return "?";
}

std::optional<LanguageId> language_from_name(std::string_view name) {
    for (LanguageId lang : kAllLanguages)
        if (language_name(lang) == name) return lang;
    if (name == "c++") return LanguageId::Cpp;
    if (name == "ts") return LanguageId::TypeScript;
    return std::nullopt;
}

const std::vector<std::string>& language_extensions(LanguageId lang) {
    static const std::vector<std::string> c = {".c", ".h"};
    static const std::vector<std::string> cpp = {".cpp", ".c++", ".cc", ".cxx",
                                                 ".h++", ".hh", ".hpp", ".hxx"};
    static const std::vector<std::string> go = {".go"};
    static const std::vector<std::string> java = {".java"};
    static const std::vector<std::string> py = {".py"};
    static const std::vector<std::string> rust = {".rs"};
    static const std::vector<std::string> ts = {".ts", ".tsx"};
    switch (lang) {
        case LanguageId::C: return c;
        case LanguageId::Cpp: return cpp;
        case LanguageId::Go: return go;
        case LanguageId::Java: return java;
        case LanguageId::Python: return py;
        case LanguageId::Rust: return rust;
        case LanguageId::TypeScript: return ts;
    }
    return c;
}

std::optional<LanguageId> language_from_extension(std::string_view ext) {
    for (LanguageId lang : kAllLanguages)
        for (const auto& e : language_extensions(lang))
            if (e == ext) return lang;
    return std::nullopt;
}

std::size_t SourceDocument::line_count() const {
    if (content.empty()) return 0;
    std::size_t n = std::count(content.begin(), content.end(), '\n');
    if (content.back() != '\n') ++n;
    return n;
}

const TSLanguage* grammar_for(LanguageId lang) {
    switch (lang) {
        case LanguageId::C: return tree_sitter_c();
        case LanguageId::Cpp: return tree_sitter_cpp();
        case LanguageId::Go: return tree_sitter_go();
        case LanguageId::Java: return tree_sitter_java();
        case LanguageId::Python: return tree_sitter_python();
        case LanguageId::Rust: return tree_sitter_rust();
        case LanguageId::TypeScript: return tree_sitter_typescript();
    }
    throw UnsupportedLanguage("no grammar backend registered");
}

void SyntaxTree::TreeDeleter::operator()(TSTree* t) const {
    if (t) ts_tree_delete(t);
}

SyntaxTree::SyntaxTree(LanguageId lang, TSTree* tree) : language_(lang), tree_(tree) {}

SyntaxTree parse_document(const SourceDocument& doc) {
    const TSLanguage* grammar = grammar_for(doc.language);
    TSParser* parser = ts_parser_new();
    ts_parser_set_language(parser, grammar);
    TSTree* tree = ts_parser_parse_string(parser, nullptr, doc.content.data(),
                                          static_cast<uint32_t>(doc.content.size()));
    ts_parser_delete(parser);
    if (!tree) throw Error("parser returned no tree for " + doc.path);
    return SyntaxTree(doc.language, tree);
}

static std::size_t count_errors(TSNode node) {
    if (!ts_node_has_error(node) && !ts_node_is_missing(node)) return 0;
    std::size_t n = (ts_node_is_error(node) || ts_node_is_missing(node)) ? 1 : 0;
    uint32_t children = ts_node_child_count(node);
    for (uint32_t i = 0; i < children; ++i) n += count_errors(ts_node_child(node, i));
    return n;
}

std::size_t error_node_count(const SyntaxTree& tree) {
    return count_errors(ts_tree_root_node(tree.raw()));
}

}  // namespace codeveil
