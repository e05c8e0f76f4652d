#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "codeveil/identifiers.hpp"
#include "codeveil/queries.hpp"
#include "codeveil/syntax.hpp"

namespace codeveil::testing {

inline std::string source_root() { return CODEVEIL_SOURCE_ROOT; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline SourceDocument fixture_document(const std::string& lang_name, const std::string& ext) {
    auto lang = language_from_name(lang_name);
    std::string path = source_root() + "/fixtures/" + lang_name + "/original." + ext;
    return SourceDocument{*lang, read_file(path), path, 0};
}

inline std::vector<IdentifierOccurrence> extract(const SourceDocument& doc) {
    SyntaxTree tree = parse_document(doc);
    QuerySet queries = QuerySet::load(doc.language, QuerySet::default_rules_dir());
    return extract_identifiers(tree, queries, doc.content);
}

/// Synthetic Python file with `n` distinct variables, one per line.
inline SourceDocument synthetic_python_variables(std::size_t n) {
    std::string content;
    for (std::size_t i = 0; i < n; ++i)
        content += "name" + std::to_string(i) + " = " + std::to_string(i) + "\n";
    return SourceDocument{LanguageId::Python, content, "synthetic.py", 0};
}

}  // namespace codeveil::testing
