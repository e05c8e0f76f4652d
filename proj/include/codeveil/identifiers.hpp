#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "codeveil/queries.hpp"
#include "codeveil/syntax.hpp"

namespace codeveil {

enum class SyntaxCategory { Variable, Function, Class, Import, Ambiguous };

std::string_view category_name(SyntaxCategory cat);

using ScopeHandle = uint32_t;
inline constexpr ScopeHandle kFileScope = 0;

/// Lexical scope tree rooted at the file scope. Scopes are byte ranges;
/// handle 0 is always the whole file.
struct ScopeTree {
    struct Node {
        uint32_t start = 0;
        uint32_t end = 0;
        ScopeHandle parent = kFileScope;
    };
    std::vector<Node> nodes;

    ScopeHandle innermost_containing(uint32_t byte) const;
    bool is_ancestor(ScopeHandle outer, ScopeHandle inner) const;
};

struct IdentifierOccurrence {
    uint32_t start = 0;  // byte span [start, end) into the document
    uint32_t end = 0;
    std::string name;
    SyntaxCategory category = SyntaxCategory::Variable;
    ScopeHandle scope = kFileScope;
    bool is_definition = false;
    /// True when the span intersects an error-recovery or missing subtree.
    /// Renaming inside recovered regions can change how the parser re-splits
    /// them, so such names are excluded from the obfuscatable pool.
    bool in_error = false;
};

ScopeTree resolve_scopes(const SyntaxTree& tree, const QuerySet& queries,
                         const std::string& content);

/// All categorized occurrences, sorted by span start. Occurrences of one
/// surface name share a category; names bound in more than one category,
/// or shadowed across nested scopes, come back as Ambiguous throughout.
std::vector<IdentifierOccurrence> extract_identifiers(const SyntaxTree& tree,
                                                      const QuerySet& queries,
                                                      const std::string& content);

}  // namespace codeveil
