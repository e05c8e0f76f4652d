#pragma once

#include <cstdint>
#include <memory>

#include "codeveil/language.hpp"

typedef struct TSLanguage TSLanguage;
typedef struct TSTree TSTree;

namespace codeveil {

const TSLanguage* grammar_for(LanguageId lang);

/// Owning wrapper around a parsed concrete syntax tree. Immutable after
/// construction; safe to share across threads.
class SyntaxTree {
public:
    SyntaxTree(const SyntaxTree&) = delete;
    SyntaxTree& operator=(const SyntaxTree&) = delete;
    SyntaxTree(SyntaxTree&&) noexcept = default;
    SyntaxTree& operator=(SyntaxTree&&) noexcept = default;

    LanguageId language() const { return language_; }
    const TSTree* raw() const { return tree_.get(); }

private:
    friend SyntaxTree parse_document(const SourceDocument&);
    SyntaxTree(LanguageId lang, TSTree* tree);

    struct TreeDeleter {
        void operator()(TSTree* t) const;
    };
    LanguageId language_;
    std::unique_ptr<TSTree, TreeDeleter> tree_;
};

/// Parses fault-tolerantly: malformed code yields a tree with explicit
/// error subtrees, never a failure.
SyntaxTree parse_document(const SourceDocument& doc);

/// Number of error or missing nodes in the tree; 0 iff the parse is clean.
std::size_t error_node_count(const SyntaxTree& tree);

}  // namespace codeveil
