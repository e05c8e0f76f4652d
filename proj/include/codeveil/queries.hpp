#pragma once

#include <filesystem>
#include <memory>
#include <regex>
#include <string>
#include <vector>

#include "codeveil/language.hpp"

typedef struct TSQuery TSQuery;

namespace codeveil {

/// What a capture name in a rule file means to the extractor.
enum class CaptureKind {
    Scope,        // node that opens a lexical scope
    DefVariable,  // definition occurrences, by category
    DefFunction,
    DefClass,
    DefImport,
    DefImportTree,  // walk identifier leaves under the node, all Import defs
    DefImportTrim,  // trim one byte off each end (quoted / angled include paths)
    RefPlain,       // free reference, category decided by use sites
    RefCall,        // reference in call-target position
    RefType,        // reference in type position
    GlobalDecl,     // python `global` / `nonlocal` name: lifts defs to file scope
};

/// One language's compiled rule file. Rules are declarative tree patterns;
/// a pattern that does not compile against the grammar is a configuration
/// error at load time, never a runtime skip.
class QuerySet {
public:
    static QuerySet load(LanguageId lang, const std::filesystem::path& rules_dir);
    static QuerySet compile(LanguageId lang, const std::string& source,
                            const std::string& origin = "<inline>");

    LanguageId language() const { return language_; }
    const TSQuery* raw() const { return query_.get(); }
    CaptureKind capture_kind(uint32_t capture_id) const { return kinds_.at(capture_id); }

    /// True when every #match? / #eq? predicate attached to the pattern holds.
    bool predicates_hold(uint32_t pattern_index, uint32_t capture_id,
                         std::string_view capture_text) const;

    /// Default rules directory: $CODEVEIL_QUERY_DIR or the repo's queries/.
    static std::filesystem::path default_rules_dir();

private:
    QuerySet() = default;

    struct Predicate {
        enum class Op { Match, NotMatch, Eq, NotEq } op;
        uint32_t capture_id;
        std::string argument;
        std::shared_ptr<const std::regex> pattern;  // set for Match/NotMatch
    };
    struct QueryDeleter {
        void operator()(TSQuery* q) const;
    };

    LanguageId language_ = LanguageId::C;
    std::unique_ptr<TSQuery, QueryDeleter> query_;
    std::vector<CaptureKind> kinds_;                       // by capture id
    std::vector<std::vector<Predicate>> predicates_;       // by pattern index
};

}  // namespace codeveil
