#include "codeveil/queries.hpp"

#include <tree_sitter/api.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "codeveil/errors.hpp"
#include "codeveil/syntax.hpp"

namespace codeveil {

namespace {

CaptureKind kind_from_name(std::string_view name, const std::string& origin) {
    if (name == "scope") return CaptureKind::Scope;
    if (name == "def.variable") return CaptureKind::DefVariable;
    if (name == "def.function") return CaptureKind::DefFunction;
    if (name == "def.class") return CaptureKind::DefClass;
    if (name == "def.import") return CaptureKind::DefImport;
    if (name == "def.import.tree") return CaptureKind::DefImportTree;
    if (name == "def.import.trim") return CaptureKind::DefImportTrim;
    if (name == "ref") return CaptureKind::RefPlain;
    if (name == "ref.call") return CaptureKind::RefCall;
    if (name == "ref.type") return CaptureKind::RefType;
    if (name == "global") return CaptureKind::GlobalDecl;
    throw ConfigError(origin + ": unknown capture name @" + std::string(name));
}

const char* query_error_name(TSQueryError e) {
    switch (e) {
        case TSQueryErrorSyntax: return "syntax error";
        case TSQueryErrorNodeType: return "unknown node type";
        case TSQueryErrorField: return "unknown field";
        case TSQueryErrorCapture: return "unknown capture";
        case TSQueryErrorStructure: return "impossible pattern";
        case TSQueryErrorLanguage: return "language mismatch";
        default: return "error";
    }
}

}  // namespace

void QuerySet::QueryDeleter::operator()(TSQuery* q) const {
    if (q) ts_query_delete(q);
}

QuerySet QuerySet::compile(LanguageId lang, const std::string& source,
                           const std::string& origin) {
    uint32_t error_offset = 0;
    TSQueryError error_type = TSQueryErrorNone;
    TSQuery* query = ts_query_new(grammar_for(lang), source.data(),
                                  static_cast<uint32_t>(source.size()),
                                  &error_offset, &error_type);
    if (!query) {
        // Report the line of the failure so rule files are debuggable.
        uint32_t line = 1;
        for (uint32_t i = 0; i < error_offset && i < source.size(); ++i)
            if (source[i] == '\n') ++line;
        throw ConfigError(origin + ":" + std::to_string(line) + ": " +
                          query_error_name(error_type));
    }

    QuerySet qs;
    qs.language_ = lang;
    qs.query_.reset(query);

    uint32_t capture_count = ts_query_capture_count(query);
    qs.kinds_.reserve(capture_count);
    for (uint32_t i = 0; i < capture_count; ++i) {
        uint32_t len = 0;
        const char* name = ts_query_capture_name_for_id(query, i, &len);
        qs.kinds_.push_back(kind_from_name(std::string_view(name, len), origin));
    }

    uint32_t pattern_count = ts_query_pattern_count(query);
    qs.predicates_.resize(pattern_count);
    for (uint32_t p = 0; p < pattern_count; ++p) {
        uint32_t step_count = 0;
        const TSQueryPredicateStep* steps =
            ts_query_predicates_for_pattern(query, p, &step_count);
        uint32_t i = 0;
        while (i < step_count) {
            if (steps[i].type != TSQueryPredicateStepTypeString)
                throw ConfigError(origin + ": malformed predicate in pattern " +
                                  std::to_string(p));
            uint32_t len = 0;
            const char* op_name =
                ts_query_string_value_for_id(query, steps[i].value_id, &len);
            std::string op(op_name, len);
            std::vector<const TSQueryPredicateStep*> args;
            uint32_t j = i + 1;
            while (j < step_count && steps[j].type != TSQueryPredicateStepTypeDone)
                args.push_back(&steps[j++]);

            Predicate pred;
            if (op == "match?") pred.op = Predicate::Op::Match;
            else if (op == "not-match?") pred.op = Predicate::Op::NotMatch;
            else if (op == "eq?") pred.op = Predicate::Op::Eq;
            else if (op == "not-eq?") pred.op = Predicate::Op::NotEq;
            else
                throw ConfigError(origin + ": unsupported predicate #" + op);
            if (args.size() != 2 ||
                args[0]->type != TSQueryPredicateStepTypeCapture ||
                args[1]->type != TSQueryPredicateStepTypeString)
                throw ConfigError(origin + ": #" + op +
                                  " expects (capture, string) arguments");
            pred.capture_id = args[0]->value_id;
            uint32_t arg_len = 0;
            const char* arg =
                ts_query_string_value_for_id(query, args[1]->value_id, &arg_len);
            pred.argument.assign(arg, arg_len);
            if (pred.op == Predicate::Op::Match || pred.op == Predicate::Op::NotMatch)
                pred.pattern = std::make_shared<const std::regex>(pred.argument);
            qs.predicates_[p].push_back(std::move(pred));
            i = j + 1;
        }
    }
    return qs;
}

QuerySet QuerySet::load(LanguageId lang, const std::filesystem::path& rules_dir) {
    std::filesystem::path file =
        rules_dir / std::string(language_name(lang)) / "identifiers.scm";
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ConfigError("cannot open rule file " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return compile(lang, buf.str(), file.string());
}

std::filesystem::path QuerySet::default_rules_dir() {
    if (const char* env = std::getenv("CODEVEIL_QUERY_DIR")) return env;
#ifdef CODEVEIL_SOURCE_ROOT
    return std::filesystem::path(CODEVEIL_SOURCE_ROOT) / "queries";
#else
    return "queries";
#endif
}

bool QuerySet::predicates_hold(uint32_t pattern_index, uint32_t capture_id,
                               std::string_view capture_text) const {
    for (const Predicate& pred : predicates_.at(pattern_index)) {
        if (pred.capture_id != capture_id) continue;
        bool ok = true;
        std::string text(capture_text);
        switch (pred.op) {
            case Predicate::Op::Match: ok = std::regex_search(text, *pred.pattern); break;
            case Predicate::Op::NotMatch: ok = !std::regex_search(text, *pred.pattern); break;
            case Predicate::Op::Eq: ok = (text == pred.argument); break;
            case Predicate::Op::NotEq: ok = (text != pred.argument); break;
        }
        if (!ok) return false;
    }
    return true;
}

}  // namespace codeveil
