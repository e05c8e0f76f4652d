#include "codeveil/identifiers.hpp"

#include <tree_sitter/api.h>

#include <algorithm>
#include <map>
#include <set>

#include "codeveil/errors.hpp"

namespace codeveil {

std::string_view category_name(SyntaxCategory cat) {
    switch (cat) {
        case SyntaxCategory::Variable: return "variable";
        case SyntaxCategory::Function: return "function";
        case SyntaxCategory::Class: return "class";
        case SyntaxCategory::Import: return "import";
        case SyntaxCategory::Ambiguous: return "ambiguous";
    }
    return "?";
}

ScopeHandle ScopeTree::innermost_containing(uint32_t byte) const {
    ScopeHandle best = kFileScope;
    uint32_t best_width = UINT32_MAX;
    for (ScopeHandle i = 0; i < nodes.size(); ++i) {
        const Node& n = nodes[i];
        if (n.start <= byte && byte < n.end && n.end - n.start < best_width) {
            best = i;
            best_width = n.end - n.start;
        }
    }
    return best;
}

bool ScopeTree::is_ancestor(ScopeHandle outer, ScopeHandle inner) const {
    while (inner != outer) {
        if (inner == kFileScope) return false;
        inner = nodes[inner].parent;
    }
    return true;
}

namespace {

enum class EntryKind { DefVariable, DefFunction, DefClass, DefImport, RefPlain, RefCall, RefType };

struct RawEntry {
    uint32_t start;
    uint32_t end;
    EntryKind kind;
};

bool is_def(EntryKind k) {
    return k == EntryKind::DefVariable || k == EntryKind::DefFunction ||
           k == EntryKind::DefClass || k == EntryKind::DefImport;
}

SyntaxCategory def_category(EntryKind k) {
    switch (k) {
        case EntryKind::DefVariable: return SyntaxCategory::Variable;
        case EntryKind::DefFunction: return SyntaxCategory::Function;
        case EntryKind::DefClass: return SyntaxCategory::Class;
        default: return SyntaxCategory::Import;
    }
}

// Higher wins when two patterns capture the same node.
int priority(EntryKind k) {
    switch (k) {
        case EntryKind::DefImport: return 7;
        case EntryKind::DefClass: return 6;
        case EntryKind::DefFunction: return 5;
        case EntryKind::DefVariable: return 4;
        case EntryKind::RefCall: return 3;
        case EntryKind::RefType: return 2;
        case EntryKind::RefPlain: return 1;
    }
    return 0;
}

bool identifier_like(std::string_view text) {
    if (text.empty()) return false;
    for (char c : text) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '_' || c == '$';
        if (!ok) return false;
    }
    return !(text[0] >= '0' && text[0] <= '9');
}

void collect_identifier_leaves(TSNode node, const std::string& content,
                               std::vector<RawEntry>& out) {
    uint32_t children = ts_node_named_child_count(node);
    if (children == 0) {
        uint32_t s = ts_node_start_byte(node), e = ts_node_end_byte(node);
        if (e <= content.size() &&
            identifier_like(std::string_view(content).substr(s, e - s)))
            out.push_back({s, e, EntryKind::DefImport});
        return;
    }
    for (uint32_t i = 0; i < children; ++i)
        collect_identifier_leaves(ts_node_named_child(node, i), content, out);
}

/// Byte ranges of error and missing nodes; zero-width missing nodes are
/// widened to one byte so containment tests catch them.
void collect_error_ranges(TSNode node, std::vector<std::pair<uint32_t, uint32_t>>& out) {
    if (!ts_node_has_error(node) && !ts_node_is_missing(node)) return;
    if (ts_node_is_error(node) || ts_node_is_missing(node)) {
        uint32_t s = ts_node_start_byte(node), e = ts_node_end_byte(node);
        out.emplace_back(s, std::max(e, s + 1));
        return;
    }
    for (uint32_t i = 0; i < ts_node_child_count(node); ++i)
        collect_error_ranges(ts_node_child(node, i), out);
}

struct CaptureScan {
    std::vector<RawEntry> entries;
    std::vector<std::pair<uint32_t, uint32_t>> scopes;        // spans
    std::vector<std::pair<std::string, uint32_t>> globals;    // name, position
};

CaptureScan scan_captures(const SyntaxTree& tree, const QuerySet& queries,
                          const std::string& content) {
    CaptureScan result;
    TSQueryCursor* cursor = ts_query_cursor_new();
    ts_query_cursor_exec(cursor, queries.raw(), ts_tree_root_node(tree.raw()));

    TSQueryMatch match;
    while (ts_query_cursor_next_match(cursor, &match)) {
        for (uint16_t i = 0; i < match.capture_count; ++i) {
            const TSQueryCapture& cap = match.captures[i];
            uint32_t s = ts_node_start_byte(cap.node);
            uint32_t e = ts_node_end_byte(cap.node);
            if (e > content.size() || s >= e) continue;
            std::string_view text = std::string_view(content).substr(s, e - s);
            if (!queries.predicates_hold(match.pattern_index, cap.index, text))
                continue;
            switch (queries.capture_kind(cap.index)) {
                case CaptureKind::Scope:
                    result.scopes.emplace_back(s, e);
                    break;
                case CaptureKind::DefVariable:
                    result.entries.push_back({s, e, EntryKind::DefVariable});
                    break;
                case CaptureKind::DefFunction:
                    result.entries.push_back({s, e, EntryKind::DefFunction});
                    break;
                case CaptureKind::DefClass:
                    result.entries.push_back({s, e, EntryKind::DefClass});
                    break;
                case CaptureKind::DefImport:
                    result.entries.push_back({s, e, EntryKind::DefImport});
                    break;
                case CaptureKind::DefImportTree:
                    collect_identifier_leaves(cap.node, content, result.entries);
                    break;
                case CaptureKind::DefImportTrim:
                    if (e - s > 2)
                        result.entries.push_back({s + 1, e - 1, EntryKind::DefImport});
                    break;
                case CaptureKind::RefPlain:
                    result.entries.push_back({s, e, EntryKind::RefPlain});
                    break;
                case CaptureKind::RefCall:
                    result.entries.push_back({s, e, EntryKind::RefCall});
                    break;
                case CaptureKind::RefType:
                    result.entries.push_back({s, e, EntryKind::RefType});
                    break;
                case CaptureKind::GlobalDecl:
                    result.globals.emplace_back(std::string(text), s);
                    break;
            }
        }
    }
    ts_query_cursor_delete(cursor);
    return result;
}

}  // namespace

ScopeTree resolve_scopes(const SyntaxTree& tree, const QuerySet& queries,
                         const std::string& content) {
    CaptureScan scan = scan_captures(tree, queries, content);

    std::sort(scan.scopes.begin(), scan.scopes.end());
    scan.scopes.erase(std::unique(scan.scopes.begin(), scan.scopes.end()),
                      scan.scopes.end());

    ScopeTree st;
    st.nodes.push_back({0, static_cast<uint32_t>(content.size()), kFileScope});
    for (auto [s, e] : scan.scopes) st.nodes.push_back({s, e, kFileScope});

    // Parent = smallest strictly containing scope. File scope contains all.
    for (ScopeHandle i = 1; i < st.nodes.size(); ++i) {
        const auto& b = st.nodes[i];
        uint32_t best_width = UINT32_MAX;
        for (ScopeHandle j = 0; j < st.nodes.size(); ++j) {
            if (i == j) continue;
            const auto& a = st.nodes[j];
            bool strictly_contains = a.start <= b.start && b.end <= a.end &&
                                     (a.end - a.start) > (b.end - b.start);
            if (strictly_contains && a.end - a.start < best_width) {
                st.nodes[i].parent = j;
                best_width = a.end - a.start;
            }
        }
    }
    return st;
}

std::vector<IdentifierOccurrence> extract_identifiers(const SyntaxTree& tree,
                                                      const QuerySet& queries,
                                                      const std::string& content) {
    CaptureScan scan = scan_captures(tree, queries, content);

    // Dedupe identical spans, keeping the strongest interpretation.
    std::map<std::pair<uint32_t, uint32_t>, EntryKind> by_span;
    for (const RawEntry& e : scan.entries) {
        auto key = std::make_pair(e.start, e.end);
        auto it = by_span.find(key);
        if (it == by_span.end() || priority(e.kind) > priority(it->second))
            by_span[key] = e.kind;
    }

    ScopeTree st = resolve_scopes(tree, queries, content);

    struct Occ {
        uint32_t start, end;
        EntryKind kind;
        ScopeHandle scope;
        std::string name;
    };
    std::vector<Occ> occs;
    uint32_t last_end = 0;
    for (const auto& [span, kind] : by_span) {
        if (span.first < last_end) continue;  // nested/overlapping span, drop
        Occ o;
        o.start = span.first;
        o.end = span.second;
        o.kind = kind;
        o.name = content.substr(o.start, o.end - o.start);
        ScopeHandle inner = st.innermost_containing(o.start);
        // The name of a scope-opening construct binds in the enclosing scope.
        if ((kind == EntryKind::DefFunction || kind == EntryKind::DefClass) &&
            inner != kFileScope)
            inner = st.nodes[inner].parent;
        o.scope = inner;
        occs.push_back(std::move(o));
        last_end = span.second;
    }

    // `global` / `nonlocal` declarations re-home a name's definitions to the
    // file scope for the declaring function.
    for (const auto& [gname, gpos] : scan.globals) {
        ScopeHandle fn_scope = st.innermost_containing(gpos);
        for (Occ& o : occs)
            if (is_def(o.kind) && o.name == gname &&
                st.is_ancestor(fn_scope, o.scope))
                o.scope = kFileScope;
    }

    // Group by surface name and settle one category per name.
    struct Entity {
        std::set<SyntaxCategory> def_categories;
        std::vector<ScopeHandle> def_scopes;
        bool ref_call = false, ref_type = false;
    };
    std::map<std::string, Entity> entities;
    for (const Occ& o : occs) {
        Entity& ent = entities[o.name];
        if (is_def(o.kind)) {
            ent.def_categories.insert(def_category(o.kind));
            ent.def_scopes.push_back(o.scope);
        } else if (o.kind == EntryKind::RefCall) {
            ent.ref_call = true;
        } else if (o.kind == EntryKind::RefType) {
            ent.ref_type = true;
        }
    }

    std::map<std::string, SyntaxCategory> settled;
    for (auto& [name, ent] : entities) {
        SyntaxCategory cat;
        if (!ent.def_categories.empty()) {
            if (ent.def_categories.size() > 1) {
                cat = SyntaxCategory::Ambiguous;
            } else {
                cat = *ent.def_categories.begin();
                // Shadowing: same name bound in nested scopes.
                std::sort(ent.def_scopes.begin(), ent.def_scopes.end());
                ent.def_scopes.erase(
                    std::unique(ent.def_scopes.begin(), ent.def_scopes.end()),
                    ent.def_scopes.end());
                for (std::size_t a = 0; a < ent.def_scopes.size() && cat != SyntaxCategory::Ambiguous; ++a)
                    for (std::size_t b = 0; b < ent.def_scopes.size(); ++b)
                        if (a != b && st.is_ancestor(ent.def_scopes[a], ent.def_scopes[b])) {
                            cat = SyntaxCategory::Ambiguous;
                            break;
                        }
            }
        } else if (ent.ref_call && ent.ref_type) {
            cat = SyntaxCategory::Ambiguous;
        } else if (ent.ref_call) {
            cat = SyntaxCategory::Function;
        } else if (ent.ref_type) {
            cat = SyntaxCategory::Class;
        } else {
            cat = SyntaxCategory::Variable;
        }
        settled[name] = cat;
    }

    std::vector<std::pair<uint32_t, uint32_t>> error_ranges;
    collect_error_ranges(ts_tree_root_node(tree.raw()), error_ranges);
    // Recovery splits are influenced by the tokens surrounding a broken
    // region, so widen each range to whole lines before marking.
    for (auto& [s, e] : error_ranges) {
        while (s > 0 && content[s - 1] != '\n') --s;
        while (e < content.size() && content[e] != '\n') ++e;
    }
    std::sort(error_ranges.begin(), error_ranges.end());
    auto intersects_error = [&](uint32_t start, uint32_t end) {
        auto it = std::upper_bound(error_ranges.begin(), error_ranges.end(),
                                   std::make_pair(end, uint32_t{0}));
        for (auto r = error_ranges.begin(); r != it; ++r)
            if (r->second > start) return true;
        return false;
    };

    std::vector<IdentifierOccurrence> result;
    result.reserve(occs.size());
    for (Occ& o : occs) {
        IdentifierOccurrence occ;
        occ.start = o.start;
        occ.end = o.end;
        occ.category = settled[o.name];
        occ.scope = o.scope;
        occ.is_definition = is_def(o.kind);
        occ.in_error = !error_ranges.empty() && intersects_error(o.start, o.end);
        occ.name = std::move(o.name);
        result.push_back(std::move(occ));
    }
    return result;  // by_span iteration is already sorted by start
}

}  // namespace codeveil
