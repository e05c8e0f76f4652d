#include "codeveil/obfuscator.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>
#include <unordered_set>

#include "codeveil/errors.hpp"

namespace codeveil {
namespace {

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

/// One distinct name with the positions that mention it.
struct Entity {
    std::string name;
    SyntaxCategory category;
    std::uint32_t first_start = 0;
    std::vector<std::size_t> occurrence_indices;
};

std::vector<Entity> collect_entities(const std::vector<IdentifierOccurrence>& occurrences) {
    std::vector<Entity> entities;
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < occurrences.size(); ++i) {
        const auto& occ = occurrences[i];
        auto it = index.find(occ.name);
        if (it == index.end()) {
            index.emplace(occ.name, entities.size());
            entities.push_back({occ.name, occ.category, occ.start, {i}});
        } else {
            entities[it->second].occurrence_indices.push_back(i);
        }
    }
    std::sort(entities.begin(), entities.end(),
              [](const Entity& a, const Entity& b) { return a.first_start < b.first_start; });
    return entities;
}

void check_spans(const std::string& content, const std::vector<IdentifierOccurrence>& occurrences) {
    for (const auto& occ : occurrences) {
        if (occ.end > content.size() ||
            content.compare(occ.start, occ.end - occ.start, occ.name) != 0)
            throw SpanMismatch("occurrence span does not match its name: " + occ.name);
    }
}

/// Splices replacements into the text.  `renames` maps occurrence index to
/// replacement string.
std::string apply_renames(const std::string& content,
                          const std::vector<IdentifierOccurrence>& occurrences,
                          const std::unordered_map<std::size_t, std::string>& renames) {
    std::vector<std::size_t> order;
    order.reserve(renames.size());
    for (const auto& [idx, _] : renames) order.push_back(idx);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return occurrences[a].start < occurrences[b].start;
    });
    std::string out;
    out.reserve(content.size());
    std::size_t cursor = 0;
    for (std::size_t idx : order) {
        const auto& occ = occurrences[idx];
        out.append(content, cursor, occ.start - cursor);
        out.append(renames.at(idx));
        cursor = occ.end;
    }
    out.append(content, cursor, content.size() - cursor);
    return out;
}

ObfuscationResult finish(const SourceDocument& doc,
                         const std::vector<IdentifierOccurrence>& occurrences,
                         const std::vector<Entity>& entities,
                         const std::vector<const Entity*>& selected, std::size_t denominator,
                         const ObfuscationConfig& config, std::size_t skipped) {
    // Dense per-category indices in first-occurrence order.  An index whose
    // rendered form already names something in the document is skipped:
    // assigning it would make two distinct identifiers textually equal and
    // break exact inversion.
    std::unordered_set<std::string> taken;
    for (const Entity& entity : entities) taken.insert(entity.name);
    std::unordered_map<SyntaxCategory, std::uint32_t> counters;
    ObfuscationResult result;
    result.seed = config.seed;
    result.config_echo = config;
    result.skipped_collisions = skipped;
    std::unordered_map<std::size_t, std::string> renames;
    for (const Entity* entity : selected) {
        std::uint32_t& counter = counters[entity->category];
        while (taken.count(Placeholder{entity->category, counter}.render())) ++counter;
        Placeholder ph{entity->category, counter++};
        std::string rendered = ph.render();
        result.map.add(ph, entity->name);
        for (std::size_t idx : entity->occurrence_indices) renames.emplace(idx, rendered);
    }
    result.obfuscated = apply_renames(doc.content, occurrences, renames);
    result.realized_proportion =
        denominator == 0 ? 0.0
                         : static_cast<double>(result.map.size()) / static_cast<double>(denominator);
    (void)entities;
    return result;
}

}  // namespace

void ObfuscationConfig::validate() const {
    if (p_obf < 0.0 || p_obf > 0.9)
        throw ConfigError("p_obf must lie in [0, 0.9]");
    if (max_per_category == 0 || max_per_category > 150)
        throw ConfigError("max_per_category must lie in [1, 150]");
    if (import_sample_rate < 0.0 || import_sample_rate > 1.0)
        throw ConfigError("import_sample_rate must lie in [0, 1]");
}

std::string_view placeholder_prefix(SyntaxCategory category) {
    switch (category) {
        case SyntaxCategory::Variable: return "VAR";
        case SyntaxCategory::Function: return "FUNC";
        case SyntaxCategory::Class: return "CLASS";
        case SyntaxCategory::Import: return "IMPORT";
        case SyntaxCategory::Ambiguous: return "ID";
    }
    return "VAR";
}

std::string Placeholder::render() const {
    std::string out{placeholder_prefix(category)};
    out += '_';
    out += std::to_string(index);
    return out;
}

std::optional<Placeholder> parse_placeholder(std::string_view token) {
    auto underscore = token.rfind('_');
    if (underscore == std::string_view::npos || underscore + 1 >= token.size())
        return std::nullopt;
    std::string_view prefix = token.substr(0, underscore);
    std::string_view digits = token.substr(underscore + 1);
    SyntaxCategory category;
    if (prefix == "VAR") category = SyntaxCategory::Variable;
    else if (prefix == "FUNC") category = SyntaxCategory::Function;
    else if (prefix == "CLASS") category = SyntaxCategory::Class;
    else if (prefix == "IMPORT") category = SyntaxCategory::Import;
    else if (prefix == "ID") category = SyntaxCategory::Ambiguous;
    else return std::nullopt;
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    return Placeholder{category, value};
}

bool looks_like_placeholder(std::string_view token) {
    return parse_placeholder(token).has_value();
}

void IdentifierMap::add(Placeholder placeholder, std::string original) {
    std::string rendered = placeholder.render();
    if (by_placeholder_.count(rendered))
        throw CategoryMismatch("duplicate placeholder in map: " + rendered);
    if (by_original_.count(original))
        throw CategoryMismatch("name mapped to two placeholders: " + original);
    by_placeholder_.emplace(rendered, entries_.size());
    by_original_.emplace(original, entries_.size());
    entries_.push_back({placeholder, std::move(original)});
}

std::optional<std::string> IdentifierMap::original_for(const std::string& rendered) const {
    auto it = by_placeholder_.find(rendered);
    if (it == by_placeholder_.end()) return std::nullopt;
    return entries_[it->second].original;
}

std::optional<std::string> IdentifierMap::placeholder_for(const std::string& original) const {
    auto it = by_original_.find(original);
    if (it == by_original_.end()) return std::nullopt;
    return entries_[it->second].placeholder.render();
}

ObfuscationResult obfuscate(const SourceDocument& doc,
                            const std::vector<IdentifierOccurrence>& occurrences,
                            const ObfuscationConfig& config) {
    config.validate();
    check_spans(doc.content, occurrences);
    std::vector<Entity> entities = collect_entities(occurrences);

    // A name is unsafe to rename when any of its occurrences sits inside an
    // error-recovery region (renaming can re-split the recovery) or abuts an
    // identifier character (splicing would merge tokens and break inversion,
    // e.g. the `s` the C lexer splits off `64us` inside broken code).
    auto unsafe = [&](const Entity& entity) {
        for (std::size_t idx : entity.occurrence_indices) {
            const auto& occ = occurrences[idx];
            if (occ.in_error) return true;
            if (occ.start > 0 && is_ident_char(doc.content[occ.start - 1])) return true;
            if (occ.end < doc.content.size() && is_ident_char(doc.content[occ.end])) return true;
        }
        return false;
    };

    // The obfuscatable pool: imports drop out entirely when disabled, the
    // blank identifier and unsafe names are never rename targets, and names
    // that already look like placeholders stay in the denominator but cannot
    // be selected.
    std::vector<const Entity*> eligible;
    std::size_t denominator = 0;
    std::size_t skipped = 0;
    for (const Entity& entity : entities) {
        if (entity.name == "_") continue;
        if (unsafe(entity)) continue;
        if (!config.obfuscate_imports && entity.category == SyntaxCategory::Import) continue;
        ++denominator;
        if (looks_like_placeholder(entity.name)) {
            ++skipped;
            continue;
        }
        eligible.push_back(&entity);
    }

    std::mt19937_64 rng(config.seed);
    std::vector<const Entity*> selected;
    if (config.mode == SelectionMode::ExactCount) {
        std::size_t k = static_cast<std::size_t>(config.p_obf * static_cast<double>(denominator));
        k = std::min(k, eligible.size());
        std::vector<const Entity*> pool = eligible;
        std::shuffle(pool.begin(), pool.end(), rng);
        selected.assign(pool.begin(), pool.begin() + k);
    } else {
        std::bernoulli_distribution coin(config.p_obf);
        for (const Entity* entity : eligible)
            if (coin(rng)) selected.push_back(entity);
    }
    std::sort(selected.begin(), selected.end(),
              [](const Entity* a, const Entity* b) { return a->first_start < b->first_start; });

    // Per-category cap: keep the earliest first occurrences.
    std::unordered_map<SyntaxCategory, std::size_t> kept;
    std::vector<const Entity*> capped;
    for (const Entity* entity : selected)
        if (kept[entity->category]++ < config.max_per_category) capped.push_back(entity);

    ObfuscationResult result = finish(doc, occurrences, entities, capped, denominator, config, skipped);

    // Do-no-harm guard.  On a cleanly parsed document identifier-for-
    // identifier renames are parse-neutral, but inside a document the parser
    // already recovers around, any rename can re-split the recovery even at
    // a distance.  If that happened, keep the document untouched.
    bool had_errors = false;
    for (const auto& occ : occurrences)
        if (occ.in_error) { had_errors = true; break; }
    if (had_errors && !result.map.empty()) {
        std::size_t before = error_node_count(parse_document(doc));
        SourceDocument renamed{doc.language, result.obfuscated, doc.path, doc.fork_count};
        if (error_node_count(parse_document(renamed)) > before) {
            ObfuscationResult identity;
            identity.obfuscated = doc.content;
            identity.seed = config.seed;
            identity.config_echo = config;
            identity.skipped_collisions = skipped;
            identity.parse_guard = true;
            return identity;
        }
    }
    return result;
}

std::string deobfuscate(const std::string& obfuscated, const IdentifierMap& map, bool strict) {
    std::string out;
    out.reserve(obfuscated.size());
    std::size_t i = 0;
    const std::size_t n = obfuscated.size();
    while (i < n) {
        char c = obfuscated[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < n && is_ident_char(obfuscated[j])) ++j;
            std::string token = obfuscated.substr(i, j - i);
            if (looks_like_placeholder(token)) {
                if (auto original = map.original_for(token)) {
                    out += *original;
                } else if (strict) {
                    throw UnknownPlaceholder("placeholder not in map: " + token);
                } else {
                    out += token;
                }
            } else {
                out += token;
            }
            i = j;
        } else {
            out += c;
            ++i;
        }
    }
    return out;
}

ObfuscationResult replay(const SourceDocument& doc,
                         const std::vector<IdentifierOccurrence>& occurrences,
                         const IdentifierMap& map) {
    check_spans(doc.content, occurrences);
    std::vector<Entity> entities = collect_entities(occurrences);
    std::unordered_map<std::string, const Entity*> by_name;
    for (const Entity& entity : entities) by_name.emplace(entity.name, &entity);

    ObfuscationResult result;
    result.config_echo.obfuscate_imports = true;
    std::unordered_map<std::size_t, std::string> renames;
    for (const auto& entry : map.entries()) {
        auto it = by_name.find(entry.original);
        if (it == by_name.end())
            throw NameNotFound("name absent from document: " + entry.original);
        const Entity* entity = it->second;
        bool compatible = entity->category == entry.placeholder.category ||
                          entity->category == SyntaxCategory::Ambiguous ||
                          entry.placeholder.category == SyntaxCategory::Ambiguous;
        if (!compatible)
            throw CategoryMismatch("category mismatch for " + entry.original + ": document says " +
                                   std::string(category_name(entity->category)));
        std::string rendered = entry.placeholder.render();
        result.map.add(entry.placeholder, entry.original);
        for (std::size_t idx : entity->occurrence_indices) renames.emplace(idx, rendered);
    }
    result.obfuscated = apply_renames(doc.content, occurrences, renames);
    std::size_t denominator = 0;
    for (const Entity& entity : entities)
        if (entity.name != "_") ++denominator;
    result.realized_proportion =
        denominator == 0 ? 0.0
                         : static_cast<double>(result.map.size()) / static_cast<double>(denominator);
    return result;
}

}  // namespace codeveil
