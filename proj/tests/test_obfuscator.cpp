#include <catch2/catch_amalgamated.hpp>
#include <regex>
#include <set>

#include "codeveil/errors.hpp"
#include "codeveil/obfuscator.hpp"
#include "json.hpp"
#include "test_helpers.hpp"

using namespace codeveil;

namespace {

ObfuscationConfig config_with(double p, std::uint64_t seed = 7, bool imports = false) {
    ObfuscationConfig config;
    config.p_obf = p;
    config.seed = seed;
    config.obfuscate_imports = imports;
    return config;
}

}  // namespace

TEST_CASE("config validation rejects out-of-range values") {
    REQUIRE_THROWS_AS(config_with(0.95).validate(), ConfigError);
    REQUIRE_THROWS_AS(config_with(-0.1).validate(), ConfigError);
    ObfuscationConfig too_many = config_with(0.5);
    too_many.max_per_category = 151;
    REQUIRE_THROWS_AS(too_many.validate(), ConfigError);
    REQUIRE_NOTHROW(config_with(0.9).validate());
}

TEST_CASE("placeholder rendering and parsing") {
    REQUIRE(Placeholder{SyntaxCategory::Variable, 0}.render() == "VAR_0");
    REQUIRE(Placeholder{SyntaxCategory::Ambiguous, 12}.render() == "ID_12");
    REQUIRE(Placeholder{SyntaxCategory::Import, 149}.render() == "IMPORT_149");
    auto parsed = parse_placeholder("FUNC_3");
    REQUIRE(parsed.has_value());
    REQUIRE(parsed->category == SyntaxCategory::Function);
    REQUIRE(parsed->index == 3);
    REQUIRE_FALSE(parse_placeholder("FUNC_").has_value());
    REQUIRE_FALSE(parse_placeholder("func_3").has_value());
    REQUIRE_FALSE(parse_placeholder("PREFIX_FUNC_3").has_value());
    REQUIRE(looks_like_placeholder("VAR_9999"));
}

TEST_CASE("identifier map is injective in both directions") {
    IdentifierMap map;
    map.add(Placeholder{SyntaxCategory::Variable, 0}, "alpha");
    REQUIRE_THROWS_AS(map.add(Placeholder{SyntaxCategory::Variable, 0}, "beta"),
                      CategoryMismatch);
    REQUIRE_THROWS_AS(map.add(Placeholder{SyntaxCategory::Function, 0}, "alpha"),
                      CategoryMismatch);
    map.add(Placeholder{SyntaxCategory::Function, 0}, "beta");
    REQUIRE(map.original_for("VAR_0") == "alpha");
    REQUIRE(map.placeholder_for("beta") == "FUNC_0");
}

TEST_CASE("p_obf of zero is the identity") {
    auto doc = testing::fixture_document("python", "py");
    auto occurrences = testing::extract(doc);
    auto result = obfuscate(doc, occurrences, config_with(0.0));
    REQUIRE(result.obfuscated == doc.content);
    REQUIRE(result.map.empty());
    REQUIRE(result.realized_proportion == 0.0);
}

TEST_CASE("selection count is exactly floor(p_obf * D)") {
    auto doc = testing::synthetic_python_variables(100);
    auto occurrences = testing::extract(doc);
    std::set<std::string> distinct;
    for (const auto& occ : occurrences) distinct.insert(occ.name);
    REQUIRE(distinct.size() == 100);
    for (double p : {0.1, 0.3, 0.55, 0.9}) {
        auto result = obfuscate(doc, occurrences, config_with(p));
        REQUIRE(result.map.size() == static_cast<std::size_t>(p * 100.0));
    }
}

TEST_CASE("per-category cap keeps 150 earliest names") {
    auto doc = testing::synthetic_python_variables(200);
    auto occurrences = testing::extract(doc);
    auto result = obfuscate(doc, occurrences, config_with(0.9));
    // floor(0.9 * 200) = 180 requested, capped at 150.
    REQUIRE(result.map.size() == 150);
    REQUIRE(result.realized_proportion == Catch::Approx(150.0 / 200.0));
    std::set<std::uint32_t> indices;
    for (const auto& entry : result.map.entries()) {
        REQUIRE(entry.placeholder.category == SyntaxCategory::Variable);
        REQUIRE(entry.placeholder.index < 150);
        indices.insert(entry.placeholder.index);
    }
    REQUIRE(indices.size() == 150);  // dense prefix 0..149
    REQUIRE(*indices.rbegin() == 149);
}

TEST_CASE("round trip is byte-exact on every fixture") {
    const std::pair<const char*, const char*> fixtures[] = {
        {"python", "py"}, {"java", "java"}, {"cpp", "cpp"},      {"c", "c"},
        {"rust", "rs"},   {"typescript", "ts"}, {"go", "go"}};
    for (const auto& [lang, ext] : fixtures) {
        auto doc = testing::fixture_document(lang, ext);
        auto occurrences = testing::extract(doc);
        for (double p : {0.3, 0.9}) {
            for (bool imports : {false, true}) {
                auto result = obfuscate(doc, occurrences, config_with(p, 11, imports));
                INFO(lang << " p=" << p << " imports=" << imports);
                REQUIRE(deobfuscate(result.obfuscated, result.map) == doc.content);
            }
        }
    }
}

TEST_CASE("every occurrence of a selected name is renamed consistently") {
    // A document with no strings or macro bodies, so a whole-word scan of
    // the output is a faithful occurrence count.
    auto doc = testing::synthetic_python_variables(40);
    auto occurrences = testing::extract(doc);
    auto result = obfuscate(doc, occurrences, config_with(0.9, 3, true));
    REQUIRE_FALSE(result.map.empty());
    for (const auto& entry : result.map.entries()) {
        std::regex whole("\\b" + entry.original + "\\b");
        REQUIRE_FALSE(std::regex_search(result.obfuscated, whole));
        std::regex placeholder("\\b" + entry.placeholder.render() + "\\b");
        REQUIRE(std::regex_search(result.obfuscated, placeholder));
    }
}

TEST_CASE("determinism: same content and config, same result") {
    auto doc = testing::fixture_document("rust", "rs");
    auto occurrences = testing::extract(doc);
    auto a = obfuscate(doc, occurrences, config_with(0.6, 42));
    auto b = obfuscate(doc, occurrences, config_with(0.6, 42));
    REQUIRE(a.obfuscated == b.obfuscated);
    REQUIRE(a.map.size() == b.map.size());
    auto c = obfuscate(doc, occurrences, config_with(0.6, 43));
    // A different seed reselects (statistically certain to differ here).
    bool differs = c.obfuscated != a.obfuscated;
    REQUIRE(differs);
}

TEST_CASE("imports are excluded from the pool unless enabled") {
    SourceDocument doc{LanguageId::Python, "import os\nimport sys\nvalue = 1\n", "i.py", 0};
    auto occurrences = testing::extract(doc);
    ObfuscationConfig config = config_with(0.9, 5, false);
    auto result = obfuscate(doc, occurrences, config);
    for (const auto& entry : result.map.entries())
        REQUIRE(entry.placeholder.category != SyntaxCategory::Import);
    config.obfuscate_imports = true;
    config.p_obf = 0.9;
    auto with_imports = obfuscate(doc, occurrences, config);
    REQUIRE(with_imports.map.size() > result.map.size());
}

TEST_CASE("names shaped like placeholders are skipped but counted") {
    SourceDocument doc{LanguageId::Python, "VAR_0 = 1\nother = VAR_0 + 1\nthird = 2\n",
                       "collide.py", 0};
    auto occurrences = testing::extract(doc);
    auto result = obfuscate(doc, occurrences, config_with(0.9, 1));
    REQUIRE(result.skipped_collisions == 1);
    for (const auto& entry : result.map.entries()) REQUIRE(entry.original != "VAR_0");
    // Round trip still holds: the literal VAR_0 is not in the map and is
    // left alone by tolerant deobfuscation.
    REQUIRE(deobfuscate(result.obfuscated, result.map) == doc.content);
}

TEST_CASE("names touching adjacent identifier characters are never renamed") {
    // The C lexer splits `64us` inside broken code into `64u` + `s`; renaming
    // that `s` would splice `VAR_n` against `u` and merge into one token.
    SourceDocument doc{LanguageId::C, "alpha beta 64us\n", "t.c", 0};
    std::vector<IdentifierOccurrence> occurrences = {
        {0, 5, "alpha", SyntaxCategory::Variable, kFileScope, true, false},
        {6, 10, "beta", SyntaxCategory::Variable, kFileScope, true, false},
        {14, 15, "s", SyntaxCategory::Variable, kFileScope, false, false},
    };
    auto result = obfuscate(doc, occurrences, config_with(0.9, 1));
    // D = 2 (alpha, beta); s is unsafe and outside the pool entirely.
    REQUIRE(result.map.size() == 1);
    for (const auto& entry : result.map.entries()) REQUIRE(entry.original != "s");
    REQUIRE(deobfuscate(result.obfuscated, result.map) == doc.content);
}

TEST_CASE("names inside error-recovery regions are not renamed") {
    SourceDocument doc{LanguageId::C, "first second\n", "t.c", 0};
    std::vector<IdentifierOccurrence> occurrences = {
        {0, 5, "first", SyntaxCategory::Variable, kFileScope, true, false},
        {6, 12, "second", SyntaxCategory::Variable, kFileScope, true, true},
    };
    auto result = obfuscate(doc, occurrences, config_with(0.9, 1));
    REQUIRE(result.map.size() == 0);  // floor(0.9 * 1) = 0
    // With two safe names the pool would have selected one.
    occurrences[1].in_error = false;
    REQUIRE(obfuscate(doc, occurrences, config_with(0.9, 1)).map.size() == 1);
}

TEST_CASE("extraction flags occurrences inside broken regions") {
    SourceDocument doc{LanguageId::Python, "steady = 1\nbroken = (\n", "e.py", 0};
    auto occurrences = testing::extract(doc);
    bool steady_clean = false;
    for (const auto& occ : occurrences)
        if (occ.name == "steady" && !occ.in_error) steady_clean = true;
    REQUIRE(steady_clean);
    auto result = obfuscate(doc, occurrences, config_with(0.9, 2));
    REQUIRE(deobfuscate(result.obfuscated, result.map) == doc.content);
}

TEST_CASE("strict deobfuscation rejects unknown placeholders") {
    IdentifierMap map;
    map.add(Placeholder{SyntaxCategory::Variable, 0}, "i");
    REQUIRE(deobfuscate("VAR_0&(-VAR_0)", map) == "i&(-i)");
    REQUIRE(deobfuscate("VAR_1 + 2", map) == "VAR_1 + 2");
    REQUIRE_THROWS_AS(deobfuscate("VAR_1 + 2", map, true), UnknownPlaceholder);
    IdentifierMap empty;
    REQUIRE(deobfuscate("no placeholders here", empty, true) == "no placeholders here");
}

TEST_CASE("replay validates names and categories") {
    auto doc = testing::fixture_document("go", "go");
    auto occurrences = testing::extract(doc);
    IdentifierMap missing;
    missing.add(Placeholder{SyntaxCategory::Variable, 0}, "not_in_file");
    REQUIRE_THROWS_AS(replay(doc, occurrences, missing), NameNotFound);
    IdentifierMap wrong;
    wrong.add(Placeholder{SyntaxCategory::Class, 0}, "i");  // i is a variable
    REQUIRE_THROWS_AS(replay(doc, occurrences, wrong), CategoryMismatch);
    IdentifierMap empty;
    auto result = replay(doc, occurrences, empty);
    REQUIRE(result.obfuscated == doc.content);
}

TEST_CASE("span mismatch is detected") {
    SourceDocument doc{LanguageId::Python, "a = 1\n", "s.py", 0};
    auto occurrences = testing::extract(doc);
    REQUIRE_FALSE(occurrences.empty());
    occurrences[0].name = "stale";
    REQUIRE_THROWS_AS(obfuscate(doc, occurrences, config_with(0.5)), SpanMismatch);
}

TEST_CASE("bernoulli mode selects a plausible fraction") {
    auto doc = testing::synthetic_python_variables(400);
    auto occurrences = testing::extract(doc);
    ObfuscationConfig config = config_with(0.5, 9);
    config.mode = SelectionMode::Bernoulli;
    config.max_per_category = 150;
    auto result = obfuscate(doc, occurrences, config);
    // Binomial(400, 0.5) stays within 5 sigma of 200; cap bites at 150, so
    // just check the draw landed in a sane band before capping.
    REQUIRE(result.map.size() == 150);
    config.p_obf = 0.2;
    auto loose = obfuscate(doc, occurrences, config);
    REQUIRE(loose.map.size() > 40);
    REQUIRE(loose.map.size() < 120);
}
