#include <catch2/catch_amalgamated.hpp>

#include "codeveil/errors.hpp"
#include "codeveil/jsonl.hpp"
#include "codeveil/records.hpp"
#include "codeveil/tokens.hpp"
#include "test_helpers.hpp"

using namespace codeveil;

namespace {

ObfuscationResult sample_result() {
    auto doc = testing::fixture_document("java", "java");
    auto occurrences = testing::extract(doc);
    ObfuscationConfig config;
    config.p_obf = 0.5;
    config.seed = 3;
    config.obfuscate_imports = true;
    return obfuscate(doc, occurrences, config);
}

std::size_t count_sentinels(const TrainingRecord& record) {
    std::size_t count = 0;
    for (const auto& segment : record.segments)
        if (segment.text == kSrcToObf || segment.text == kObfToSrc) ++count;
    return count;
}

}  // namespace

TEST_CASE("special token inventory") {
    auto inventory = special_token_inventory();
    REQUIRE(inventory.tokens.size() == 752);  // 5 * 150 + 2 sentinels
    REQUIRE(inventory.tokens[0] == kSrcToObf);
    REQUIRE(inventory.tokens[1] == kObfToSrc);
    REQUIRE(inventory.tokens[2] == "VAR_0");
    REQUIRE(inventory.eos == kEos);
    std::set<std::string> unique(inventory.tokens.begin(), inventory.tokens.end());
    REQUIRE(unique.size() == inventory.tokens.size());
    for (std::size_t i = 2; i < inventory.tokens.size(); ++i)
        REQUIRE(looks_like_placeholder(inventory.tokens[i]));
}

TEST_CASE("byte-fallback tokenizer treats inventory tokens atomically") {
    ByteFallbackTokenizer tokenizer;
    auto plain = tokenizer.encode("abc");
    REQUIRE(plain == std::vector<std::uint32_t>{'a', 'b', 'c'});
    auto special = tokenizer.encode("VAR_0");
    REQUIRE(special.size() == 1);
    REQUIRE(special[0] >= 256);
    // VAR_01 is a different identifier, not VAR_0 plus a byte.
    auto longer = tokenizer.encode("VAR_01");
    REQUIRE(longer.size() == 6);
    auto sentinel = tokenizer.encode(kSrcToObf);
    REQUIRE(sentinel.size() == 1);
    auto eos = tokenizer.encode(kEos);
    REQUIRE(eos.size() == 1);
    REQUIRE(eos[0] == tokenizer.eos_id());
    // Placeholders beyond the inventory range fall back to bytes.
    REQUIRE(tokenizer.encode("VAR_150").size() == 7);
    REQUIRE(tokenizer.vocab_size() == 256 + 752 + 1);
}

TEST_CASE("pair records hold one sentinel between the two code segments") {
    auto result = sample_result();
    auto doc = testing::fixture_document("java", "java");
    auto record = make_pair_record(doc.content, result, Objective::PairSrcToObf);
    REQUIRE(record.segments.size() == 4);
    REQUIRE(record.segments[0].text == doc.content);
    REQUIRE(record.segments[1].text == kSrcToObf);
    REQUIRE(record.segments[2].text == result.obfuscated);
    REQUIRE(record.segments[3].text == kEos);
    REQUIRE(count_sentinels(record) == 1);
    for (const auto& segment : record.segments) REQUIRE(segment.trainable);

    auto reverse = make_pair_record(doc.content, result, Objective::PairObfToSrc);
    REQUIRE(reverse.segments[0].text == result.obfuscated);
    REQUIRE(reverse.segments[1].text == kObfToSrc);
    REQUIRE(reverse.segments[2].text == doc.content);
}

TEST_CASE("pair records validate the round trip before emission") {
    auto result = sample_result();
    REQUIRE_THROWS_AS(make_pair_record("not the original", result, Objective::PairSrcToObf),
                      RoundTripFailure);
}

TEST_CASE("degenerate empty-map pairs are legal and flagged") {
    auto doc = testing::fixture_document("java", "java");
    auto occurrences = testing::extract(doc);
    ObfuscationConfig config;
    config.p_obf = 0.0;
    auto result = obfuscate(doc, occurrences, config);
    auto record = make_pair_record(doc.content, result, Objective::PairSrcToObf);
    REQUIRE(record.meta["degenerate"] == true);
    REQUIRE(record.segments[0].text == record.segments[2].text);
}

TEST_CASE("direction flip swaps code segments and sentinel") {
    auto result = sample_result();
    auto doc = testing::fixture_document("java", "java");
    auto record = make_pair_record(doc.content, result, Objective::PairSrcToObf);
    flip_pair_direction(record);
    REQUIRE(record.objective == Objective::PairObfToSrc);
    REQUIRE(record.segments[0].text == result.obfuscated);
    REQUIRE(record.segments[1].text == kObfToSrc);
    flip_pair_direction(record);
    REQUIRE(record.objective == Objective::PairSrcToObf);
    REQUIRE(record.segments[0].text == doc.content);
}

TEST_CASE("dobf records freeze the code segment and open the map") {
    auto result = sample_result();
    REQUIRE_FALSE(result.map.empty());
    auto record = make_dobf_record(result);
    REQUIRE(record.segments.size() == 4);
    REQUIRE_FALSE(record.segments[0].trainable);  // obfuscated code masked
    REQUIRE(record.segments[1].trainable);
    REQUIRE(record.segments[2].trainable);  // identifier map trains
    REQUIRE(record.segments[3].trainable);  // eos trains
    // Serialization is "PLACEHOLDER original" in first-occurrence order.
    const auto& first = result.map.entries().front();
    REQUIRE(record.segments[2].text.rfind(first.placeholder.render() + " " + first.original, 0) ==
            0);
}

TEST_CASE("dobf requires a non-empty map") {
    ObfuscationResult empty;
    empty.obfuscated = "code";
    REQUIRE_THROWS_AS(make_dobf_record(empty), EmptyMap);
}

TEST_CASE("map serialization joins entries with pipes") {
    IdentifierMap map;
    map.add(Placeholder{SyntaxCategory::Import, 0}, "com");
    map.add(Placeholder{SyntaxCategory::Variable, 0}, "in");
    REQUIRE(serialize_map(map) == "IMPORT_0 com | VAR_0 in");
    IdentifierMap single;
    single.add(Placeholder{SyntaxCategory::Function, 0}, "f");
    REQUIRE(serialize_map(single) == "FUNC_0 f");
}

TEST_CASE("record JSONL round-trips") {
    auto result = sample_result();
    auto doc = testing::fixture_document("java", "java");
    auto record = make_pair_record(doc.content, result, Objective::PairObfToSrc);
    auto line = record_to_json(record);
    auto back = record_from_json(line);
    REQUIRE(back.has_value());
    REQUIRE(back->objective == record.objective);
    REQUIRE(back->segments.size() == record.segments.size());
    for (std::size_t i = 0; i < record.segments.size(); ++i) {
        REQUIRE(back->segments[i].text == record.segments[i].text);
        REQUIRE(back->segments[i].trainable == record.segments[i].trainable);
    }
    REQUIRE_FALSE(record_from_json("{broken").has_value());
}
