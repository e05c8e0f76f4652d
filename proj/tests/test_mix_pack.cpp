#include <catch2/catch_amalgamated.hpp>
#include <map>

#include "codeveil/errors.hpp"
#include "codeveil/mix.hpp"
#include "codeveil/pack.hpp"
#include "test_helpers.hpp"

using namespace codeveil;

namespace {

TrainingRecord text_record(Objective objective, const std::string& text) {
    TrainingRecord record;
    record.objective = objective;
    record.segments = {{text, true}, {kEos, true}};
    return record;
}

TrainingRecord pair_record(const std::string& a, const std::string& b) {
    TrainingRecord record;
    record.objective = Objective::PairSrcToObf;
    record.segments = {{a, true}, {kSrcToObf, true}, {b, true}, {kEos, true}};
    return record;
}

std::array<std::vector<TrainingRecord>, kMixClassCount> sample_streams(std::size_t per_class) {
    std::array<std::vector<TrainingRecord>, kMixClassCount> streams;
    for (std::size_t i = 0; i < per_class; ++i) {
        std::string body = "record body number " + std::to_string(i) + " with some padding text";
        streams[0].push_back(text_record(Objective::SrcOnly, body + " src"));
        streams[1].push_back(text_record(Objective::ObfOnly, body + " obf"));
        streams[2].push_back(pair_record(body + " left", body + " right"));
        streams[3].push_back(text_record(Objective::SrcOnly, body + " text"));
    }
    return streams;
}

std::size_t tokens_of(const TrainingRecord& record, const TokenizerAdapter& tokenizer) {
    std::size_t n = 0;
    for (const auto& segment : record.segments) n += tokenizer.encode(segment.text).size();
    return n;
}

}  // namespace

TEST_CASE("single positive weight emits only that class") {
    ByteFallbackTokenizer tokenizer;
    auto streams = sample_streams(50);
    MixSpec spec;
    spec.source = 1;
    spec.obf_only = 0;
    spec.pairs = 0;
    spec.code_text = 0;
    auto mixed = mix(streams, spec, tokenizer, 2000);
    REQUIRE_FALSE(mixed.empty());
    for (const auto& record : mixed) REQUIRE(record.objective == Objective::SrcOnly);
}

TEST_CASE("token proportions converge to the weights") {
    ByteFallbackTokenizer tokenizer;
    auto streams = sample_streams(3000);
    MixSpec spec;  // 64:30:58:30 defaults
    spec.seed = 77;
    std::size_t budget = 600000;
    auto mixed = mix(streams, spec, tokenizer, budget);
    std::map<int, std::size_t> tokens;
    std::size_t total = 0;
    for (const auto& record : mixed) {
        int cls;
        switch (record.objective) {
            case Objective::PairSrcToObf:
            case Objective::PairObfToSrc: cls = 2; break;
            case Objective::ObfOnly: cls = 1; break;
            default: cls = -1; break;  // source and code_text share an objective
        }
        std::size_t n = tokens_of(record, tokenizer);
        if (cls >= 0) tokens[cls] += n;
        total += n;
    }
    double weight_total = 64 + 30 + 58 + 30;
    REQUIRE(static_cast<double>(tokens[1]) / total ==
            Catch::Approx(30 / weight_total).margin(0.01));
    REQUIRE(static_cast<double>(tokens[2]) / total ==
            Catch::Approx(58 / weight_total).margin(0.01));
}

TEST_CASE("pair direction is fair across emissions") {
    ByteFallbackTokenizer tokenizer;
    auto streams = sample_streams(4000);
    MixSpec spec;
    spec.source = 0;
    spec.obf_only = 0;
    spec.pairs = 1;
    spec.code_text = 0;
    spec.seed = 5;
    // Pair records here are ~100 byte-level tokens each.
    auto mixed = mix(streams, spec, tokenizer, 1100000);
    std::size_t pairs = 0, src_to_obf = 0;
    for (const auto& record : mixed) {
        ++pairs;
        if (record.objective == Objective::PairSrcToObf) ++src_to_obf;
    }
    REQUIRE(pairs >= 10000);
    double half = static_cast<double>(pairs) / 2.0;
    double sigma = std::sqrt(static_cast<double>(pairs)) / 2.0;
    REQUIRE(std::abs(static_cast<double>(src_to_obf) - half) <= 3.0 * sigma);
}

TEST_CASE("repeat cap is enforced") {
    ByteFallbackTokenizer tokenizer;
    auto streams = sample_streams(4);
    MixSpec spec;
    spec.source = 1;
    spec.obf_only = 0;
    spec.pairs = 0;
    spec.code_text = 0;
    spec.repeat_cap = 3;
    spec.strict = false;
    auto mixed = mix(streams, spec, tokenizer, 1000000);
    std::map<std::string, std::size_t> uses;
    for (const auto& record : mixed) ++uses[record.segments[0].text];
    REQUIRE(mixed.size() == 12);  // 4 records x cap 3
    for (const auto& [text, count] : uses) REQUIRE(count <= 3);

    spec.strict = true;
    REQUIRE_THROWS_AS(mix(streams, spec, tokenizer, 1000000), ExhaustedStream);
}

TEST_CASE("empty stream with positive weight errors in strict mode") {
    ByteFallbackTokenizer tokenizer;
    std::array<std::vector<TrainingRecord>, kMixClassCount> streams;
    streams[0].push_back(text_record(Objective::SrcOnly, "only source"));
    MixSpec spec;
    REQUIRE_THROWS_AS(mix(streams, spec, tokenizer, 100), ExhaustedStream);
    spec.strict = false;
    auto mixed = mix(streams, spec, tokenizer, 100);
    for (const auto& record : mixed) REQUIRE(record.objective == Objective::SrcOnly);
}

TEST_CASE("greedy packing fits two records and pads the tail") {
    ByteFallbackTokenizer tokenizer;
    std::string body(998, 'x');  // 998 bytes + eos = 999... keep sizes explicit
    TrainingRecord a = text_record(Objective::SrcOnly, std::string(999, 'x'));
    TrainingRecord b = text_record(Objective::SrcOnly, std::string(999, 'y'));
    REQUIRE(tokens_of(a, tokenizer) == 1000);
    auto sequences = pack({a, b}, tokenizer, 2048);
    REQUIRE(sequences.size() == 1);
    REQUIRE(sequences[0].token_ids.size() == 2048);
    REQUIRE(sequences[0].boundaries == std::vector<std::size_t>{0, 1000});
    for (std::size_t i = 2000; i < 2048; ++i) {
        REQUIRE(sequences[0].token_ids[i] == tokenizer.pad_id());
        REQUIRE_FALSE(sequences[0].loss_mask[i]);
    }
}

TEST_CASE("oversized records split across windows") {
    ByteFallbackTokenizer tokenizer;
    TrainingRecord big = text_record(Objective::SrcOnly, std::string(4999, 'z'));
    REQUIRE(tokens_of(big, tokenizer) == 5000);
    auto sequences = pack({big}, tokenizer, 2048);
    REQUIRE(sequences.size() == 3);  // ceil(5000 / 2048)
    REQUIRE(sequences[2].token_ids.size() == 2048);
    std::size_t content = 5000 - 2 * 2048;
    for (std::size_t i = 0; i < content; ++i) REQUIRE(sequences[2].loss_mask[i]);
    for (std::size_t i = content; i < 2048; ++i) REQUIRE_FALSE(sequences[2].loss_mask[i]);
}

TEST_CASE("dobf mask spans exactly the frozen code segment") {
    ByteFallbackTokenizer tokenizer;
    TrainingRecord dobf;
    dobf.objective = Objective::Dobf;
    dobf.segments = {{"frozen code here", false},
                     {kSrcToObf, true},
                     {"VAR_0 name", true},
                     {kEos, true}};
    auto sequences = pack({dobf}, tokenizer, 64);
    REQUIRE(sequences.size() == 1);
    std::size_t code_tokens = tokenizer.encode("frozen code here").size();
    std::size_t trainable_tokens =
        1 + tokenizer.encode("VAR_0 name").size() + 1;  // sentinel + map + eos
    for (std::size_t i = 0; i < code_tokens; ++i) REQUIRE_FALSE(sequences[0].loss_mask[i]);
    for (std::size_t i = code_tokens; i < code_tokens + trainable_tokens; ++i)
        REQUIRE(sequences[0].loss_mask[i]);
    for (std::size_t i = code_tokens + trainable_tokens; i < 64; ++i)
        REQUIRE_FALSE(sequences[0].loss_mask[i]);
}

TEST_CASE("shard writing round-trips") {
    ByteFallbackTokenizer tokenizer;
    auto sequences = pack({text_record(Objective::SrcOnly, "hello world"),
                           text_record(Objective::ObfOnly, "VAR_0 VAR_1")},
                          tokenizer, 32);
    std::stringstream buffer;
    write_shard(buffer, sequences);
    auto back = read_shard(buffer, 32, sequences.size());
    REQUIRE(back.size() == sequences.size());
    for (std::size_t s = 0; s < back.size(); ++s) {
        REQUIRE(back[s].token_ids == sequences[s].token_ids);
        REQUIRE(back[s].loss_mask == sequences[s].loss_mask);
    }
}
