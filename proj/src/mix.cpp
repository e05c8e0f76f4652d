#include "codeveil/mix.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "codeveil/errors.hpp"

namespace codeveil {
namespace {

std::size_t record_tokens(const TrainingRecord& record, const TokenizerAdapter& tokenizer) {
    std::size_t total = 0;
    for (const auto& segment : record.segments) total += tokenizer.encode(segment.text).size();
    return total;
}

/// Cycles through one class's records in seeded-shuffled order, each record
/// at most `cap` times.
class ClassCursor {
public:
    ClassCursor(std::size_t count, std::size_t cap, std::mt19937_64& rng)
        : cap_(cap), order_(count) {
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::shuffle(order_.begin(), order_.end(), rng);
    }

    bool exhausted() const { return cap_ == 0 || order_.empty() || rounds_ >= cap_; }

    std::size_t next() {
        std::size_t idx = order_[pos_++];
        if (pos_ == order_.size()) {
            pos_ = 0;
            ++rounds_;
        }
        return idx;
    }

private:
    std::size_t cap_;
    std::vector<std::size_t> order_;
    std::size_t pos_ = 0;
    std::size_t rounds_ = 0;
};

}  // namespace

std::vector<TrainingRecord> mix(
    const std::array<std::vector<TrainingRecord>, kMixClassCount>& streams, const MixSpec& spec,
    const TokenizerAdapter& tokenizer, std::size_t token_budget) {
    auto weights = spec.weights();
    for (double w : weights)
        if (w < 0.0) throw ConfigError("mix weights must be non-negative");
    if (std::accumulate(weights.begin(), weights.end(), 0.0) <= 0.0)
        throw ConfigError("at least one mix weight must be positive");
    for (std::size_t c = 0; c < kMixClassCount; ++c)
        if (weights[c] > 0.0 && streams[c].empty()) {
            if (spec.strict)
                throw ExhaustedStream("empty stream with positive weight: class " +
                                      std::to_string(c));
            weights[c] = 0.0;
        }

    // Cache per-record token counts so repeats are free.
    std::array<std::vector<std::size_t>, kMixClassCount> token_counts;
    for (std::size_t c = 0; c < kMixClassCount; ++c) {
        token_counts[c].reserve(streams[c].size());
        for (const auto& record : streams[c])
            token_counts[c].push_back(record_tokens(record, tokenizer));
    }

    std::mt19937_64 rng(spec.seed);
    std::array<ClassCursor, kMixClassCount> cursors = {
        ClassCursor(streams[0].size(), spec.repeat_cap, rng),
        ClassCursor(streams[1].size(), spec.repeat_cap, rng),
        ClassCursor(streams[2].size(), spec.repeat_cap, rng),
        ClassCursor(streams[3].size(), spec.repeat_cap, rng)};
    std::bernoulli_distribution direction_coin(0.5);

    std::array<std::size_t, kMixClassCount> emitted_tokens{};
    std::size_t total_tokens = 0;
    std::vector<TrainingRecord> out;

    while (total_tokens < token_budget) {
        double weight_sum = std::accumulate(weights.begin(), weights.end(), 0.0);
        if (weight_sum <= 0.0) break;

        // Deficit-proportional draw: classes furthest below their target
        // share are favoured, which pins long-run proportions to the spec.
        std::array<double, kMixClassCount> score{};
        double score_sum = 0.0;
        for (std::size_t c = 0; c < kMixClassCount; ++c) {
            if (weights[c] <= 0.0) continue;
            double target = weights[c] / weight_sum * (static_cast<double>(total_tokens) + 1.0);
            score[c] = std::max(target - static_cast<double>(emitted_tokens[c]), 0.0) +
                       1e-9 * weights[c];
            score_sum += score[c];
        }
        std::uniform_real_distribution<double> pick(0.0, score_sum);
        double ticket = pick(rng);
        std::size_t chosen = 0;
        for (std::size_t c = 0; c < kMixClassCount; ++c) {
            if (weights[c] <= 0.0) continue;
            chosen = c;
            if (ticket < score[c]) break;
            ticket -= score[c];
        }

        if (cursors[chosen].exhausted()) {
            if (spec.strict)
                throw ExhaustedStream("stream exhausted under repeat cap: class " +
                                      std::to_string(chosen));
            weights[chosen] = 0.0;
            continue;
        }
        std::size_t idx = cursors[chosen].next();
        TrainingRecord record = streams[chosen][idx];
        if (chosen == static_cast<std::size_t>(MixClass::Pairs)) {
            bool want_src_to_obf = direction_coin(rng);
            bool is_src_to_obf = record.objective == Objective::PairSrcToObf;
            if (want_src_to_obf != is_src_to_obf) flip_pair_direction(record);
        }
        std::size_t tokens = token_counts[chosen][idx];
        emitted_tokens[chosen] += tokens;
        total_tokens += tokens;
        out.push_back(std::move(record));
    }
    return out;
}

}  // namespace codeveil
