#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "codeveil/records.hpp"
#include "codeveil/tokens.hpp"

namespace codeveil {

/// Objective classes mixed into the training stream.
enum class MixClass { Source = 0, ObfOnly = 1, Pairs = 2, CodeText = 3 };
inline constexpr std::size_t kMixClassCount = 4;

/// Token-unit weights per class (arbitrary units, ratios matter).
struct MixSpec {
    double source = 64.0;
    double obf_only = 30.0;
    double pairs = 58.0;
    double code_text = 30.0;
    std::uint64_t seed = 0;
    std::size_t repeat_cap = 3;
    /// Strict mode errors when a positive-weight stream runs dry; lenient
    /// mode re-weights and continues.
    bool strict = true;

    std::array<double, kMixClassCount> weights() const {
        return {source, obf_only, pairs, code_text};
    }
};

/// Interleaves the four class streams so long-run emitted token proportions
/// converge to the spec weights.  Pair records flip direction with a fair
/// seeded coin at each emission.  No record is emitted more than repeat_cap
/// times.  Stops once token_budget tokens (per the adapter) are emitted.
std::vector<TrainingRecord> mix(
    const std::array<std::vector<TrainingRecord>, kMixClassCount>& streams, const MixSpec& spec,
    const TokenizerAdapter& tokenizer, std::size_t token_budget);

}  // namespace codeveil
