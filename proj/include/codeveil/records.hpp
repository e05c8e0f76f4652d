#pragma once

#include <string>
#include <vector>

#include "codeveil/obfuscator.hpp"
#include "json.hpp"

namespace codeveil {

/// Training objective of a record.
enum class Objective { PairSrcToObf, PairObfToSrc, ObfOnly, SrcOnly, Dobf };

std::string_view objective_name(Objective objective);
std::optional<Objective> objective_from_name(std::string_view name);

/// A contiguous piece of a training record; `trainable` controls the loss
/// mask over its tokens.
struct Segment {
    std::string text;
    bool trainable = true;
};

struct TrainingRecord {
    Objective objective = Objective::SrcOnly;
    std::vector<Segment> segments;
    nlohmann::ordered_json meta;
};

/// Builds a bidirectional translation pair: [a, sentinel, b, eos], all
/// trainable.  Validates that the map inverts the obfuscated text back to
/// the source before emitting; throws RoundTripFailure otherwise.
TrainingRecord make_pair_record(const std::string& src, const ObfuscationResult& result,
                                Objective direction);

/// Swaps the direction of a pair record in place.
void flip_pair_direction(TrainingRecord& record);

/// Builds a deobfuscation record: [obfuscated (frozen), sentinel, map
/// serialization, eos], with the loss mask open only over map and eos.
/// Throws EmptyMap when the result renamed nothing.
TrainingRecord make_dobf_record(const ObfuscationResult& result);

/// Single-segment records for the two monolingual objective classes.
TrainingRecord make_src_only_record(const std::string& src);
TrainingRecord make_obf_only_record(const ObfuscationResult& result);

/// "PLACEHOLDER original | PLACEHOLDER original | ..." in map entry order.
std::string serialize_map(const IdentifierMap& map);

}  // namespace codeveil
