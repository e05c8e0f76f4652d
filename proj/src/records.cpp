#include "codeveil/records.hpp"

#include "codeveil/errors.hpp"
#include "codeveil/tokens.hpp"

namespace codeveil {

std::string_view objective_name(Objective objective) {
    switch (objective) {
        case Objective::PairSrcToObf: return "pair_src_to_obf";
        case Objective::PairObfToSrc: return "pair_obf_to_src";
        case Objective::ObfOnly: return "obf_only";
        case Objective::SrcOnly: return "src_only";
        case Objective::Dobf: return "dobf";
    }
    return "src_only";
}

std::optional<Objective> objective_from_name(std::string_view name) {
    if (name == "pair_src_to_obf") return Objective::PairSrcToObf;
    if (name == "pair_obf_to_src") return Objective::PairObfToSrc;
    if (name == "obf_only") return Objective::ObfOnly;
    if (name == "src_only") return Objective::SrcOnly;
    if (name == "dobf") return Objective::Dobf;
    return std::nullopt;
}

std::string serialize_map(const IdentifierMap& map) {
    std::string out;
    for (const auto& entry : map.entries()) {
        if (!out.empty()) out += " | ";
        out += entry.placeholder.render();
        out += ' ';
        out += entry.original;
    }
    return out;
}

TrainingRecord make_pair_record(const std::string& src, const ObfuscationResult& result,
                                Objective direction) {
    if (direction != Objective::PairSrcToObf && direction != Objective::PairObfToSrc)
        throw ConfigError("pair records require a pair direction");
    if (deobfuscate(result.obfuscated, result.map) != src)
        throw RoundTripFailure("identifier map does not invert the obfuscated text");
    TrainingRecord record;
    record.objective = direction;
    if (direction == Objective::PairSrcToObf)
        record.segments = {{src, true}, {kSrcToObf, true}, {result.obfuscated, true},
                           {kEos, true}};
    else
        record.segments = {{result.obfuscated, true}, {kObfToSrc, true}, {src, true},
                           {kEos, true}};
    record.meta["obfuscation_proportion"] = result.realized_proportion;
    record.meta["degenerate"] = result.map.empty();
    return record;
}

void flip_pair_direction(TrainingRecord& record) {
    if (record.objective == Objective::PairSrcToObf) {
        record.objective = Objective::PairObfToSrc;
        record.segments = {record.segments[2], {kObfToSrc, true}, record.segments[0],
                           record.segments[3]};
    } else if (record.objective == Objective::PairObfToSrc) {
        record.objective = Objective::PairSrcToObf;
        record.segments = {record.segments[2], {kSrcToObf, true}, record.segments[0],
                           record.segments[3]};
    } else {
        throw ConfigError("only pair records have a direction");
    }
}

TrainingRecord make_dobf_record(const ObfuscationResult& result) {
    if (result.map.empty())
        throw EmptyMap("deobfuscation records require a non-empty identifier map");
    TrainingRecord record;
    record.objective = Objective::Dobf;
    record.segments = {{result.obfuscated, false},
                       {kSrcToObf, true},
                       {serialize_map(result.map), true},
                       {kEos, true}};
    record.meta["map_size"] = result.map.size();
    return record;
}

TrainingRecord make_src_only_record(const std::string& src) {
    TrainingRecord record;
    record.objective = Objective::SrcOnly;
    record.segments = {{src, true}, {kEos, true}};
    return record;
}

TrainingRecord make_obf_only_record(const ObfuscationResult& result) {
    TrainingRecord record;
    record.objective = Objective::ObfOnly;
    record.segments = {{result.obfuscated, true}, {kEos, true}};
    return record;
}

}  // namespace codeveil
