#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "codeveil/filter.hpp"
#include "codeveil/language.hpp"
#include "codeveil/minhash.hpp"
#include "codeveil/mix.hpp"
#include "codeveil/obfuscator.hpp"
#include "codeveil/pack.hpp"
#include "json.hpp"

namespace codeveil {

/// End-to-end run configuration.  Serialized into every output sidecar so a
/// run can be reproduced from its artifacts.
struct PipelineConfig {
    std::uint64_t global_seed = 0;
    std::vector<LanguageId> languages;  // empty = all seven
    /// Fixed p_obf when set; otherwise drawn uniformly in [0, 0.9] per file.
    std::optional<double> fixed_p_obf;
    double import_sample_rate = 0.25;
    std::vector<FilterRule> rules = default_filter_rules();
    std::size_t shingle_size = 20;
    double dedup_threshold = 0.75;
    std::size_t permutations = 128;
    std::size_t lsh_bands = 16;
    MixSpec mix_spec;
    std::size_t window = 2048;
    std::size_t worker_count = 1;
    bool emit_dobf = false;
    std::size_t token_budget = 0;  // 0 = one pass over the records, no mixing

    nlohmann::ordered_json to_json() const;
    static PipelineConfig from_json(const nlohmann::ordered_json& j);
};

/// Per-stage survivor/reject bookkeeping; input == survivors + rejects.
struct StageCounts {
    std::size_t input = 0;
    std::size_t survivors = 0;
    std::size_t rejects = 0;
};

struct RunReport {
    std::map<std::string, std::size_t> input_per_language;
    StageCounts filter;
    StageCounts dedup;
    StageCounts obfuscate;
    std::size_t pairs_emitted = 0;
    std::map<std::string, std::size_t> tokens_per_class;
    std::vector<std::size_t> proportion_histogram = std::vector<std::size_t>(10, 0);
    std::size_t malformed_lines = 0;
    std::size_t span_mismatches = 0;

    nlohmann::ordered_json to_json() const;
};

/// Derives the per-document obfuscation seed from the run seed and the
/// document bytes, so results do not depend on corpus order.
std::uint64_t per_document_seed(std::uint64_t global_seed, const std::string& content);

/// Decides per document whether imports are obfuscated (seeded Bernoulli at
/// import_sample_rate) and which p_obf applies, then obfuscates.
ObfuscationResult obfuscate_document(const SourceDocument& doc, const PipelineConfig& config);

/// Stage drivers.  Each returns survivors and updates the report.
std::vector<SourceDocument> filter_stage(const std::vector<SourceDocument>& docs,
                                         const PipelineConfig& config, RunReport& report,
                                         std::vector<std::string>* reject_log = nullptr);
std::vector<SourceDocument> dedup_stage(const std::vector<SourceDocument>& docs,
                                        const PipelineConfig& config, RunReport& report);

struct ObfuscatedDocument {
    SourceDocument doc;
    ObfuscationResult result;
};
std::vector<ObfuscatedDocument> obfuscate_stage(const std::vector<SourceDocument>& docs,
                                                const PipelineConfig& config, RunReport& report);

/// Builds the four class streams (pairs alternate direction; the code-text
/// class reuses source records, standing in for the natural-language channel
/// this tool does not source).
std::array<std::vector<TrainingRecord>, kMixClassCount> assemble_streams(
    const std::vector<ObfuscatedDocument>& docs, const PipelineConfig& config, RunReport& report);

struct PipelineOutput {
    std::vector<PackedSequence> sequences;
    RunReport report;
};

/// filter -> dedup -> obfuscate -> assemble -> mix -> pack.
PipelineOutput run_pipeline(const std::vector<SourceDocument>& docs,
                            const PipelineConfig& config, const TokenizerAdapter& tokenizer);

}  // namespace codeveil
