#include "codeveil/pipeline.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <random>

#include "codeveil/errors.hpp"
#include "codeveil/jsonl.hpp"
#include "codeveil/queries.hpp"
#include "codeveil/syntax.hpp"

namespace codeveil {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t content_hash(const std::string& content) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : content) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

/// Compiled rule files are immutable after load and safe to share across
/// threads; each extraction uses its own cursor.
const QuerySet& cached_queries(LanguageId lang) {
    static std::mutex mutex;
    static std::map<LanguageId, QuerySet> cache;
    std::scoped_lock lock(mutex);
    auto it = cache.find(lang);
    if (it == cache.end())
        it = cache.emplace(lang, QuerySet::load(lang, QuerySet::default_rules_dir())).first;
    return it->second;
}

bool language_enabled(const PipelineConfig& config, LanguageId lang) {
    if (config.languages.empty()) return true;
    return std::find(config.languages.begin(), config.languages.end(), lang) !=
           config.languages.end();
}

}  // namespace

nlohmann::ordered_json PipelineConfig::to_json() const {
    nlohmann::ordered_json j;
    j["global_seed"] = global_seed;
    j["languages"] = nlohmann::ordered_json::array();
    for (LanguageId lang : languages) j["languages"].push_back(std::string(language_name(lang)));
    if (fixed_p_obf) j["fixed_p_obf"] = *fixed_p_obf;
    j["import_sample_rate"] = import_sample_rate;
    j["shingle_size"] = shingle_size;
    j["dedup_threshold"] = dedup_threshold;
    j["permutations"] = permutations;
    j["lsh_bands"] = lsh_bands;
    j["mix"] = {mix_spec.source, mix_spec.obf_only, mix_spec.pairs, mix_spec.code_text};
    j["repeat_cap"] = mix_spec.repeat_cap;
    j["window"] = window;
    j["worker_count"] = worker_count;
    j["emit_dobf"] = emit_dobf;
    j["token_budget"] = token_budget;
    return j;
}

PipelineConfig PipelineConfig::from_json(const nlohmann::ordered_json& j) {
    PipelineConfig config;
    if (j.contains("global_seed")) config.global_seed = j["global_seed"].get<std::uint64_t>();
    if (j.contains("languages"))
        for (const auto& name : j["languages"]) {
            auto lang = language_from_name(name.get<std::string>());
            if (!lang) throw ConfigError("unknown language in config: " + name.get<std::string>());
            config.languages.push_back(*lang);
        }
    if (j.contains("fixed_p_obf")) config.fixed_p_obf = j["fixed_p_obf"].get<double>();
    if (j.contains("import_sample_rate"))
        config.import_sample_rate = j["import_sample_rate"].get<double>();
    if (j.contains("shingle_size")) config.shingle_size = j["shingle_size"].get<std::size_t>();
    if (j.contains("dedup_threshold"))
        config.dedup_threshold = j["dedup_threshold"].get<double>();
    if (j.contains("permutations")) config.permutations = j["permutations"].get<std::size_t>();
    if (j.contains("lsh_bands")) config.lsh_bands = j["lsh_bands"].get<std::size_t>();
    if (j.contains("mix")) {
        auto m = j["mix"];
        config.mix_spec.source = m.at(0).get<double>();
        config.mix_spec.obf_only = m.at(1).get<double>();
        config.mix_spec.pairs = m.at(2).get<double>();
        config.mix_spec.code_text = m.at(3).get<double>();
    }
    if (j.contains("repeat_cap")) config.mix_spec.repeat_cap = j["repeat_cap"].get<std::size_t>();
    if (j.contains("window")) config.window = j["window"].get<std::size_t>();
    if (j.contains("worker_count")) config.worker_count = j["worker_count"].get<std::size_t>();
    if (j.contains("emit_dobf")) config.emit_dobf = j["emit_dobf"].get<bool>();
    if (j.contains("token_budget")) config.token_budget = j["token_budget"].get<std::size_t>();
    return config;
}

nlohmann::ordered_json RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["input_per_language"] = input_per_language;
    auto stage = [](const StageCounts& c) {
        return nlohmann::ordered_json{
            {"input", c.input}, {"survivors", c.survivors}, {"rejects", c.rejects}};
    };
    j["filter"] = stage(filter);
    j["dedup"] = stage(dedup);
    j["obfuscate"] = stage(obfuscate);
    j["pairs_emitted"] = pairs_emitted;
    j["tokens_per_class"] = tokens_per_class;
    j["proportion_histogram"] = proportion_histogram;
    j["malformed_lines"] = malformed_lines;
    j["span_mismatches"] = span_mismatches;
    return j;
}

std::uint64_t per_document_seed(std::uint64_t global_seed, const std::string& content) {
    return splitmix64(global_seed ^ content_hash(content));
}

ObfuscationResult obfuscate_document(const SourceDocument& doc, const PipelineConfig& config) {
    std::uint64_t seed = per_document_seed(config.global_seed, doc.content);
    std::mt19937_64 rng(seed);

    ObfuscationConfig obf;
    obf.seed = splitmix64(seed);
    if (config.fixed_p_obf) {
        obf.p_obf = *config.fixed_p_obf;
    } else {
        std::uniform_real_distribution<double> draw(0.0, 0.9);
        obf.p_obf = draw(rng);
    }
    obf.import_sample_rate = config.import_sample_rate;
    std::bernoulli_distribution import_coin(config.import_sample_rate);
    obf.obfuscate_imports = import_coin(rng);

    SyntaxTree tree = parse_document(doc);
    auto occurrences = extract_identifiers(tree, cached_queries(doc.language), doc.content);
    return obfuscate(doc, occurrences, obf);
}

std::vector<SourceDocument> filter_stage(const std::vector<SourceDocument>& docs,
                                         const PipelineConfig& config, RunReport& report,
                                         std::vector<std::string>* reject_log) {
    std::vector<SourceDocument> survivors;
    report.filter.input = docs.size();
    for (const auto& doc : docs) {
        ++report.input_per_language[std::string(language_name(doc.language))];
        FilterDecision decision{false, "language-disabled"};
        if (language_enabled(config, doc.language)) decision = passes_filter(doc, config.rules);
        if (decision.passed) {
            survivors.push_back(doc);
        } else {
            ++report.filter.rejects;
            if (reject_log) reject_log->push_back(reject_to_json(doc.path, decision.reason));
        }
    }
    report.filter.survivors = survivors.size();
    return survivors;
}

std::vector<SourceDocument> dedup_stage(const std::vector<SourceDocument>& docs,
                                        const PipelineConfig& config, RunReport& report) {
    report.dedup.input = docs.size();
    DedupIndex index(config.permutations, config.lsh_bands, config.dedup_threshold);

    // Signatures in parallel, insertion order fixed by the input order.
    std::vector<MinHashSignature> signatures(docs.size());
    std::size_t workers = std::max<std::size_t>(config.worker_count, 1);
    std::vector<std::future<void>> futures;
    std::size_t chunk = (docs.size() + workers - 1) / std::max<std::size_t>(workers, 1);
    for (std::size_t w = 0; w < workers && w * chunk < docs.size(); ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            std::size_t end = std::min(docs.size(), (w + 1) * chunk);
            for (std::size_t i = w * chunk; i < end; ++i)
                signatures[i] = MinHashSignature(shingles(docs[i].content, config.shingle_size),
                                                 config.permutations);
        }));
    }
    for (auto& f : futures) f.get();

    std::vector<SourceDocument> survivors;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        if (index.insert(signatures[i]))
            survivors.push_back(docs[i]);
        else
            ++report.dedup.rejects;
    }
    report.dedup.survivors = survivors.size();
    return survivors;
}

std::vector<ObfuscatedDocument> obfuscate_stage(const std::vector<SourceDocument>& docs,
                                                const PipelineConfig& config, RunReport& report) {
    report.obfuscate.input = docs.size();
    std::vector<std::optional<ObfuscationResult>> results(docs.size());
    std::vector<char> failed(docs.size(), 0);
    std::size_t workers = std::max<std::size_t>(config.worker_count, 1);
    std::size_t chunk = (docs.size() + workers - 1) / std::max<std::size_t>(workers, 1);
    std::vector<std::future<void>> futures;
    for (std::size_t w = 0; w < workers && w * chunk < docs.size(); ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            std::size_t end = std::min(docs.size(), (w + 1) * chunk);
            for (std::size_t i = w * chunk; i < end; ++i) {
                try {
                    results[i] = obfuscate_document(docs[i], config);
                } catch (const Error&) {
                    failed[i] = 1;
                }
            }
        }));
    }
    for (auto& f : futures) f.get();

    std::vector<ObfuscatedDocument> out;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        if (failed[i] || !results[i]) {
            ++report.obfuscate.rejects;
            ++report.span_mismatches;
            continue;
        }
        int bucket = std::min(9, static_cast<int>(results[i]->realized_proportion * 10.0));
        ++report.proportion_histogram[static_cast<std::size_t>(bucket)];
        out.push_back({docs[i], std::move(*results[i])});
    }
    report.obfuscate.survivors = out.size();
    return out;
}

std::array<std::vector<TrainingRecord>, kMixClassCount> assemble_streams(
    const std::vector<ObfuscatedDocument>& docs, const PipelineConfig& config,
    RunReport& report) {
    std::array<std::vector<TrainingRecord>, kMixClassCount> streams;
    std::mt19937_64 rng(splitmix64(config.global_seed ^ 0xa55e3b1eull));
    std::bernoulli_distribution direction_coin(0.5);
    for (const auto& item : docs) {
        streams[static_cast<std::size_t>(MixClass::Source)].push_back(
            make_src_only_record(item.doc.content));
        streams[static_cast<std::size_t>(MixClass::ObfOnly)].push_back(
            make_obf_only_record(item.result));
        Objective direction =
            direction_coin(rng) ? Objective::PairSrcToObf : Objective::PairObfToSrc;
        if (config.emit_dobf) {
            if (!item.result.map.empty())
                streams[static_cast<std::size_t>(MixClass::Pairs)].push_back(
                    make_dobf_record(item.result));
        } else {
            streams[static_cast<std::size_t>(MixClass::Pairs)].push_back(
                make_pair_record(item.doc.content, item.result, direction));
            ++report.pairs_emitted;
        }
        // No natural-language channel is sourced here; plain source stands in.
        streams[static_cast<std::size_t>(MixClass::CodeText)].push_back(
            make_src_only_record(item.doc.content));
    }
    return streams;
}

PipelineOutput run_pipeline(const std::vector<SourceDocument>& docs, const PipelineConfig& config,
                            const TokenizerAdapter& tokenizer) {
    PipelineOutput output;
    auto filtered = filter_stage(docs, config, output.report);
    auto unique = dedup_stage(filtered, config, output.report);
    auto obfuscated = obfuscate_stage(unique, config, output.report);
    auto streams = assemble_streams(obfuscated, config, output.report);

    std::vector<TrainingRecord> ordered;
    if (config.token_budget > 0) {
        MixSpec spec = config.mix_spec;
        spec.seed = splitmix64(config.global_seed ^ 0x317eca11ull);
        ordered = mix(streams, spec, tokenizer, config.token_budget);
    } else {
        for (auto& stream : streams)
            for (auto& record : stream) ordered.push_back(std::move(record));
    }
    for (const auto& record : ordered) {
        std::size_t tokens = 0;
        for (const auto& segment : record.segments)
            tokens += tokenizer.encode(segment.text).size();
        output.report.tokens_per_class[std::string(objective_name(record.objective))] += tokens;
    }
    output.sequences = pack(ordered, tokenizer, config.window);
    return output;
}

}  // namespace codeveil
