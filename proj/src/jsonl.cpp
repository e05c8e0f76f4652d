#include "codeveil/jsonl.hpp"

#include <istream>
#include <ostream>

#include "json.hpp"

namespace codeveil {

using nlohmann::ordered_json;

std::string document_to_json(const SourceDocument& doc) {
    ordered_json j;
    j["path"] = doc.path;
    j["language"] = std::string(language_name(doc.language));
    j["fork_count"] = doc.fork_count;
    j["content"] = doc.content;
    return j.dump();
}

std::optional<SourceDocument> document_from_json(const std::string& line) {
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (!j.contains("path") || !j.contains("language") || !j.contains("content"))
        return std::nullopt;
    if (!j["path"].is_string() || !j["language"].is_string() || !j["content"].is_string())
        return std::nullopt;
    auto lang = language_from_name(j["language"].get<std::string>());
    if (!lang) return std::nullopt;
    SourceDocument doc{*lang, j["content"].get<std::string>(), j["path"].get<std::string>(), 0};
    if (j.contains("fork_count") && j["fork_count"].is_number())
        doc.fork_count = j["fork_count"].get<long>();
    return doc;
}

std::vector<SourceDocument> read_documents(std::istream& in, std::size_t* malformed) {
    std::vector<SourceDocument> docs;
    std::size_t bad = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (auto doc = document_from_json(line))
            docs.push_back(std::move(*doc));
        else
            ++bad;
    }
    if (malformed) *malformed = bad;
    return docs;
}

void write_documents(std::ostream& out, const std::vector<SourceDocument>& docs) {
    for (const auto& doc : docs) out << document_to_json(doc) << '\n';
}

std::string reject_to_json(const std::string& path, const std::string& reason) {
    ordered_json j;
    j["path"] = path;
    j["reason"] = reason;
    return j.dump();
}

std::string record_to_json(const TrainingRecord& record) {
    ordered_json j;
    j["objective"] = std::string(objective_name(record.objective));
    j["segments"] = ordered_json::array();
    for (const auto& segment : record.segments)
        j["segments"].push_back({{"text", segment.text}, {"trainable", segment.trainable}});
    j["meta"] = record.meta;
    return j.dump();
}

std::optional<TrainingRecord> record_from_json(const std::string& line) {
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (!j.contains("objective") || !j.contains("segments")) return std::nullopt;
    auto objective = objective_from_name(j["objective"].get<std::string>());
    if (!objective) return std::nullopt;
    TrainingRecord record;
    record.objective = *objective;
    for (const auto& s : j["segments"]) {
        if (!s.contains("text") || !s.contains("trainable")) return std::nullopt;
        record.segments.push_back({s["text"].get<std::string>(), s["trainable"].get<bool>()});
    }
    if (j.contains("meta")) record.meta = j["meta"];
    return record;
}

std::vector<TrainingRecord> read_records(std::istream& in, std::size_t* malformed) {
    std::vector<TrainingRecord> records;
    std::size_t bad = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (auto record = record_from_json(line))
            records.push_back(std::move(*record));
        else
            ++bad;
    }
    if (malformed) *malformed = bad;
    return records;
}

}  // namespace codeveil
