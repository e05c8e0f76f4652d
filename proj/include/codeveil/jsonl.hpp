#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "codeveil/language.hpp"
#include "codeveil/records.hpp"

namespace codeveil {

/// One document line: {path, language, fork_count, content}.
std::string document_to_json(const SourceDocument& doc);
/// Returns nullopt for a malformed line (bad JSON, unknown language, or
/// missing fields) instead of throwing; callers count and skip.
std::optional<SourceDocument> document_from_json(const std::string& line);

/// Reads every well-formed document line; `malformed` (when given) receives
/// the count of skipped lines.
std::vector<SourceDocument> read_documents(std::istream& in, std::size_t* malformed = nullptr);
void write_documents(std::ostream& out, const std::vector<SourceDocument>& docs);

/// Reject-log line: {path, reason}.
std::string reject_to_json(const std::string& path, const std::string& reason);

/// Record line: {objective, segments: [{text, trainable}], meta}.
std::string record_to_json(const TrainingRecord& record);
std::optional<TrainingRecord> record_from_json(const std::string& line);
std::vector<TrainingRecord> read_records(std::istream& in, std::size_t* malformed = nullptr);

}  // namespace codeveil
