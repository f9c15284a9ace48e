#pragma once

#include <string>
#include <vector>

#include "driftlab/config.hpp"

#include "json.hpp"

namespace driftlab {

// One persisted run: schema version, build id, the full RunConfig it ran
// with, and a command-specific numeric payload.
struct ResultRecord {
  int schema_version = 0;
  std::string build_id;
  std::string command;
  std::string group_id;
  RunConfig config;
  nlohmann::json payload;
  double wallclock_seconds = 0.0;
};

// Fills schema_version and build_id from the compiled-in values.
ResultRecord make_record(const std::string& command, const std::string& group_id,
                         const RunConfig& config, nlohmann::json payload,
                         double wallclock_seconds);

nlohmann::json record_to_json(const ResultRecord& record);
ResultRecord record_from_json(const nlohmann::json& j);

nlohmann::json config_to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

// Append-only JSON-lines store.  Appending validates the existing file
// first and refuses to touch a corrupt one; all errors name the offending
// line.  Round-trips are lossless (doubles use shortest exact form).
void append_results(const std::string& path, const std::vector<ResultRecord>& records);
std::vector<ResultRecord> load_results(const std::string& path);

}  // namespace driftlab
