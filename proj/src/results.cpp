#include "driftlab/results.hpp"

#include <fstream>
#include <stdexcept>

#include "driftlab/version.hpp"

namespace driftlab {

namespace {

using nlohmann::json;

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw std::runtime_error(std::string("missing field '") + key + "'");
  return j.at(key).get<T>();
}

}  // namespace

ResultRecord make_record(const std::string& command, const std::string& group_id,
                         const RunConfig& config, nlohmann::json payload,
                         double wallclock_seconds) {
  ResultRecord r;
  r.schema_version = kSchemaVersion;
  r.build_id = kBuildId;
  r.command = command;
  r.group_id = group_id;
  r.config = config;
  r.payload = std::move(payload);
  r.wallclock_seconds = wallclock_seconds;
  return r;
}

nlohmann::json config_to_json(const RunConfig& c) {
  return json{{"group", c.group},
              {"method", c.method},
              {"n", c.n},
              {"N", c.N},
              {"seed", c.seed},
              {"spectral_M", c.spectral_M},
              {"spectral_h", c.spectral_h},
              {"entropy_n_max", c.entropy_n_max},
              {"key_grid", c.key_grid},
              {"key_audit_tol", c.key_audit_tol},
              {"render_radius", c.render_radius},
              {"stroke_width", c.stroke_width},
              {"canvas_size", c.canvas_size},
              {"threads", c.threads},
              {"budget", c.budget},
              {"out", c.out},
              {"results_path", c.results_path},
              {"json", c.json}};
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  c.group = field<std::string>(j, "group");
  c.method = field<std::string>(j, "method");
  c.n = field<int>(j, "n");
  c.N = field<std::int64_t>(j, "N");
  c.seed = field<std::uint64_t>(j, "seed");
  c.spectral_M = field<int>(j, "spectral_M");
  c.spectral_h = field<double>(j, "spectral_h");
  c.entropy_n_max = field<int>(j, "entropy_n_max");
  c.key_grid = field<double>(j, "key_grid");
  c.key_audit_tol = field<double>(j, "key_audit_tol");
  c.render_radius = field<int>(j, "render_radius");
  c.stroke_width = field<double>(j, "stroke_width");
  c.canvas_size = field<int>(j, "canvas_size");
  c.threads = field<int>(j, "threads");
  c.budget = field<std::uint64_t>(j, "budget");
  c.out = field<std::string>(j, "out");
  c.results_path = field<std::string>(j, "results_path");
  c.json = field<bool>(j, "json");
  return c;
}

nlohmann::json record_to_json(const ResultRecord& r) {
  return json{{"schema_version", r.schema_version},
              {"build_id", r.build_id},
              {"command", r.command},
              {"group", r.group_id},
              {"config", config_to_json(r.config)},
              {"payload", r.payload},
              {"wallclock_seconds", r.wallclock_seconds}};
}

ResultRecord record_from_json(const nlohmann::json& j) {
  ResultRecord r;
  r.schema_version = field<int>(j, "schema_version");
  r.build_id = field<std::string>(j, "build_id");
  r.command = field<std::string>(j, "command");
  r.group_id = field<std::string>(j, "group");
  if (!j.contains("config")) throw std::runtime_error("missing field 'config'");
  r.config = config_from_json(j.at("config"));
  if (!j.contains("payload")) throw std::runtime_error("missing field 'payload'");
  r.payload = j.at("payload");
  r.wallclock_seconds = field<double>(j, "wallclock_seconds");
  return r;
}

std::vector<ResultRecord> load_results(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("results: cannot open '" + path + "'");
  std::vector<ResultRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      records.push_back(record_from_json(json::parse(line)));
    } catch (const std::exception& e) {
      throw std::runtime_error("results: malformed record at line " +
                               std::to_string(line_no) + " of '" + path +
                               "': " + e.what());
    }
  }
  return records;
}

void append_results(const std::string& path, const std::vector<ResultRecord>& records) {
  {
    std::ifstream probe(path);
    if (probe) {
      probe.close();
      load_results(path);  // refuse to append to a corrupt store
    }
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("results: cannot open '" + path + "' for append");
  for (const ResultRecord& r : records) out << record_to_json(r).dump() << "\n";
}

}  // namespace driftlab
