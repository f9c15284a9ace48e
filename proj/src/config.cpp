#include "driftlab/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace driftlab {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
  throw std::invalid_argument("config: malformed value for '" + key + "': '" + value + "'");
}

long long parse_int(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &pos);
  } catch (const std::exception&) {
    bad_value(key, value);
  }
  if (pos != value.size()) bad_value(key, value);
  return v;
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  std::uint64_t v = 0;
  if (!value.empty() && value[0] == '-') bad_value(key, value);
  try {
    v = std::stoull(value, &pos);
  } catch (const std::exception&) {
    bad_value(key, value);
  }
  if (pos != value.size()) bad_value(key, value);
  return v;
}

double parse_real(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    bad_value(key, value);
  }
  if (pos != value.size()) bad_value(key, value);
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  bad_value(key, value);
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "group",      "method",        "n",           "N",
      "seed",       "spectral_M",    "spectral_h",  "entropy_n_max",
      "key_grid",   "key_audit_tol", "render_radius", "stroke_width",
      "canvas_size", "threads",      "budget",      "out",
      "results_path", "json"};
  return keys;
}

void apply_config_entry(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "group")
    c.group = value;
  else if (key == "method")
    c.method = value;
  else if (key == "n")
    c.n = static_cast<int>(parse_int(key, value));
  else if (key == "N")
    c.N = parse_int(key, value);
  else if (key == "seed")
    c.seed = parse_uint(key, value);
  else if (key == "spectral_M")
    c.spectral_M = static_cast<int>(parse_int(key, value));
  else if (key == "spectral_h")
    c.spectral_h = parse_real(key, value);
  else if (key == "entropy_n_max")
    c.entropy_n_max = static_cast<int>(parse_int(key, value));
  else if (key == "key_grid")
    c.key_grid = parse_real(key, value);
  else if (key == "key_audit_tol")
    c.key_audit_tol = parse_real(key, value);
  else if (key == "render_radius")
    c.render_radius = static_cast<int>(parse_int(key, value));
  else if (key == "stroke_width")
    c.stroke_width = parse_real(key, value);
  else if (key == "canvas_size")
    c.canvas_size = static_cast<int>(parse_int(key, value));
  else if (key == "threads")
    c.threads = static_cast<int>(parse_int(key, value));
  else if (key == "budget")
    c.budget = parse_uint(key, value);
  else if (key == "out")
    c.out = value;
  else if (key == "results_path")
    c.results_path = value;
  else if (key == "json")
    c.json = parse_bool(key, value);
  else
    throw std::invalid_argument("config: unknown key '" + key + "'");
}

void validate_config(const RunConfig& c) {
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("config: " + what);
  };
  if (c.group.empty()) fail("group must be nonempty");
  if (c.method != "mc" && c.method != "exact" && c.method != "spectral")
    fail("method must be one of mc, exact, spectral");
  if (c.n < 1) fail("n must be >= 1");
  if (c.N < 1) fail("N must be >= 1");
  if (c.spectral_M < 1) fail("spectral_M must be >= 1");
  if (!(c.spectral_h > 0.0)) fail("spectral_h must be positive");
  if (c.entropy_n_max < 1) fail("entropy_n_max must be >= 1");
  if (!(c.key_grid > 0.0)) fail("key_grid must be positive");
  if (!(c.key_audit_tol > 0.0)) fail("key_audit_tol must be positive");
  if (c.render_radius < 0) fail("render_radius must be >= 0");
  if (!(c.stroke_width > 0.0)) fail("stroke_width must be positive");
  if (c.canvas_size < 1) fail("canvas_size must be >= 1");
  if (c.threads < 0) fail("threads must be >= 0");
}

RunConfig parse_config_text(const std::string& text, const RunConfig& base) {
  RunConfig c = base;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " is not 'key = value'");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    try {
      apply_config_entry(c, key, value);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string(e.what()) + " (line " +
                                  std::to_string(line_no) + ")");
    }
  }
  validate_config(c);
  return c;
}

RunConfig parse_config_file(const std::string& path, const RunConfig& base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), base);
}

std::string config_to_text(const RunConfig& c) {
  std::ostringstream out;
  char real[64];
  out << "group = " << c.group << "\n";
  out << "method = " << c.method << "\n";
  out << "n = " << c.n << "\n";
  out << "N = " << c.N << "\n";
  out << "seed = " << c.seed << "\n";
  out << "spectral_M = " << c.spectral_M << "\n";
  std::snprintf(real, sizeof real, "%.17g", c.spectral_h);
  out << "spectral_h = " << real << "\n";
  out << "entropy_n_max = " << c.entropy_n_max << "\n";
  std::snprintf(real, sizeof real, "%.17g", c.key_grid);
  out << "key_grid = " << real << "\n";
  std::snprintf(real, sizeof real, "%.17g", c.key_audit_tol);
  out << "key_audit_tol = " << real << "\n";
  out << "render_radius = " << c.render_radius << "\n";
  std::snprintf(real, sizeof real, "%.17g", c.stroke_width);
  out << "stroke_width = " << real << "\n";
  out << "canvas_size = " << c.canvas_size << "\n";
  out << "threads = " << c.threads << "\n";
  out << "budget = " << c.budget << "\n";
  out << "out = " << c.out << "\n";
  out << "results_path = " << c.results_path << "\n";
  out << "json = " << (c.json ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace driftlab
