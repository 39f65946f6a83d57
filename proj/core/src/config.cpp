#include "chiralhop/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "chiralhop/csv.hpp"

namespace chiralhop {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

bool parse_double_strict(const std::string& text, double* out) {
  std::string t = trim(text);
  if (t.empty()) return false;
  const char* first = t.c_str();
  if (*first == '+') ++first;  // from_chars rejects a leading plus
  const char* last = t.c_str() + t.size();
  auto res = std::from_chars(first, last, *out);
  return res.ec == std::errc() && res.ptr == last && std::isfinite(*out);
}

bool parse_long_strict(const std::string& text, long* out) {
  std::string t = trim(text);
  if (t.empty()) return false;
  const char* first = t.c_str();
  if (*first == '+') ++first;
  const char* last = t.c_str() + t.size();
  auto res = std::from_chars(first, last, *out);
  return res.ec == std::errc() && res.ptr == last;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

ConfigError::ConfigError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message) {}

ConfigError::ConfigError(const std::string& source, const std::string& message)
    : std::runtime_error(source + ": " + message) {}

ConfigData ConfigData::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_string(buf.str(), path);
}

ConfigData ConfigData::from_string(const std::string& text, const std::string& name) {
  ConfigData data;
  data.source_ = name;
  std::string section;
  int line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']' || t.size() < 3)
        throw ConfigError(name, line_no, "malformed section header '" + t + "'");
      section = trim(t.substr(1, t.size() - 2));
      if (section.empty()) throw ConfigError(name, line_no, "empty section name");
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError(name, line_no, "expected 'key = value', got '" + t + "'");
    if (section.empty())
      throw ConfigError(name, line_no, "key outside of any [section]");
    Entry e;
    e.section = section;
    e.key = trim(t.substr(0, eq));
    e.value = trim(t.substr(eq + 1));
    e.line = line_no;
    if (e.key.empty()) throw ConfigError(name, line_no, "empty key");
    for (const Entry& prev : data.entries_)
      if (prev.section == e.section && prev.key == e.key)
        throw ConfigError(name, line_no,
                          "duplicate key '" + e.key + "' in [" + e.section + "] (first at line " +
                              std::to_string(prev.line) + ")");
    data.entries_.push_back(std::move(e));
  }
  return data;
}

const ConfigData::Entry* ConfigData::find(const std::string& section,
                                          const std::string& key) const {
  for (const Entry& e : entries_)
    if (e.section == section && e.key == key) {
      e.used = true;
      return &e;
    }
  return nullptr;
}

const ConfigData::Entry& ConfigData::require(const std::string& section,
                                             const std::string& key) const {
  const Entry* e = find(section, key);
  if (!e)
    throw ConfigError(source_, "missing required key '" + key + "' in [" + section + "]");
  return *e;
}

bool ConfigData::has(const std::string& section, const std::string& key) const {
  for (const Entry& e : entries_)
    if (e.section == section && e.key == key) return true;
  return false;
}

std::string ConfigData::get_string(const std::string& section, const std::string& key) const {
  return require(section, key).value;
}

std::string ConfigData::get_string_or(const std::string& section, const std::string& key,
                                      const std::string& fallback) const {
  const Entry* e = find(section, key);
  return e ? e->value : fallback;
}

double ConfigData::get_double(const std::string& section, const std::string& key) const {
  const Entry& e = require(section, key);
  double v;
  if (!parse_double_strict(e.value, &v))
    throw ConfigError(source_, e.line, "expected a number for '" + key + "', got '" + e.value + "'");
  return v;
}

double ConfigData::get_double_or(const std::string& section, const std::string& key,
                                 double fallback) const {
  return has(section, key) ? get_double(section, key) : fallback;
}

long ConfigData::get_int(const std::string& section, const std::string& key) const {
  const Entry& e = require(section, key);
  long v;
  if (!parse_long_strict(e.value, &v))
    throw ConfigError(source_, e.line,
                      "expected an integer for '" + key + "', got '" + e.value + "'");
  return v;
}

long ConfigData::get_int_or(const std::string& section, const std::string& key,
                            long fallback) const {
  return has(section, key) ? get_int(section, key) : fallback;
}

std::uint64_t ConfigData::get_uint64_or(const std::string& section, const std::string& key,
                                        std::uint64_t fallback) const {
  if (!has(section, key)) return fallback;
  const Entry& e = require(section, key);
  std::uint64_t v;
  const std::string t = trim(e.value);
  auto res = std::from_chars(t.c_str(), t.c_str() + t.size(), v);
  if (res.ec != std::errc() || res.ptr != t.c_str() + t.size())
    throw ConfigError(source_, e.line,
                      "expected a nonnegative integer for '" + key + "', got '" + e.value + "'");
  return v;
}

bool ConfigData::get_bool_or(const std::string& section, const std::string& key,
                             bool fallback) const {
  if (!has(section, key)) return fallback;
  const Entry& e = require(section, key);
  if (e.value == "true") return true;
  if (e.value == "false") return false;
  throw ConfigError(source_, e.line,
                    "expected true or false for '" + key + "', got '" + e.value + "'");
}

std::vector<long> ConfigData::get_int_list(const std::string& section,
                                           const std::string& key) const {
  const Entry& e = require(section, key);
  std::vector<long> out;
  for (const std::string& part : split(e.value, ',')) {
    long v;
    if (!parse_long_strict(part, &v))
      throw ConfigError(source_, e.line,
                        "expected a comma-separated integer list for '" + key + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::array<double, 2>> ConfigData::get_coord_list(const std::string& section,
                                                              const std::string& key) const {
  const Entry& e = require(section, key);
  std::vector<std::array<double, 2>> out;
  for (const std::string& pair : split(e.value, ';')) {
    const auto xy = split(pair, ',');
    double x, y;
    if (xy.size() != 2 || !parse_double_strict(xy[0], &x) || !parse_double_strict(xy[1], &y))
      throw ConfigError(source_, e.line,
                        "expected 'x1,y1; x2,y2; ...' coordinates for '" + key + "'");
    out.push_back({x, y});
  }
  return out;
}

void ConfigData::reject_unused() const {
  for (const Entry& e : entries_)
    if (!e.used)
      throw ConfigError(source_, e.line, "unknown key '" + e.key + "' in [" + e.section + "]");
}

void ConfigData::fail(const std::string& section, const std::string& key,
                      const std::string& message) const {
  for (const Entry& e : entries_)
    if (e.section == section && e.key == key)
      throw ConfigError(source_, e.line, message);
  throw ConfigError(source_, message);
}

SiteLayout GeometrySpec::build() const {
  switch (kind) {
    case Kind::Equilateral: return equilateral(side_um);
    case Kind::Isosceles: return isosceles(gamma_deg, r_um);
    case Kind::Square: return square(side_um);
    case Kind::Honeycomb: return honeycomb(side_um);
    case Kind::Custom: return custom_layout(coords_um, r_ref_um);
  }
  throw std::logic_error("GeometrySpec: unreachable");
}

namespace {

GeometrySpec load_geometry(const ConfigData& data) {
  GeometrySpec geo;
  const std::string kind = data.get_string("geometry", "kind");
  if (kind == "equilateral") {
    geo.kind = GeometrySpec::Kind::Equilateral;
    geo.side_um = data.get_double("geometry", "side_um");
  } else if (kind == "isosceles") {
    geo.kind = GeometrySpec::Kind::Isosceles;
    geo.gamma_deg = data.get_double("geometry", "gamma_deg");
    geo.r_um = data.get_double("geometry", "r_um");
  } else if (kind == "square") {
    geo.kind = GeometrySpec::Kind::Square;
    geo.side_um = data.get_double("geometry", "side_um");
  } else if (kind == "honeycomb") {
    geo.kind = GeometrySpec::Kind::Honeycomb;
    geo.side_um = data.get_double("geometry", "side_um");
  } else if (kind == "custom") {
    geo.kind = GeometrySpec::Kind::Custom;
    geo.coords_um = data.get_coord_list("geometry", "coords_um");
    geo.r_ref_um = data.get_double("geometry", "r_ref_um");
  } else {
    data.fail("geometry", "kind",
              "unknown geometry kind '" + kind +
                  "' (expected equilateral, isosceles, square, honeycomb or custom)");
  }
  return geo;
}

VModelParams load_model(const ConfigData& data, bool perturbative) {
  VModelParams p;
  p.t_a = data.get_double("model", "t_a_mhz");
  p.t_b = data.get_double("model", "t_b_mhz");
  p.w = data.get_double("model", "w_mhz");
  p.mu = data.get_double("model", "mu_mhz");
  const long fs = data.get_int_or("model", "field_sign", 1);
  if (fs != 1 && fs != -1)
    data.fail("model", "field_sign", "field_sign must be +1 or -1");
  p.field_sign = static_cast<int>(fs);
  if (p.t_a < 0 || p.t_b < 0 || p.w < 0)
    data.fail("model", "t_a_mhz", "couplings t_a, t_b, w must be >= 0");
  if (perturbative && p.mu == 0.0)
    data.fail("model", "mu_mhz", "mu must be nonzero for perturbative formulas");
  return p;
}

void load_noise(const ConfigData& data, NoiseModel* noise) {
  noise->vacancy_p = data.get_double_or("noise", "vacancy_p", 0.0);
  noise->sigma_pos_um = data.get_double_or("noise", "sigma_pos_um", 0.0);
  noise->eps_rydberg_as_ground = data.get_double_or("noise", "eps_rydberg_as_ground", 0.0);
  noise->eps_ground_as_rydberg = data.get_double_or("noise", "eps_ground_as_rydberg", 0.0);
  noise->prep_leakage = data.get_double_or("noise", "prep_leakage", 0.0);
  const std::string mode = data.get_string_or("noise", "prep_leakage_mode", "ground");
  if (mode == "ground") {
    noise->prep_leakage_mode = PrepLeakageMode::Ground;
  } else if (mode == "lost") {
    noise->prep_leakage_mode = PrepLeakageMode::Lost;
  } else {
    data.fail("noise", "prep_leakage_mode", "prep_leakage_mode must be 'ground' or 'lost'");
  }
  const long n_samples = data.get_int_or("noise", "n_samples", 500);
  if (n_samples < 1) data.fail("noise", "n_samples", "n_samples must be >= 1");
  noise->n_samples = static_cast<int>(n_samples);
  noise->seed = data.get_uint64_or("noise", "seed", 1);
  noise->two_excitation_scale = data.get_double_or("noise", "two_excitation_scale", 1.0);
  for (double p : {noise->vacancy_p, noise->eps_rydberg_as_ground,
                   noise->eps_ground_as_rydberg, noise->prep_leakage})
    if (p < 0.0 || p > 1.0)
      throw ConfigError(data.source(), "noise probabilities must lie in [0, 1]");
  if (noise->sigma_pos_um < 0.0)
    data.fail("noise", "sigma_pos_um", "sigma_pos_um must be >= 0");
  if (noise->two_excitation_scale < 0.0)
    data.fail("noise", "two_excitation_scale", "two_excitation_scale must be >= 0");
}

}  // namespace

std::vector<double> SimulateConfig::time_grid() const {
  if (!(t_step_us > 0.0))
    throw std::invalid_argument("time grid: step_us must be positive");
  if (t_stop_us < t_start_us)
    throw std::invalid_argument("time grid: stop_us must be >= start_us");
  const long n = static_cast<long>(std::floor((t_stop_us - t_start_us) / t_step_us + 1e-9)) + 1;
  std::vector<double> times(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k)
    times[static_cast<std::size_t>(k)] = t_start_us + static_cast<double>(k) * t_step_us;
  return times;
}

ExperimentConfig SimulateConfig::to_experiment() const {
  ExperimentConfig exp;
  exp.layout = geometry.build();
  exp.params = params;
  for (int s : initial_sites) {
    if (s < 1 || s > exp.layout.n_sites())
      throw std::invalid_argument("initial site label " + std::to_string(s) +
                                  " outside 1.." + std::to_string(exp.layout.n_sites()));
    exp.initial_sites.push_back(s - 1);
  }
  exp.times_us = time_grid();
  exp.noise = noise;
  exp.vdw_enabled = vdw_enabled;
  exp.vdw_shift_mhz = vdw_shift_mhz;
  exp.n_threads = n_threads;
  return exp;
}

SimulateConfig load_simulate_config(const ConfigData& data) {
  SimulateConfig cfg;
  cfg.geometry = load_geometry(data);
  cfg.params = load_model(data, /*perturbative=*/false);
  cfg.vdw_enabled = data.get_bool_or("model", "vdw_enabled", false);
  cfg.vdw_shift_mhz = data.get_double_or("model", "vdw_shift_mhz", 0.07);
  cfg.initial_sites.clear();
  for (long s : data.get_int_list("initial", "sites"))
    cfg.initial_sites.push_back(static_cast<int>(s));
  cfg.t_start_us = data.get_double_or("time", "start_us", 0.0);
  cfg.t_stop_us = data.get_double("time", "stop_us");
  cfg.t_step_us = data.get_double("time", "step_us");
  if (!(cfg.t_step_us > 0.0)) data.fail("time", "step_us", "step_us must be positive");
  if (cfg.t_stop_us < cfg.t_start_us)
    data.fail("time", "stop_us", "stop_us must be >= start_us");
  load_noise(data, &cfg.noise);
  const long threads = data.get_int_or("run", "n_threads", 0);
  if (threads < 0) data.fail("run", "n_threads", "n_threads must be >= 0");
  cfg.n_threads = static_cast<int>(threads);
  cfg.plot = data.get_bool_or("output", "plot", false);
  data.reject_unused();
  cfg.to_experiment();  // validates geometry and site labels eagerly
  return cfg;
}

std::vector<double> ScanConfig::gamma_grid() const {
  if (!(gamma_step_deg > 0.0))
    throw std::invalid_argument("gamma grid: step must be positive");
  if (gamma_stop_deg < gamma_start_deg)
    throw std::invalid_argument("gamma grid: stop must be >= start");
  const long n =
      static_cast<long>(std::floor((gamma_stop_deg - gamma_start_deg) / gamma_step_deg + 1e-9)) +
      1;
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k)
    grid[static_cast<std::size_t>(k)] = gamma_start_deg + static_cast<double>(k) * gamma_step_deg;
  return grid;
}

ScanConfig load_scan_config(const ConfigData& data) {
  ScanConfig cfg;
  cfg.gamma_start_deg = data.get_double_or("scan", "gamma_start_deg", 0.0);
  cfg.gamma_stop_deg = data.get_double_or("scan", "gamma_stop_deg", 90.0);
  cfg.gamma_step_deg = data.get_double_or("scan", "gamma_step_deg", 1.0);
  cfg.r_um = data.get_double_or("scan", "r_um", 11.0);
  cfg.tau_us = data.get_double_or("scan", "tau_us", 0.4);
  if (!(cfg.r_um > 0.0)) data.fail("scan", "r_um", "r_um must be positive");
  if (cfg.tau_us < 0.0) data.fail("scan", "tau_us", "tau_us must be >= 0");
  if (cfg.gamma_start_deg < 0.0 || cfg.gamma_stop_deg >= 180.0)
    data.fail("scan", "gamma_start_deg", "gamma range must lie within [0, 180)");
  const std::string pipeline = data.get_string_or("scan", "pipeline", "ideal");
  if (pipeline == "ideal") {
    cfg.monte_carlo = false;
  } else if (pipeline == "monte_carlo") {
    cfg.monte_carlo = true;
  } else {
    data.fail("scan", "pipeline", "pipeline must be 'ideal' or 'monte_carlo'");
  }
  cfg.params = load_model(data, /*perturbative=*/true);
  load_noise(data, &cfg.noise);
  const long threads = data.get_int_or("run", "n_threads", 0);
  if (threads < 0) data.fail("run", "n_threads", "n_threads must be >= 0");
  cfg.n_threads = static_cast<int>(threads);
  data.reject_unused();
  cfg.gamma_grid();
  return cfg;
}

FluxConfig load_flux_config(const ConfigData& data) {
  FluxConfig cfg;
  cfg.params = load_model(data, /*perturbative=*/true);
  if (data.has("flux", "plaquettes")) {
    cfg.triangle = cfg.square = cfg.honeycomb = false;
    for (const std::string& name : split(data.get_string("flux", "plaquettes"), ',')) {
      const std::string t = trim(name);
      if (t == "triangle") cfg.triangle = true;
      else if (t == "square") cfg.square = true;
      else if (t == "honeycomb") cfg.honeycomb = true;
      else data.fail("flux", "plaquettes", "unknown plaquette '" + t + "'");
    }
  }
  data.reject_unused();
  return cfg;
}

AnyonCheckConfig load_anyon_config(const ConfigData& data) {
  AnyonCheckConfig cfg;
  cfg.t = data.get_double_or("anyon", "t_mhz", cfg.t);
  cfg.delta = data.get_double_or("anyon", "delta", cfg.delta);
  cfg.phi = data.get_double_or("anyon", "phi_rad", cfg.phi);
  const long n = data.get_int_or("anyon", "n_random", cfg.n_random);
  if (n < 0) data.fail("anyon", "n_random", "n_random must be >= 0");
  cfg.n_random = static_cast<int>(n);
  cfg.tolerance = data.get_double_or("anyon", "tolerance", cfg.tolerance);
  if (!(cfg.tolerance > 0.0)) data.fail("anyon", "tolerance", "tolerance must be positive");
  cfg.seed = data.get_uint64_or("anyon", "seed", cfg.seed);
  if (cfg.t < 0.0) data.fail("anyon", "t_mhz", "t must be >= 0");
  data.reject_unused();
  return cfg;
}

namespace {
void emit(std::ostringstream& out, const char* key, double v) {
  out << key << " = " << format_double(v) << "\n";
}
}  // namespace

std::string serialize(const SimulateConfig& config) {
  std::ostringstream out;
  out << "[geometry]\n";
  switch (config.geometry.kind) {
    case GeometrySpec::Kind::Equilateral:
      out << "kind = equilateral\n";
      emit(out, "side_um", config.geometry.side_um);
      break;
    case GeometrySpec::Kind::Isosceles:
      out << "kind = isosceles\n";
      emit(out, "gamma_deg", config.geometry.gamma_deg);
      emit(out, "r_um", config.geometry.r_um);
      break;
    case GeometrySpec::Kind::Square:
      out << "kind = square\n";
      emit(out, "side_um", config.geometry.side_um);
      break;
    case GeometrySpec::Kind::Honeycomb:
      out << "kind = honeycomb\n";
      emit(out, "side_um", config.geometry.side_um);
      break;
    case GeometrySpec::Kind::Custom: {
      out << "kind = custom\n";
      out << "coords_um = ";
      for (std::size_t i = 0; i < config.geometry.coords_um.size(); ++i) {
        if (i) out << "; ";
        out << format_double(config.geometry.coords_um[i][0]) << ","
            << format_double(config.geometry.coords_um[i][1]);
      }
      out << "\n";
      emit(out, "r_ref_um", config.geometry.r_ref_um);
      break;
    }
  }
  out << "\n[model]\n";
  emit(out, "t_a_mhz", config.params.t_a);
  emit(out, "t_b_mhz", config.params.t_b);
  emit(out, "w_mhz", config.params.w);
  emit(out, "mu_mhz", config.params.mu);
  out << "field_sign = " << config.params.field_sign << "\n";
  out << "vdw_enabled = " << (config.vdw_enabled ? "true" : "false") << "\n";
  emit(out, "vdw_shift_mhz", config.vdw_shift_mhz);
  out << "\n[initial]\nsites = ";
  for (std::size_t i = 0; i < config.initial_sites.size(); ++i) {
    if (i) out << ",";
    out << config.initial_sites[i];
  }
  out << "\n\n[time]\n";
  emit(out, "start_us", config.t_start_us);
  emit(out, "stop_us", config.t_stop_us);
  emit(out, "step_us", config.t_step_us);
  out << "\n[noise]\n";
  emit(out, "vacancy_p", config.noise.vacancy_p);
  emit(out, "sigma_pos_um", config.noise.sigma_pos_um);
  emit(out, "eps_rydberg_as_ground", config.noise.eps_rydberg_as_ground);
  emit(out, "eps_ground_as_rydberg", config.noise.eps_ground_as_rydberg);
  emit(out, "prep_leakage", config.noise.prep_leakage);
  out << "prep_leakage_mode = "
      << (config.noise.prep_leakage_mode == PrepLeakageMode::Ground ? "ground" : "lost") << "\n";
  out << "n_samples = " << config.noise.n_samples << "\n";
  out << "seed = " << config.noise.seed << "\n";
  emit(out, "two_excitation_scale", config.noise.two_excitation_scale);
  out << "\n[run]\n";
  out << "n_threads = " << config.n_threads << "\n";
  out << "\n[output]\n";
  out << "plot = " << (config.plot ? "true" : "false") << "\n";
  return out.str();
}

std::string serialize(const ScanConfig& config) {
  std::ostringstream out;
  out << "[scan]\n";
  emit(out, "gamma_start_deg", config.gamma_start_deg);
  emit(out, "gamma_stop_deg", config.gamma_stop_deg);
  emit(out, "gamma_step_deg", config.gamma_step_deg);
  emit(out, "r_um", config.r_um);
  emit(out, "tau_us", config.tau_us);
  out << "pipeline = " << (config.monte_carlo ? "monte_carlo" : "ideal") << "\n";
  out << "\n[model]\n";
  emit(out, "t_a_mhz", config.params.t_a);
  emit(out, "t_b_mhz", config.params.t_b);
  emit(out, "w_mhz", config.params.w);
  emit(out, "mu_mhz", config.params.mu);
  out << "field_sign = " << config.params.field_sign << "\n";
  out << "\n[noise]\n";
  emit(out, "vacancy_p", config.noise.vacancy_p);
  emit(out, "sigma_pos_um", config.noise.sigma_pos_um);
  emit(out, "eps_rydberg_as_ground", config.noise.eps_rydberg_as_ground);
  emit(out, "eps_ground_as_rydberg", config.noise.eps_ground_as_rydberg);
  emit(out, "prep_leakage", config.noise.prep_leakage);
  out << "prep_leakage_mode = "
      << (config.noise.prep_leakage_mode == PrepLeakageMode::Ground ? "ground" : "lost") << "\n";
  out << "n_samples = " << config.noise.n_samples << "\n";
  out << "seed = " << config.noise.seed << "\n";
  emit(out, "two_excitation_scale", config.noise.two_excitation_scale);
  out << "\n[run]\n";
  out << "n_threads = " << config.n_threads << "\n";
  return out.str();
}

}  // namespace chiralhop
