#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chiralhop/experiment.hpp"

namespace chiralhop {

// Config-file problem with a file:line prefix when the offending line is
// known.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, int line, const std::string& message);
  ConfigError(const std::string& source, const std::string& message);
};

// Flat, line-oriented "key = value" text grouped by [section] headers.
// Grammar: blank lines and lines starting with '#' are ignored; a section
// header is "[name]"; everything else must be "key = value". Unknown keys,
// duplicate keys and malformed values are rejected with line numbers.
class ConfigData {
 public:
  static ConfigData from_file(const std::string& path);
  static ConfigData from_string(const std::string& text, const std::string& name);

  bool has(const std::string& section, const std::string& key) const;

  std::string get_string(const std::string& section, const std::string& key) const;
  std::string get_string_or(const std::string& section, const std::string& key,
                            const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key) const;
  double get_double_or(const std::string& section, const std::string& key,
                       double fallback) const;
  long get_int(const std::string& section, const std::string& key) const;
  long get_int_or(const std::string& section, const std::string& key, long fallback) const;
  std::uint64_t get_uint64_or(const std::string& section, const std::string& key,
                              std::uint64_t fallback) const;
  bool get_bool_or(const std::string& section, const std::string& key, bool fallback) const;
  std::vector<long> get_int_list(const std::string& section, const std::string& key) const;
  std::vector<std::array<double, 2>> get_coord_list(const std::string& section,
                                                    const std::string& key) const;

  // Throws on the first key that no loader consumed.
  void reject_unused() const;

  [[noreturn]] void fail(const std::string& section, const std::string& key,
                         const std::string& message) const;
  const std::string& source() const { return source_; }

 private:
  struct Entry {
    std::string section, key, value;
    int line = 0;
    mutable bool used = false;
  };
  const Entry* find(const std::string& section, const std::string& key) const;
  const Entry& require(const std::string& section, const std::string& key) const;

  std::string source_;
  std::vector<Entry> entries_;
};

struct GeometrySpec {
  enum class Kind { Equilateral, Isosceles, Square, Honeycomb, Custom };
  Kind kind = Kind::Equilateral;
  double side_um = 11.0;    // equilateral / square / honeycomb
  double gamma_deg = 0.0;   // isosceles
  double r_um = 11.0;       // isosceles leg
  std::vector<std::array<double, 2>> coords_um;  // custom
  double r_ref_um = 0.0;                         // custom

  SiteLayout build() const;
};

struct SimulateConfig {
  GeometrySpec geometry;
  VModelParams params;
  bool vdw_enabled = false;
  double vdw_shift_mhz = 0.07;
  std::vector<int> initial_sites;  // 1-based site labels as written in the file
  double t_start_us = 0.0;
  double t_stop_us = 1.5;
  double t_step_us = 0.01;
  NoiseModel noise;
  int n_threads = 0;
  bool plot = false;

  std::vector<double> time_grid() const;
  ExperimentConfig to_experiment() const;
};

struct ScanConfig {
  double gamma_start_deg = 0.0;
  double gamma_stop_deg = 90.0;
  double gamma_step_deg = 1.0;
  double r_um = 11.0;
  double tau_us = 0.4;
  bool monte_carlo = false;  // ideal pipeline by default
  VModelParams params;
  NoiseModel noise;
  int n_threads = 0;

  std::vector<double> gamma_grid() const;
};

struct FluxConfig {
  VModelParams params;
  bool triangle = true;
  bool square = true;
  bool honeycomb = true;
};

struct AnyonCheckConfig {
  double t = 0.8721742318052055;
  double delta = -0.3693920550007272;
  double phi = 0.5235987755982988;  // pi/6
  int n_random = 100;
  double tolerance = 1e-10;
  std::uint64_t seed = 12345;
};

SimulateConfig load_simulate_config(const ConfigData& data);
ScanConfig load_scan_config(const ConfigData& data);
FluxConfig load_flux_config(const ConfigData& data);
AnyonCheckConfig load_anyon_config(const ConfigData& data);

// Canonical text form; parsing it back reproduces the struct exactly.
std::string serialize(const SimulateConfig& config);
std::string serialize(const ScanConfig& config);

}  // namespace chiralhop
