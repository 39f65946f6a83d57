#include "chiralhop/csv.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chiralhop {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {
constexpr const char* kConfigBegin = "# --- config ---";
constexpr const char* kConfigEnd = "# --- end config ---";
}  // namespace

std::string metadata_block(const std::string& command, const std::string& config_text,
                           const MeasuredSeries* series) {
  std::ostringstream out;
  out << "# chiralhop " << command << " output\n";
  out << kConfigBegin << "\n";
  std::istringstream cfg(config_text);
  std::string line;
  while (std::getline(cfg, line)) out << "# " << line << "\n";
  out << kConfigEnd << "\n";
  if (series) {
    out << "# n_samples = " << series->n_samples << "\n";
    out << "# aborted_shots = " << series->aborted << "\n";
    out << "# vacancy_draws = " << series->vacancy_draws << "\n";
    out << "# vacancies = " << series->vacancies << "\n";
    out << "# shots_with_vacancy = " << series->shots_with_vacancy << "\n";
  }
  return out.str();
}

std::string extract_embedded_config(const std::string& csv_text) {
  std::istringstream in(csv_text);
  std::string line;
  std::ostringstream cfg;
  bool inside = false;
  while (std::getline(in, line)) {
    if (line == kConfigBegin) {
      inside = true;
      continue;
    }
    if (line == kConfigEnd) return cfg.str();
    if (inside) {
      if (line.rfind("# ", 0) == 0)
        cfg << line.substr(2) << "\n";
      else if (line == "#")
        cfg << "\n";
    }
  }
  throw std::runtime_error("no embedded config block found");
}

std::string series_to_csv(const MeasuredSeries& series, const std::string& metadata) {
  if (series.n_sites != 3)
    throw std::invalid_argument("series_to_csv: the dynamics schema is for 3-site layouts");
  std::ostringstream out;
  out << metadata;
  out << "time_us,p100,p010,p001,p_other,sem_p100,sem_p010,sem_p001,xbar_um,ybar_um\n";
  for (std::size_t i = 0; i < series.times_us.size(); ++i) {
    const auto& m = series.mean[i];
    const auto& s = series.sem[i];
    double other = 0.0;
    for (std::size_t p = 0; p < m.size(); ++p)
      if (p != 4 && p != 2 && p != 1) other += m[p];
    out << format_double(series.times_us[i]) << ',' << format_double(m[4]) << ','
        << format_double(m[2]) << ',' << format_double(m[1]) << ',' << format_double(other)
        << ',' << format_double(s[4]) << ',' << format_double(s[2]) << ','
        << format_double(s[1]) << ',' << format_double(series.xbar_um[i]) << ','
        << format_double(series.ybar_um[i]) << '\n';
  }
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  fs::rename(tmp, target);
}

}  // namespace chiralhop
