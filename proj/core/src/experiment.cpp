#include "chiralhop/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "chiralhop/evolve.hpp"

namespace chiralhop {

namespace {

void validate_config(const ExperimentConfig& config) {
  const int n = config.layout.n_sites();
  if (n < 1) throw std::invalid_argument("experiment: empty layout");
  if (n > 16) throw std::invalid_argument("experiment: layout too large");
  if (config.times_us.empty()) throw std::invalid_argument("experiment: empty time grid");
  std::vector<int> sites = config.initial_sites;
  std::sort(sites.begin(), sites.end());
  if (std::adjacent_find(sites.begin(), sites.end()) != sites.end())
    throw std::invalid_argument("experiment: duplicate initial sites");
  for (int s : sites)
    if (s < 0 || s >= n) throw std::invalid_argument("experiment: initial site out of range");
  const NoiseModel& z = config.noise;
  for (double p : {z.vacancy_p, z.eps_rydberg_as_ground, z.eps_ground_as_rydberg, z.prep_leakage})
    if (p < 0.0 || p > 1.0)
      throw std::invalid_argument("experiment: probabilities must lie in [0, 1]");
  if (z.sigma_pos_um < 0.0) throw std::invalid_argument("experiment: sigma_pos must be >= 0");
  if (z.n_samples < 1) throw std::invalid_argument("experiment: n_samples must be >= 1");
  if (z.two_excitation_scale < 0.0)
    throw std::invalid_argument("experiment: two_excitation_scale must be >= 0");
}

long full_state_index(const std::vector<int>& levels, int n) {
  long idx = 0;
  for (int s = 0; s < n; ++s) idx = idx * 3 + levels[static_cast<std::size_t>(s)];
  return idx;
}

// mean/sem bookkeeping shared by both pipelines
MeasuredSeries make_series(const ExperimentConfig& config) {
  MeasuredSeries out;
  out.n_sites = config.layout.n_sites();
  out.times_us = config.times_us;
  const std::size_t n_pat = 1u << out.n_sites;
  out.mean.assign(out.times_us.size(), std::vector<double>(n_pat, 0.0));
  out.sem.assign(out.times_us.size(), std::vector<double>(n_pat, 0.0));
  out.xbar_um.assign(out.times_us.size(), std::numeric_limits<double>::quiet_NaN());
  out.ybar_um.assign(out.times_us.size(), std::numeric_limits<double>::quiet_NaN());
  return out;
}

void fill_center_of_mass(MeasuredSeries& series, const SiteLayout& layout) {
  if (series.n_sites != 3) return;
  for (std::size_t i = 0; i < series.times_us.size(); ++i) {
    const double p[3] = {series.mean[i][4], series.mean[i][2], series.mean[i][1]};
    const double total = p[0] + p[1] + p[2];
    if (total > 0.0) {
      double x = 0.0, y = 0.0;
      for (int s = 0; s < 3; ++s) {
        x += p[s] * layout.pos_um[static_cast<std::size_t>(s)][0];
        y += p[s] * layout.pos_um[static_cast<std::size_t>(s)][1];
      }
      series.xbar_um[i] = x / total;
      series.ybar_um[i] = y / total;
    }
  }
}

void apply_reporting_scale(MeasuredSeries& series, double scale) {
  if (scale == 1.0) return;
  for (std::size_t i = 0; i < series.times_us.size(); ++i)
    for (std::size_t p = 1; p < series.mean[i].size(); ++p) {  // vacuum pattern unscaled
      series.mean[i][p] *= scale;
      series.sem[i][p] *= scale;
    }
}

}  // namespace

bool noise_is_zero(const NoiseModel& noise) {
  return noise.vacancy_p == 0.0 && noise.sigma_pos_um == 0.0 &&
         noise.eps_rydberg_as_ground == 0.0 && noise.eps_ground_as_rydberg == 0.0 &&
         noise.prep_leakage == 0.0;
}

ShotPreparation prepare_initial(const ExperimentConfig& config, RngStream& rng) {
  const int n = config.layout.n_sites();
  ShotPreparation prep;
  prep.layout = jitter(config.layout, config.noise.sigma_pos_um, rng);
  prep.vacant.assign(static_cast<std::size_t>(n), 0);
  prep.lost.assign(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s)
    prep.vacant[static_cast<std::size_t>(s)] = rng.bernoulli(config.noise.vacancy_p) ? 1 : 0;

  std::vector<int> targets = config.initial_sites;
  std::sort(targets.begin(), targets.end());
  std::vector<std::uint8_t> carries_minus(static_cast<std::size_t>(n), 0);
  for (int s : targets) {
    if (prep.vacant[static_cast<std::size_t>(s)]) continue;  // nothing to drive
    if (rng.bernoulli(config.noise.prep_leakage)) {
      ++prep.failed_preps;
      if (config.noise.prep_leakage_mode == PrepLeakageMode::Lost)
        prep.lost[static_cast<std::size_t>(s)] = 1;
      // Ground mode: the site simply stays in the ground level
    } else {
      carries_minus[static_cast<std::size_t>(s)] = 1;
    }
  }

  for (int s = 0; s < n; ++s) {
    if (prep.vacant[static_cast<std::size_t>(s)] || prep.lost[static_cast<std::size_t>(s)])
      continue;
    prep.present_sites.push_back(s);
    prep.prepared.push_back(carries_minus[static_cast<std::size_t>(s)]);
  }
  return prep;
}

Vector reduced_initial_state(const ShotPreparation& prep) {
  const int m = static_cast<int>(prep.present_sites.size());
  if (m == 0) return Vector();
  std::vector<int> levels(static_cast<std::size_t>(m), 0);
  for (int k = 0; k < m; ++k)
    if (prep.prepared[static_cast<std::size_t>(k)])
      levels[static_cast<std::size_t>(k)] = static_cast<int>(Level::Minus);
  const long dim = basis_dimension(m, ModelKind::VStructure);
  Vector psi = Vector::Zero(dim);
  psi(full_state_index(levels, m)) = Complex(1.0, 0.0);
  return psi;
}

std::uint32_t detect(std::uint32_t pattern, int n_sites, const NoiseModel& noise,
                     RngStream& rng) {
  std::uint32_t out = pattern;
  for (int s = 0; s < n_sites; ++s) {
    const std::uint32_t bit = 1u << (n_sites - 1 - s);
    if (out & bit) {
      if (rng.bernoulli(noise.eps_rydberg_as_ground)) out &= ~bit;
    } else {
      if (rng.bernoulli(noise.eps_ground_as_rydberg)) out |= bit;
    }
  }
  return out;
}

MeasuredSeries run_ideal(const ExperimentConfig& config) {
  validate_config(config);
  const int n = config.layout.n_sites();
  MeasuredSeries series = make_series(config);
  series.n_samples = config.noise.n_samples;

  Matrix H;
  if (n >= 2) {
    H = full_v_hamiltonian(config.layout, config.params);
    if (config.vdw_enabled)
      H = add_vdw_shift(H, config.vdw_shift_mhz, n, ModelKind::VStructure);
  }

  std::vector<int> levels(static_cast<std::size_t>(n), 0);
  for (int s : config.initial_sites)
    levels[static_cast<std::size_t>(s)] = static_cast<int>(Level::Minus);
  Vector psi0 = Vector::Zero(basis_dimension(n, ModelKind::VStructure));
  psi0(full_state_index(levels, n)) = Complex(1.0, 0.0);

  if (n >= 2) {
    Propagator prop(H);
    for (std::size_t i = 0; i < config.times_us.size(); ++i) {
      const Vector psi = prop.at(psi0, config.times_us[i]);
      series.mean[i] = detection_patterns(psi, n).prob;
    }
  } else {
    // a single site only dephases; populations are constant
    const PatternDistribution dist = detection_patterns(psi0, n);
    for (std::size_t i = 0; i < config.times_us.size(); ++i) series.mean[i] = dist.prob;
  }
  fill_center_of_mass(series, config.layout);
  apply_reporting_scale(series, config.noise.two_excitation_scale);
  return series;
}

namespace {

// One shot: returns the sampled pattern index per time point.
std::vector<std::uint32_t> run_shot(const ExperimentConfig& config, std::uint64_t shot,
                                    long long* vacancy_count) {
  const int n = config.layout.n_sites();
  RngStream rng(config.noise.seed, shot);
  const ShotPreparation prep = prepare_initial(config, rng);
  for (int s = 0; s < n; ++s)
    if (prep.vacant[static_cast<std::size_t>(s)]) ++(*vacancy_count);

  const int m = static_cast<int>(prep.present_sites.size());
  std::vector<PatternDistribution> dists;
  dists.reserve(config.times_us.size());
  if (m >= 2) {
    SiteLayout reduced;
    reduced.r_ref_um = prep.layout.r_ref_um;
    for (int s : prep.present_sites)
      reduced.pos_um.push_back(prep.layout.pos_um[static_cast<std::size_t>(s)]);
    Matrix H = full_v_hamiltonian(reduced, config.params);
    if (config.vdw_enabled)
      H = add_vdw_shift(H, config.vdw_shift_mhz, m, ModelKind::VStructure);
    Propagator prop(H);
    const Vector psi0 = reduced_initial_state(prep);
    for (double t : config.times_us) dists.push_back(detection_patterns(prop.at(psi0, t), m));
  } else if (m == 1) {
    const PatternDistribution dist = detection_patterns(reduced_initial_state(prep), 1);
    for (std::size_t i = 0; i < config.times_us.size(); ++i) dists.push_back(dist);
  }

  std::vector<std::uint32_t> patterns(config.times_us.size(), 0);
  for (std::size_t i = 0; i < config.times_us.size(); ++i) {
    std::uint32_t reduced_pat = 0;
    if (m > 0) {
      reduced_pat = static_cast<std::uint32_t>(rng.sample_discrete(dists[i].prob));
      reduced_pat = detect(reduced_pat, m, config.noise, rng);
    }
    // embed into the full pattern; absent atoms are read out as lost
    std::uint32_t full = 0;
    for (int s = 0; s < n; ++s) {
      full <<= 1;
      if (prep.vacant[static_cast<std::size_t>(s)] || prep.lost[static_cast<std::size_t>(s)])
        full |= 1u;
    }
    for (int k = 0; k < m; ++k) {
      if (reduced_pat & (1u << (m - 1 - k)))
        full |= 1u << (n - 1 - prep.present_sites[static_cast<std::size_t>(k)]);
    }
    patterns[i] = full;
  }
  return patterns;
}

}  // namespace

MeasuredSeries run_monte_carlo(const ExperimentConfig& config) {
  validate_config(config);
  if (noise_is_zero(config.noise)) return run_ideal(config);

  const int n = config.layout.n_sites();
  const int n_shots = config.noise.n_samples;
  const std::size_t n_times = config.times_us.size();
  const std::size_t n_pat = 1u << n;

  struct ShotResult {
    std::vector<std::uint32_t> patterns;
    long long vacancies = 0;
    bool ok = false;
  };
  std::vector<ShotResult> results(static_cast<std::size_t>(n_shots));

  int n_threads = config.n_threads > 0
                      ? config.n_threads
                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  n_threads = std::min(n_threads, n_shots);

  std::atomic<int> next_shot{0};
  auto worker = [&]() {
    for (;;) {
      const int k = next_shot.fetch_add(1);
      if (k >= n_shots) break;
      ShotResult& res = results[static_cast<std::size_t>(k)];
      try {
        res.patterns =
            run_shot(config, static_cast<std::uint64_t>(k), &res.vacancies);
        res.ok = true;
      } catch (const std::exception&) {
        res.ok = false;  // aborted shot, reported below
      }
    }
  };
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // deterministic reduction in shot order
  MeasuredSeries series = make_series(config);
  std::vector<std::vector<long long>> counts(n_times, std::vector<long long>(n_pat, 0));
  int n_ok = 0;
  for (int k = 0; k < n_shots; ++k) {
    const ShotResult& res = results[static_cast<std::size_t>(k)];
    series.vacancy_draws += n;
    series.vacancies += res.vacancies;
    if (res.vacancies > 0) ++series.shots_with_vacancy;
    if (!res.ok) {
      ++series.aborted;
      continue;
    }
    ++n_ok;
    for (std::size_t i = 0; i < n_times; ++i) ++counts[i][res.patterns[i]];
  }
  if (n_ok == 0) throw std::runtime_error("run_monte_carlo: every shot aborted");

  series.n_samples = n_ok;
  for (std::size_t i = 0; i < n_times; ++i) {
    for (std::size_t p = 0; p < n_pat; ++p) {
      const double mean = static_cast<double>(counts[i][p]) / n_ok;
      series.mean[i][p] = mean;
      series.sem[i][p] =
          n_ok > 1 ? std::sqrt(mean * (1.0 - mean) / (n_ok - 1)) : 0.0;
    }
  }
  fill_center_of_mass(series, config.layout);
  apply_reporting_scale(series, config.noise.two_excitation_scale);
  return series;
}

}  // namespace chiralhop
