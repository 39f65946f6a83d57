#include "chiralhop/commands.hpp"

#include <cmath>
#include <filesystem>
#include <iomanip>
#include <limits>
#include <sstream>

#include "chiralhop/anyon.hpp"
#include "chiralhop/config.hpp"
#include "chiralhop/csv.hpp"
#include "chiralhop/observables.hpp"
#include "chiralhop/peierls.hpp"
#include "chiralhop/svg.hpp"

namespace chiralhop {

namespace {

std::string plot_path_for(const std::string& csv_path) {
  std::filesystem::path p(csv_path);
  p.replace_extension(".svg");
  return p.string();
}

int run_guarded(const CommandOptions& opts, std::ostream& err,
                int (*body)(const CommandOptions&, std::ostream&, std::ostream&),
                std::ostream& out) {
  try {
    return body(opts, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int simulate_body(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.config_path.empty()) {
    err << "simulate: --config is required\n";
    return 1;
  }
  if (opts.out_path.empty()) {
    err << "simulate: --out is required\n";
    return 1;
  }
  SimulateConfig cfg = load_simulate_config(ConfigData::from_file(opts.config_path));
  if (opts.seed_override) cfg.noise.seed = *opts.seed_override;
  if (opts.samples_override) cfg.noise.n_samples = *opts.samples_override;
  if (opts.plot) cfg.plot = true;

  const ExperimentConfig exp = cfg.to_experiment();
  if (exp.layout.n_sites() != 3) {
    err << "simulate: the dynamics CSV schema needs a 3-site layout\n";
    return 1;
  }
  const MeasuredSeries series = run_monte_carlo(exp);
  const std::string csv =
      series_to_csv(series, metadata_block("simulate", serialize(cfg), &series));
  write_file_atomic(opts.out_path, csv);
  if (cfg.plot) {
    std::vector<PlotSeries> ps(3);
    const char* labels[3] = {"P100", "P010", "P001"};
    const char* colors[3] = {"#1f77b4", "#2ca02c", "#d62728"};
    const std::size_t pat[3] = {4, 2, 1};
    for (int k = 0; k < 3; ++k) {
      ps[k].label = labels[k];
      ps[k].color = colors[k];
      for (std::size_t i = 0; i < series.times_us.size(); ++i)
        ps[k].y.push_back(series.mean[i][pat[k]]);
    }
    write_file_atomic(plot_path_for(opts.out_path),
                      line_plot_svg("site probabilities", "time (us)", "probability",
                                    series.times_us, ps));
  }
  if (!opts.quiet) {
    out << "simulate: wrote " << opts.out_path << " (" << series.times_us.size()
        << " time points, " << series.n_samples << " samples";
    if (series.aborted > 0) out << ", " << series.aborted << " aborted";
    out << ")\n";
  }
  return 0;
}

int scan_body(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.config_path.empty()) {
    err << "scan-gamma: --config is required\n";
    return 1;
  }
  if (opts.out_path.empty()) {
    err << "scan-gamma: --out is required\n";
    return 1;
  }
  ScanConfig cfg = load_scan_config(ConfigData::from_file(opts.config_path));
  if (opts.seed_override) cfg.noise.seed = *opts.seed_override;
  if (opts.samples_override) cfg.noise.n_samples = *opts.samples_override;

  std::ostringstream body;
  body << metadata_block("scan-gamma", serialize(cfg), nullptr);
  body << "gamma_deg,kappa,flux_rad,phase_12_rad,phase_23_rad,phase_31_rad,imbalance,"
          "sem_imbalance\n";
  std::vector<double> gammas = cfg.gamma_grid();
  std::vector<double> flux_col, imb_col;
  for (double gamma : gammas) {
    const TriangleFluxes fluxes = isosceles_fluxes(gamma, cfg.params);

    ExperimentConfig exp;
    exp.layout = isosceles(gamma, cfg.r_um);
    exp.params = cfg.params;
    exp.initial_sites = {1};  // excitation prepared on site 2
    exp.times_us = {cfg.tau_us};
    exp.noise = cfg.noise;
    exp.n_threads = cfg.n_threads;
    const MeasuredSeries series = cfg.monte_carlo ? run_monte_carlo(exp) : run_ideal(exp);
    const double p100 = series.mean[0][4];
    const double p001 = series.mean[0][1];
    double imb = std::numeric_limits<double>::quiet_NaN();
    double sem_imb = cfg.monte_carlo ? std::numeric_limits<double>::quiet_NaN() : 0.0;
    const double den = p100 + p001;
    if (den > 0.0) {
      imb = (p100 - p001) / den;
      if (cfg.monte_carlo && series.n_samples > 1) {
        // delta method with the multinomial covariance cov(a,b) = -a b / n
        const double sa = series.sem[0][4], sb = series.sem[0][1];
        const double da = 2.0 * p001 / (den * den), db = -2.0 * p100 / (den * den);
        const double cov = -p100 * p001 / static_cast<double>(series.n_samples);
        const double var =
            da * da * sa * sa + db * db * sb * sb + 2.0 * da * db * cov;
        sem_imb = var > 0.0 ? std::sqrt(var) : 0.0;
      }
    }
    body << format_double(gamma) << ',' << format_double(fluxes.kappa) << ','
         << format_double(fluxes.total_flux) << ',' << format_double(fluxes.bond_phases[0])
         << ',' << format_double(fluxes.bond_phases[1]) << ','
         << format_double(fluxes.bond_phases[2]) << ',' << format_double(imb) << ','
         << format_double(sem_imb) << '\n';
    flux_col.push_back(fluxes.total_flux);
    imb_col.push_back(imb);
  }
  write_file_atomic(opts.out_path, body.str());
  if (opts.plot) {
    std::vector<PlotSeries> ps(2);
    ps[0] = {"flux (rad)", "#1f77b4", flux_col};
    ps[1] = {"imbalance", "#d62728", imb_col};
    write_file_atomic(plot_path_for(opts.out_path),
                      line_plot_svg("isosceles scan", "gamma (deg)", "", gammas, ps));
  }
  if (!opts.quiet)
    out << "scan-gamma: wrote " << opts.out_path << " (" << gammas.size() << " angles)\n";
  return 0;
}

int flux_body(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.config_path.empty()) {
    err << "flux: --config is required\n";
    return 1;
  }
  const FluxConfig cfg = load_flux_config(ConfigData::from_file(opts.config_path));
  std::ostringstream csv;
  csv << "plaquette,quantity,value\n";
  auto row = [&csv](const char* plaquette, const char* quantity, double value) {
    csv << plaquette << ',' << quantity << ',' << format_double(value) << '\n';
  };
  std::ostringstream text;
  text << std::setprecision(6) << std::fixed;
  if (cfg.triangle) {
    const ComplexHop hop = triangle_hop(cfg.params.t_b, cfg.params.w, cfg.params.mu);
    const ComplexHop hop2 = two_excitation_hop(cfg.params.t_b, cfg.params.w, cfg.params.mu);
    row("triangle", "t_mhz", hop.magnitude());
    row("triangle", "phi_rad", hop.phase());
    row("triangle", "flux_rad", wrap_angle(3.0 * hop.phase()));
    row("triangle", "two_excitation_t_mhz", hop2.magnitude());
    row("triangle", "two_excitation_phi_rad", hop2.phase());
    text << "triangle:  t = " << hop.magnitude() << " MHz, phi = " << hop.phase()
         << " rad, flux 3*phi = " << wrap_angle(3.0 * hop.phase()) << " rad\n";
    text << "           two-excitation hop: t = " << hop2.magnitude()
         << " MHz, phi = " << hop2.phase() << " rad\n";
  }
  if (cfg.square) {
    const SquareCouplings sq = square_couplings(cfg.params);
    row("square", "t_mhz", sq.nn.magnitude());
    row("square", "phi_rad", sq.nn.phase());
    row("square", "diagonal_t_mhz", sq.diagonal);
    row("square", "flux_rad", sq.total_flux);
    text << "square:    t = " << sq.nn.magnitude() << " MHz, phi = " << sq.nn.phase()
         << " rad, t' = " << sq.diagonal << " MHz, flux 4*phi = " << sq.total_flux << " rad\n";
  }
  if (cfg.honeycomb) {
    const HoneycombCouplings hc = honeycomb_couplings(cfg.params);
    row("honeycomb", "t_mhz", hc.nn.magnitude());
    row("honeycomb", "phi_rad", hc.nn.phase());
    row("honeycomb", "t_prime_mhz", hc.nnn.magnitude());
    row("honeycomb", "phi_prime_rad", hc.nnn.phase());
    row("honeycomb", "t_second_mhz", hc.third);
    row("honeycomb", "alternating_flux_rad", hc.alternating_flux);
    row("honeycomb", "flux_rad", hc.total_flux);
    text << "honeycomb: t = " << hc.nn.magnitude() << " MHz, phi = " << hc.nn.phase()
         << " rad; t' = " << hc.nnn.magnitude() << " MHz, phi' = " << hc.nnn.phase()
         << " rad; t'' = " << hc.third << " MHz\n";
    text << "           alternating flux phi - phi' = " << hc.alternating_flux
         << " rad, total flux 6*phi = " << hc.total_flux << " rad\n";
  }
  if (!opts.quiet) out << text.str();
  if (!opts.out_path.empty()) write_file_atomic(opts.out_path, csv.str());
  return 0;
}

int anyon_body(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  (void)err;
  AnyonCheckConfig cfg;
  if (!opts.config_path.empty())
    cfg = load_anyon_config(ConfigData::from_file(opts.config_path));

  struct Row {
    std::string name;
    double residual;
  };
  std::vector<Row> rows;
  auto merge_report = [&rows](const RelationReport& rep, const std::string& tag) {
    double worst = 0.0;
    for (const auto& e : rep.entries) worst = std::max(worst, e.residual);
    rows.push_back({tag, worst});
  };

  const ModeAlgebra base = build_hardcore_modes();
  merge_report(verify_algebra(anyon_transform(base, 0.0)), "exchange algebra, phi = 0");
  merge_report(verify_algebra(anyon_transform(base, cfg.phi)),
               "exchange algebra, phi = " + format_double(cfg.phi));
  merge_report(verify_algebra(anyon_transform(base, std::acos(-1.0) / 6.0)),
               "exchange algebra, semionic phi = pi/6");
  RngStream rng(cfg.seed, 0);
  double worst_alg = 0.0, worst_equiv = 0.0;
  for (int k = 0; k < cfg.n_random; ++k) {
    const double phi = rng.uniform() * std::acos(-1.0);
    const double t = 0.1 + 1.9 * rng.uniform();
    const double delta = -0.9 + 1.9 * rng.uniform();
    const RelationReport rep = verify_algebra(anyon_transform(base, phi));
    worst_alg = std::max(worst_alg, rep.max_residual);
    worst_equiv = std::max(worst_equiv, hamiltonian_equivalence(t, delta, phi));
  }
  if (cfg.n_random > 0) {
    rows.push_back({"exchange algebra, " + std::to_string(cfg.n_random) + " random phi",
                    worst_alg});
    rows.push_back({"hamiltonian equivalence, " + std::to_string(cfg.n_random) +
                        " random (t, delta, phi)",
                    worst_equiv});
  }
  rows.push_back({"hamiltonian equivalence at (t = " + format_double(cfg.t) +
                      ", delta = " + format_double(cfg.delta) +
                      ", phi = " + format_double(cfg.phi) + ")",
                  hamiltonian_equivalence(cfg.t, cfg.delta, cfg.phi)});

  bool ok = true;
  std::ostringstream report;
  report << "relation residuals (threshold " << format_double(cfg.tolerance) << ")\n";
  for (const Row& r : rows) {
    const bool pass = r.residual <= cfg.tolerance;
    ok = ok && pass;
    report << (pass ? "  pass  " : "  FAIL  ") << std::left << std::setw(58) << r.name
           << "  " << format_double(r.residual) << "\n";
  }
  if (!opts.quiet) out << report.str();
  if (!opts.out_path.empty()) write_file_atomic(opts.out_path, report.str());
  return ok ? 0 : 2;
}

}  // namespace

int cmd_simulate(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return run_guarded(opts, err, simulate_body, out);
}
int cmd_scan_gamma(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return run_guarded(opts, err, scan_body, out);
}
int cmd_flux(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return run_guarded(opts, err, flux_body, out);
}
int cmd_anyon_check(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return run_guarded(opts, err, anyon_body, out);
}

}  // namespace chiralhop
