// Command line front end: config-driven simulation runs, geometry scans,
// plaquette flux tables and the anyon relation checker.

#include <CLI11.hpp>

#include "chiralhop/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"chiralhop: dipolar-exchange excitation hopping on small plaquettes"};
  app.require_subcommand(1);

  chiralhop::CommandOptions opts;
  std::uint64_t seed = 0;
  int samples = 0;

  auto add_common = [&](CLI::App* sub, bool needs_out) {
    sub->add_option("--config", opts.config_path, "config file path");
    auto* out = sub->add_option("--out", opts.out_path, "output file path");
    if (needs_out) out->required();
    sub->add_option("--seed", seed, "override the config seed")->default_val(0)->expected(1);
    sub->add_option("--samples", samples, "override the Monte Carlo sample count")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--plot", opts.plot, "also write an SVG plot");
    sub->add_flag("--quiet", opts.quiet, "suppress progress output");
  };

  CLI::App* simulate = app.add_subcommand("simulate", "run a time-series simulation");
  add_common(simulate, true);
  simulate->get_option("--config")->required();
  CLI::App* scan = app.add_subcommand("scan-gamma", "isosceles flux and imbalance scan");
  add_common(scan, true);
  scan->get_option("--config")->required();
  CLI::App* flux = app.add_subcommand("flux", "perturbative plaquette couplings and fluxes");
  add_common(flux, false);
  flux->get_option("--config")->required();
  CLI::App* anyon = app.add_subcommand("anyon-check", "verify the anyonic mode algebra");
  add_common(anyon, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  for (CLI::App* sub : {simulate, scan, flux, anyon}) {
    if (!sub->parsed()) continue;
    if (sub->count("--seed") > 0) opts.seed_override = seed;
    if (sub->count("--samples") > 0) opts.samples_override = samples;
  }

  if (simulate->parsed()) return chiralhop::cmd_simulate(opts);
  if (scan->parsed()) return chiralhop::cmd_scan_gamma(opts);
  if (flux->parsed()) return chiralhop::cmd_flux(opts);
  if (anyon->parsed()) return chiralhop::cmd_anyon_check(opts);
  return 1;
}
