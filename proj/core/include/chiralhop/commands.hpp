#pragma once

#include <iostream>
#include <optional>
#include <string>

namespace chiralhop {

struct CommandOptions {
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed_override;
  std::optional<int> samples_override;
  bool plot = false;
  bool quiet = false;
};

// Exit codes: 0 success, 1 config or usage error, 2 numerical-check failure.
int cmd_simulate(const CommandOptions& opts, std::ostream& out = std::cout,
                 std::ostream& err = std::cerr);
int cmd_scan_gamma(const CommandOptions& opts, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr);
int cmd_flux(const CommandOptions& opts, std::ostream& out = std::cout,
             std::ostream& err = std::cerr);
int cmd_anyon_check(const CommandOptions& opts, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr);

}  // namespace chiralhop
