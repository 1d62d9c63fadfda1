#pragma once

// Mode dispatch: executes a validated RunConfig and writes the output files.

#include <string>

#include "floatswe/config.hpp"

namespace floatswe {

struct RunSummary {
  std::string mode;
  double final_delta = 0.0;
  double max_energy_drift = 0.0;
  double max_mass_residual = 0.0;
  double min_subsonic_margin = 0.0;
  int steps = 0;
  double wall_clock_s = 0.0;
  bool compat_pass = true;
  double compat_order0 = 0.0;
  double compat_order1 = 0.0;
};

// Executes the selected mode; deterministic given the config (the only
// non-reproducible output is the wall-clock entry of the summary JSON).
RunSummary run(const RunConfig& cfg);

// CSV-based conservation audit for the `audit` subcommand. Reconstructed
// boundary exchanges use the trapezoid of the recorded q_wall column, exact
// only when outgoing waves never reach r_max.
std::string audit_files(const std::vector<std::string>& paths);

}  // namespace floatswe
