#pragma once

// Deterministic file output (17 significant digits, fixed column order) and
// the readers for custom initial states and recorded trajectories.

#include <string>
#include <vector>

#include "floatswe/coupling.hpp"
#include "floatswe/diagnostics.hpp"
#include "floatswe/solid.hpp"

namespace floatswe {

inline constexpr int kTrajectorySchema = 1;

std::string format_g17(double v);

void write_trajectory_csv(const std::string& path, const Trajectory& traj,
                          const std::string& config_hash_hex);

void write_snapshot_csv(const std::string& path, const FluidState& state,
                        const RadialGrid& grid, const PhysicalParams& params);

// Interior dump r,q_i,P_I,P_II,P_III on a uniform interior sampling.
void write_interior_csv(const std::string& path, const SolidState& solid,
                        double delta_ddot, double zeta_e_R,
                        const PhysicalParams& params, const SolidShape& shape,
                        int samples = 64);

// Custom initial state: CSV with header r,zeta,q and one row per cell.
FluidState read_state_csv(const std::string& path, const RadialGrid& grid);

struct ParsedTrajectory {
  int schema = 0;
  std::string config_hash;
  std::vector<TrajectoryRecord> records;
};

ParsedTrajectory read_trajectory_csv(const std::string& path);

}  // namespace floatswe
