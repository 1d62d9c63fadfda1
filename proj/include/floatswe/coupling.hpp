#pragma once

// Two-way coupled time integration (fluid <-> heave ODE), prescribed-motion
// runs, the fixed-point (Picard) solver on the linearized subproblems, and
// compatibility checking/generation for initial data.

#include <functional>
#include <optional>
#include <vector>

#include "floatswe/diagnostics.hpp"
#include "floatswe/fluid.hpp"
#include "floatswe/params.hpp"
#include "floatswe/solid.hpp"

namespace floatswe {

struct CoupledState {
  FluidState fluid;
  SolidState solid;
  double t = 0.0;
};

CoupledState make_equilibrium_state(const RadialGrid& grid);

// One Heun (explicit trapezoidal) step of the combined semi-discrete system.
// Both substates share stage times and weights; each stage reads zeta at the
// wall from the resolved wall state with q_wall = -(R/2) w of that stage.
CoupledState coupled_step(const CoupledState& cs, double dt,
                          const RadialGrid& grid, const PhysicalParams& params,
                          const SolidShape& shape,
                          bool with_pressure_corrector = true);

struct RunOptions {
  double T_end = 1.0;
  double cfl = 0.9;
  double fixed_dt = 0.0;  // > 0 overrides CFL-adaptive stepping
  int snapshot_every = 0; // steps; 0 disables snapshots
  bool with_pressure_corrector = true;
};

Trajectory run_coupled(const CoupledState& cs0, const RunOptions& opts,
                       const RadialGrid& grid, const PhysicalParams& params,
                       const SolidShape& shape);

// Wall motion input for prescribed runs: either an analytic closure w_G(t)
// or a per-step stage table recorded from a coupled run (which makes a
// replay reproduce the coupled fluid exactly).
class MotionSignal {
 public:
  static MotionSignal from_function(std::function<double(double)> w_of_t);
  static MotionSignal from_trajectory(const Trajectory& recorded);

  // Stage velocities (begin of step, predictor at end of step).
  std::pair<double, double> stage_values(int step, double t, double dt) const;
  double initial_value() const;
  double initial_delta() const { return delta0_; }

 private:
  std::function<double(double)> w_;
  std::vector<std::pair<double, double>> stages_;
  double w0_ = 0.0;
  double delta0_ = 0.0;
  bool tabulated_ = false;
};

Trajectory run_prescribed(const FluidState& fluid0, const MotionSignal& motion,
                          const RunOptions& opts, const RadialGrid& grid,
                          const PhysicalParams& params,
                          const SolidShape& shape);

struct CompatibilityReport {
  double order0_residual = 0.0;  // q trace vs -(R/2) delta1 [m^2/s]
  double order1_residual = 0.0;  // momentum trace identity [m/s^2 * m = m^2/s^2]
  double tol0 = 0.0;
  double tol1 = 0.0;
  bool pass0 = false;
  bool pass1 = false;
  bool pass() const { return pass0 && pass1; }
};

// Residuals of the order-0/1 trace identities, using one-sided second-order
// finite differences at r = R. Tolerances default to 1e-8 sqrt(g h0) h0 and
// 1e-6 g h0.
CompatibilityReport check_compatibility(const FluidState& fluid0,
                                        const SolidState& solid0,
                                        const RadialGrid& grid,
                                        const PhysicalParams& params,
                                        const SolidShape& shape,
                                        double tol0 = -1.0, double tol1 = -1.0);

struct ReleaseData {
  CoupledState state;
  double wall_slope;  // prescribed d_r zeta at r = R
};

// Release-from-rest data compatible at orders 0 and 1: delta(0) = delta0,
// w(0) = 0, q = 0, zeta(R) = 0 and the wall slope matched to the ODE
// acceleration. The elevation profile is exactly quadratic across the wall
// stencil and decays with length L beyond it.
ReleaseData generate_compatible_release(double delta0, double L,
                                        const RadialGrid& grid,
                                        const PhysicalParams& params,
                                        const SolidShape& shape);

struct PicardResult {
  std::vector<double> diff_history;  // sup-norm iterate differences
  Trajectory last;                   // trajectory of the final iterate
  int iterations = 0;
  double dt = 0.0;   // shared time step (use as fixed_dt for the reference)
  int steps = 0;
};

// Fixed-point iteration on the linearized subproblems: iterate n solves the
// linear fluid problem with coefficients and boundary data frozen at iterate
// n-1, then the linear heave ODE forced by the new wall trace. Shares the
// time grid with run_coupled(fixed_dt) so differences isolate the iteration.
PicardResult picard_solve(const CoupledState& cs0, double T, int n_iters,
                          const RadialGrid& grid, const PhysicalParams& params,
                          const SolidShape& shape);

}  // namespace floatswe
