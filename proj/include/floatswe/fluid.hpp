#pragma once

// Explicit finite-volume machinery for the radial shallow-water system on
// (R, r_max): HLL fluxes, characteristic wall and far-field closures, CFL
// control, the nonlinear forward-Euler step and the frozen-coefficient
// linearized step used by the fixed-point solver.

#include <optional>
#include <utility>
#include <vector>

#include "floatswe/hyperbolic.hpp"
#include "floatswe/params.hpp"

namespace floatswe {

struct FluidState {
  std::vector<double> zeta;  // cell averages
  std::vector<double> q;
  double t = 0.0;
};

FluidState make_rest_state(const RadialGrid& grid);

struct WallBC {
  double q_wall = 0.0;  // prescribed discharge at r = R [m^2/s]
};

struct FaceFlux {
  double mass = 0.0;
  double mom = 0.0;
};

// Physical flux (q, q^2/h + g h^2/2).
FaceFlux physical_flux(const StatePoint& p, double g);

// HLL flux with Einfeldt wave speeds: s_L = min(lambda-(L), lambda-(Roe)),
// s_R = max(lambda+(R), lambda+(Roe)). Consistent: flux(p, p) is exactly the
// physical flux.
FaceFlux numerical_flux(const StatePoint& left, const StatePoint& right,
                        double g);

// Pointwise geometric source (-q/r, -q^2/(r h)). The hydrostatic term
// g h d_r h lives in the conservative flux g h^2/2 instead.
std::pair<double, double> geometric_source(const StatePoint& p, double r);

// Wall state at r = R carrying exactly the prescribed discharge while
// preserving the outgoing Riemann invariant q/h - 2 sqrt(g h) of the interior
// trace. Solved by safeguarded Newton to relative residual < 1e-12.
StatePoint resolve_wall_state(const StatePoint& interior, double q_wall,
                              double g, double h0);

// Far-field state: incoming invariant pinned at its rest value
// q/h - 2 sqrt(g h) = -2 sqrt(g h0), outgoing invariant extrapolated from the
// interior trace. Zero reflection for linear outgoing waves.
StatePoint outer_boundary_state(const StatePoint& interior, double g,
                                double h0);

// cfl * dr / max_j max(|lambda-|, |lambda+|); every cell must be wet and
// subsonic.
double cfl_dt(const FluidState& state, const RadialGrid& grid,
              const PhysicalParams& params, double cfl_number);

// One spatial-operator evaluation (the stage kernel shared by the forward
// Euler step and the coupled integrator). Boundary data and diagnostics of
// the applied fluxes are returned so conservation audits can telescope
// exactly.
struct FluidRhs {
  std::vector<double> d_zeta;
  std::vector<double> d_q;
  StatePoint wall_state;        // resolved state at r = R
  StatePoint outer_state;       // resolved state at r = r_max
  double wall_mass_flux = 0.0;  // q applied at the wall face [m^2/s]
  double outer_mass_flux = 0.0;
  double outer_energy_flux = 0.0;  // 2 pi r_max rho (q^3/(2h^2) + g zeta q) [W]
  double wall_energy_flux = 0.0;   // same functional at the wall face [W]
  double min_margin = 0.0;
  double min_h = 0.0;
};

FluidRhs fluid_rhs(const FluidState& state, const RadialGrid& grid,
                   const PhysicalParams& params, double q_wall);

// Forward-Euler update; requires dt <= cfl_dt. Still water with q_wall = 0 is
// preserved exactly.
FluidState step_fluid(const FluidState& state, double dt, const WallBC& wall,
                      const RadialGrid& grid, const PhysicalParams& params);

struct LinearForcing {
  std::vector<double> zeta;
  std::vector<double> q;
};

// One explicit upwind step of the variable-coefficient linear system with
// A, B frozen at `frozen` and boundary scalar e2.u|_{r=R} = g_b; upwinding by
// the frozen eigen-decomposition, absorbing outer closure.
FluidState step_linearized(const FluidState& frozen, const FluidState& state,
                           const LinearForcing* forcing, double g_b, double dt,
                           const RadialGrid& grid,
                           const PhysicalParams& params);

// Spatial operator of the linearized step (stage kernel), plus the
// boundary-resolved state used at the wall.
struct LinearRhs {
  std::vector<double> d_zeta;
  std::vector<double> d_q;
  StatePoint wall_state;
};

LinearRhs linearized_rhs(const FluidState& frozen, const FluidState& state,
                         const LinearForcing* forcing, double g_b,
                         const RadialGrid& grid, const PhysicalParams& params);

// Worker cap for the data-parallel flux loops, from FLOATSWE_THREADS
// (default 1). Results are bitwise independent of the worker count.
int fluid_thread_count();

}  // namespace floatswe
