#include "floatswe/fluid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "parallel.hpp"

namespace floatswe {

namespace {

// Pressure part measured from the rest state: g (h^2 - h0^2)/2 written as
// g zeta (h + h0)/2 to avoid cancellation. Shifting the momentum flux by the
// constant g h0^2/2 leaves the scheme algebraically unchanged but makes still
// water an exact discrete steady state.
FaceFlux shifted_physical_flux(const StatePoint& p, double g, double h0) {
  return {p.q, p.q * p.q / p.h + 0.5 * g * p.zeta * (p.h + h0)};
}

struct WaveSpeeds {
  double s_left;
  double s_right;
};

WaveSpeeds einfeldt_speeds(const StatePoint& left, const StatePoint& right,
                           double g) {
  const double uL = left.q / left.h;
  const double uR = right.q / right.h;
  const double cL = std::sqrt(g * left.h);
  const double cR = std::sqrt(g * right.h);

  const double sqL = std::sqrt(left.h);
  const double sqR = std::sqrt(right.h);
  const double u_roe = (sqL * uL + sqR * uR) / (sqL + sqR);
  const double c_roe = std::sqrt(0.5 * g * (left.h + right.h));

  return {std::min(uL - cL, u_roe - c_roe), std::max(uR + cR, u_roe + c_roe)};
}

template <typename FluxFn>
FaceFlux hll(const StatePoint& left, const StatePoint& right, double g,
             FluxFn&& flux_of) {
  if (!(left.h > 0.0) || !(right.h > 0.0)) {
    throw DryState("dry state at a face");
  }
  if (left.zeta == right.zeta && left.q == right.q) {
    return flux_of(left);
  }
  const auto [sL, sR] = einfeldt_speeds(left, right, g);
  const FaceFlux fL = flux_of(left);
  const FaceFlux fR = flux_of(right);
  if (sL >= 0.0) return fL;
  if (sR <= 0.0) return fR;
  const double inv = 1.0 / (sR - sL);
  return {(sR * fL.mass - sL * fR.mass + sL * sR * (right.zeta - left.zeta)) *
              inv,
          (sR * fL.mom - sL * fR.mom + sL * sR * (right.q - left.q)) * inv};
}

// Outgoing Riemann invariant toward the wall: q/h - 2 sqrt(g h).
double minus_invariant(const StatePoint& p, double g) {
  return p.q / p.h - 2.0 * std::sqrt(g * p.h);
}

// Continuous energy radiation functional 2 pi r rho (q^3/(2 h^2) + g zeta q).
double radiation_flux(const StatePoint& p, double r, double rho, double g) {
  return 2.0 * std::numbers::pi * r * rho *
         (p.q * p.q * p.q / (2.0 * p.h * p.h) + g * p.zeta * p.q);
}

void require_admissible(const StatePoint& p, double g, const char* where) {
  if (!(p.h > 0.0)) {
    throw DryState(std::string("dry state at ") + where);
  }
  const double u = p.q / p.h;
  const double margin = g * p.h - u * u;
  if (!(margin > 0.0)) {
    throw NotSubsonic(std::string("supersonic state at ") + where, margin);
  }
}

}  // namespace

FluidState make_rest_state(const RadialGrid& grid) {
  FluidState state;
  state.zeta.assign(grid.N, 0.0);
  state.q.assign(grid.N, 0.0);
  state.t = 0.0;
  return state;
}

FaceFlux physical_flux(const StatePoint& p, double g) {
  if (!(p.h > 0.0)) throw DryState("dry state");
  return {p.q, p.q * p.q / p.h + 0.5 * g * p.h * p.h};
}

FaceFlux numerical_flux(const StatePoint& left, const StatePoint& right,
                        double g) {
  return hll(left, right, g,
             [g](const StatePoint& p) { return physical_flux(p, g); });
}

std::pair<double, double> geometric_source(const StatePoint& p, double r) {
  if (!(p.h > 0.0)) throw DryState("dry state");
  if (!(r > 0.0)) throw NonPositiveRadius(r);
  return {-p.q / r, -p.q * p.q / (r * p.h)};
}

StatePoint resolve_wall_state(const StatePoint& interior, double q_wall,
                              double g, double h0) {
  require_admissible(interior, g, "the wall-side interior cell");
  const double invariant = minus_invariant(interior, g);
  const double scale = std::max(std::fabs(invariant), 2.0 * std::sqrt(g * interior.h));

  const auto residual = [&](double h) {
    return q_wall / h - 2.0 * std::sqrt(g * h) - invariant;
  };
  const auto slope = [&](double h) {
    return -q_wall / (h * h) - std::sqrt(g / h);
  };

  // The residual is strictly decreasing for h above the sonic height
  // (q_wall^2/g)^(1/3); only roots on that branch are subsonic.
  const double h_sonic = std::cbrt(q_wall * q_wall / g);

  double lo, hi;
  if (q_wall < 0.0) {
    if (residual(h_sonic) < 0.0) {
      throw NoWallSolution(
          "wall closure has no wet subsonic root for q_wall = " +
              std::to_string(q_wall),
          h_sonic, interior.h);
    }
    lo = h_sonic;
  } else {
    lo = std::max(h_sonic, 1e-14 * interior.h);
    while (residual(lo) < 0.0 && lo > 1e-300) lo *= 0.5;
    if (!(residual(lo) >= 0.0)) {
      throw NoWallSolution("wall closure lost its wet root", lo, interior.h);
    }
  }
  hi = std::max(interior.h, lo);
  int guard = 0;
  while (residual(hi) > 0.0) {
    hi *= 2.0;
    if (++guard > 200) {
      throw NoWallSolution("wall closure failed to bracket a root", lo, hi);
    }
  }

  double h = std::clamp(interior.h, lo, hi);
  for (int it = 0; it < 100; ++it) {
    const double f = residual(h);
    if (std::fabs(f) <= 1e-13 * scale) break;
    if (f > 0.0) lo = h; else hi = h;
    const double df = slope(h);
    double next = (df != 0.0) ? h - f / df : 0.5 * (lo + hi);
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    if (next == h) break;
    h = next;
  }

  const StatePoint wall = StatePoint::from_depth(h, q_wall, h0);
  const double u = q_wall / h;
  if (!(g * h - u * u > 0.0)) {
    throw NoWallSolution("wall closure left the subsonic region", lo, hi);
  }
  return wall;
}

StatePoint outer_boundary_state(const StatePoint& interior, double g,
                                double h0) {
  require_admissible(interior, g, "the outermost cell");
  const double incoming_rest = -2.0 * std::sqrt(g * h0);
  // Already satisfying the far-field condition: nothing to solve.
  if (minus_invariant(interior, g) == incoming_rest) return interior;

  const double outgoing = interior.q / interior.h +
                          2.0 * std::sqrt(g * interior.h);
  const double u = 0.5 * (outgoing + incoming_rest);
  const double c = 0.25 * (outgoing - incoming_rest);
  if (!(c > 0.0)) {
    throw NoWallSolution("far-field closure lost the wet state", incoming_rest,
                         outgoing);
  }
  const double h = c * c / g;
  if (!(std::fabs(u) < c)) {
    throw NoWallSolution("far-field closure left the subsonic region", u, c);
  }
  return StatePoint::from_depth(h, u * h, h0);
}

double cfl_dt(const FluidState& state, const RadialGrid& grid,
              const PhysicalParams& params, double cfl_number) {
  if (!(cfl_number > 0.0 && cfl_number <= 1.0)) {
    throw NonPositiveParameter("cfl_number");
  }
  double max_speed = 0.0;
  for (int j = 0; j < grid.N; ++j) {
    const double h = params.h0 + state.zeta[j];
    if (!(h > 0.0)) {
      throw DryState("dry cell " + std::to_string(j), j);
    }
    const double u = state.q[j] / h;
    const double margin = params.g * h - u * u;
    if (!(margin > 0.0)) {
      throw NotSubsonic("supersonic cell " + std::to_string(j), margin, j);
    }
    max_speed = std::max(max_speed, std::fabs(u) + std::sqrt(params.g * h));
  }
  return cfl_number * grid.dr / max_speed;
}

FluidRhs fluid_rhs(const FluidState& state, const RadialGrid& grid,
                   const PhysicalParams& params, double q_wall) {
  const int n = grid.N;
  const double g = params.g;
  const double h0 = params.h0;

  const auto cell = [&](int j) {
    return StatePoint::from_elevation(state.zeta[j], state.q[j], h0);
  };

  FluidRhs rhs;
  rhs.min_margin = std::numeric_limits<double>::infinity();
  rhs.min_h = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    const double h = h0 + state.zeta[j];
    if (!(h > 0.0)) throw DryState("dry cell " + std::to_string(j), j);
    const double u = state.q[j] / h;
    const double margin = g * h - u * u;
    if (!(margin > 0.0)) {
      throw NotSubsonic("supersonic cell " + std::to_string(j), margin, j);
    }
    rhs.min_margin = std::min(rhs.min_margin, margin);
    rhs.min_h = std::min(rhs.min_h, h);
  }

  rhs.wall_state = resolve_wall_state(cell(0), q_wall, g, h0);
  rhs.outer_state = outer_boundary_state(cell(n - 1), g, h0);

  std::vector<FaceFlux> flux(n + 1);
  flux[0] = shifted_physical_flux(rhs.wall_state, g, h0);
  flux[n] = shifted_physical_flux(rhs.outer_state, g, h0);
  detail::parallel_for(n - 1, [&](int i) {
    const int j = i + 1;
    flux[j] = hll(cell(j - 1), cell(j), g, [&](const StatePoint& p) {
      return shifted_physical_flux(p, g, h0);
    });
  });

  rhs.d_zeta.resize(n);
  rhs.d_q.resize(n);
  detail::parallel_for(n, [&](int j) {
    const double inv = 1.0 / (grid.center[j] * grid.dr);
    rhs.d_zeta[j] =
        -(grid.face[j + 1] * flux[j + 1].mass - grid.face[j] * flux[j].mass) *
        inv;
    const double h = h0 + state.zeta[j];
    rhs.d_q[j] =
        -(grid.face[j + 1] * flux[j + 1].mom - grid.face[j] * flux[j].mom) *
            inv +
        0.5 * g * state.zeta[j] * (h + h0) / grid.center[j];
  });

  rhs.wall_mass_flux = flux[0].mass;
  rhs.outer_mass_flux = flux[n].mass;
  rhs.wall_energy_flux = radiation_flux(rhs.wall_state, grid.R, params.rho, g);
  rhs.outer_energy_flux =
      radiation_flux(rhs.outer_state, grid.r_max, params.rho, g);
  return rhs;
}

FluidState step_fluid(const FluidState& state, double dt, const WallBC& wall,
                      const RadialGrid& grid, const PhysicalParams& params) {
  const FluidRhs rhs = fluid_rhs(state, grid, params, wall.q_wall);
  FluidState next;
  next.zeta.resize(grid.N);
  next.q.resize(grid.N);
  for (int j = 0; j < grid.N; ++j) {
    next.zeta[j] = state.zeta[j] + dt * rhs.d_zeta[j];
    next.q[j] = state.q[j] + dt * rhs.d_q[j];
  }
  next.t = state.t + dt;
  return next;
}

LinearRhs linearized_rhs(const FluidState& frozen, const FluidState& state,
                         const LinearForcing* forcing, double g_b,
                         const RadialGrid& grid,
                         const PhysicalParams& params) {
  const int n = grid.N;
  const double g = params.g;
  const double h0 = params.h0;

  std::vector<EigenData> ed(n);
  for (int j = 0; j < n; ++j) {
    ed[j] = eigen(StatePoint::from_elevation(frozen.zeta[j], frozen.q[j], h0),
                  g);
  }

  const auto value = [&](int j) { return Vec2{state.zeta[j], state.q[j]}; };

  // Wall ghost: keep the outgoing characteristic content of the first cell,
  // set the incoming one so the boundary scalar e2.u = g_b holds exactly.
  const Vec2 outgoing_part = ed[0].P_minus * value(0);
  const double c_plus = (g_b - outgoing_part.y) / ed[0].e_plus.y;
  const Vec2 wall_value = outgoing_part + c_plus * ed[0].e_plus;

  // Far-field ghost: outgoing content only (absorbing).
  const Vec2 outer_value = ed[n - 1].P_plus * value(n - 1);

  LinearRhs rhs;
  rhs.d_zeta.resize(n);
  rhs.d_q.resize(n);
  rhs.wall_state = StatePoint::from_elevation(wall_value.x, wall_value.y, h0);

  detail::parallel_for(n, [&](int j) {
    const Vec2 u = value(j);
    const Vec2 um = (j == 0) ? wall_value : value(j - 1);
    const Vec2 up = (j == n - 1) ? outer_value : value(j + 1);

    const Mat2 a_plus = ed[j].lambda_plus * ed[j].P_plus;
    const Mat2 a_minus = ed[j].lambda_minus * ed[j].P_minus;
    const Vec2 upwind = a_plus * (u - um) + a_minus * (up - u);

    const Mat2 B = source_matrix(
        StatePoint::from_elevation(frozen.zeta[j], frozen.q[j], h0),
        grid.center[j]);
    const Vec2 source = B * u;

    double fz = 0.0, fq = 0.0;
    if (forcing != nullptr) {
      fz = forcing->zeta[j];
      fq = forcing->q[j];
    }
    rhs.d_zeta[j] = -upwind.x / grid.dr - source.x + fz;
    rhs.d_q[j] = -upwind.y / grid.dr - source.y + fq;
  });
  return rhs;
}

FluidState step_linearized(const FluidState& frozen, const FluidState& state,
                           const LinearForcing* forcing, double g_b, double dt,
                           const RadialGrid& grid,
                           const PhysicalParams& params) {
  const LinearRhs rhs = linearized_rhs(frozen, state, forcing, g_b, grid,
                                       params);
  FluidState next;
  next.zeta.resize(grid.N);
  next.q.resize(grid.N);
  for (int j = 0; j < grid.N; ++j) {
    next.zeta[j] = state.zeta[j] + dt * rhs.d_zeta[j];
    next.q[j] = state.q[j] + dt * rhs.d_q[j];
  }
  next.t = state.t + dt;
  return next;
}

int fluid_thread_count() { return detail::thread_cap(); }

}  // namespace floatswe
