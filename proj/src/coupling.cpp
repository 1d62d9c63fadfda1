#include "floatswe/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace floatswe {

namespace {

// One-sided second-order traces at r = R from the first three cell values
// (exact for fields quadratic in r).
double trace_value(const std::vector<double>& v) {
  return (15.0 * v[0] - 10.0 * v[1] + 3.0 * v[2]) / 8.0;
}

double trace_derivative(const std::vector<double>& v, double dr) {
  return (-2.0 * v[0] + 3.0 * v[1] - v[2]) / dr;
}

struct StageEval {
  FluidRhs fluid;
  double q_wall = 0.0;
  double d_delta = 0.0;
  double d_w = 0.0;
};

StageEval eval_stage(const FluidState& fluid, const SolidState& solid,
                     const RadialGrid& grid, const PhysicalParams& params,
                     const SolidShape& shape, bool with_pcor) {
  StageEval stage;
  stage.q_wall = interior_discharge(params.R, solid.w);
  stage.fluid = fluid_rhs(fluid, grid, params, stage.q_wall);
  stage.d_delta = solid.w;
  stage.d_w = solid_rhs(solid, stage.fluid.wall_state.zeta, params, shape,
                        with_pcor);
  return stage;
}

TrajectoryRecord make_record(double t, const FluidState& fluid,
                             const SolidState& solid, const StageEval& stage,
                             const RadialGrid& grid,
                             const PhysicalParams& params,
                             const SolidShape& shape) {
  TrajectoryRecord rec;
  rec.t = t;
  rec.delta = solid.delta;
  rec.w = solid.w;
  rec.zeta_R = stage.fluid.wall_state.zeta;
  rec.q_wall = stage.q_wall;
  rec.E_sw = fluid_energy(fluid, grid, params);
  rec.E_sol = coupled_solid_energy(solid, params, shape);
  rec.E_tot = rec.E_sw + rec.E_sol;
  rec.P_cor = pressure_cor(stage.q_wall, stage.fluid.wall_state.h,
                           shape.h_w(solid.delta, params.R), params.rho);
  rec.mass_total = mass_total(fluid, grid);
  rec.subsonic_margin_min = stage.fluid.min_margin;
  rec.min_h = stage.fluid.min_h;
  return rec;
}

FluidState axpy(const FluidState& base, double dt,
                const std::vector<double>& dz, const std::vector<double>& dq) {
  FluidState out;
  const size_t n = base.zeta.size();
  out.zeta.resize(n);
  out.q.resize(n);
  for (size_t j = 0; j < n; ++j) {
    out.zeta[j] = base.zeta[j] + dt * dz[j];
    out.q[j] = base.q[j] + dt * dq[j];
  }
  out.t = base.t + dt;
  return out;
}

FluidState heun_combine(const FluidState& base, double dt,
                        const FluidRhs& k1, const FluidRhs& k2) {
  FluidState out;
  const size_t n = base.zeta.size();
  out.zeta.resize(n);
  out.q.resize(n);
  const double half = 0.5 * dt;
  for (size_t j = 0; j < n; ++j) {
    out.zeta[j] = base.zeta[j] + half * (k1.d_zeta[j] + k2.d_zeta[j]);
    out.q[j] = base.q[j] + half * (k1.d_q[j] + k2.d_q[j]);
  }
  out.t = base.t + dt;
  return out;
}

double pick_dt(const FluidState& fluid, const RadialGrid& grid,
               const PhysicalParams& params, const RunOptions& opts,
               double t_now) {
  const double remaining = opts.T_end - t_now;
  if (opts.fixed_dt > 0.0) {
    const double stable = cfl_dt(fluid, grid, params, 1.0);
    if (opts.fixed_dt > stable * (1.0 + 1e-9)) {
      throw CouplingDiverged("fixed dt " + std::to_string(opts.fixed_dt) +
                             " exceeds the CFL limit " +
                             std::to_string(stable));
    }
    return std::min(opts.fixed_dt, remaining);
  }
  return std::min(cfl_dt(fluid, grid, params, opts.cfl), remaining);
}

}  // namespace

CoupledState make_equilibrium_state(const RadialGrid& grid) {
  return {make_rest_state(grid), SolidState{}, 0.0};
}

CoupledState coupled_step(const CoupledState& cs, double dt,
                          const RadialGrid& grid, const PhysicalParams& params,
                          const SolidShape& shape,
                          bool with_pressure_corrector) {
  const StageEval s1 = eval_stage(cs.fluid, cs.solid, grid, params, shape,
                                  with_pressure_corrector);
  const FluidState fluid_p = axpy(cs.fluid, dt, s1.fluid.d_zeta, s1.fluid.d_q);
  const SolidState solid_p{cs.solid.delta + dt * s1.d_delta,
                           cs.solid.w + dt * s1.d_w};
  const StageEval s2 = eval_stage(fluid_p, solid_p, grid, params, shape,
                                  with_pressure_corrector);

  CoupledState next;
  next.fluid = heun_combine(cs.fluid, dt, s1.fluid, s2.fluid);
  next.solid.delta = cs.solid.delta + 0.5 * dt * (s1.d_delta + s2.d_delta);
  next.solid.w = cs.solid.w + 0.5 * dt * (s1.d_w + s2.d_w);
  next.t = cs.t + dt;
  return next;
}

Trajectory run_coupled(const CoupledState& cs0, const RunOptions& opts,
                       const RadialGrid& grid, const PhysicalParams& params,
                       const SolidShape& shape) {
  const bool pcor = opts.with_pressure_corrector;
  Trajectory traj;

  CoupledState cs = cs0;
  StageEval s1 = eval_stage(cs.fluid, cs.solid, grid, params, shape, pcor);
  traj.records.push_back(
      make_record(cs.t, cs.fluid, cs.solid, s1, grid, params, shape));
  if (opts.snapshot_every > 0) traj.snapshots.emplace_back(cs.t, cs.fluid);

  const double two_pi = 2.0 * std::numbers::pi;
  int step = 0;
  while (cs.t < opts.T_end - 1e-14 * std::max(opts.T_end, 1.0)) {
    const double dt = pick_dt(cs.fluid, grid, params, opts, cs.t);

    const FluidState fluid_p =
        axpy(cs.fluid, dt, s1.fluid.d_zeta, s1.fluid.d_q);
    const SolidState solid_p{cs.solid.delta + dt * s1.d_delta,
                             cs.solid.w + dt * s1.d_w};
    const StageEval s2 =
        eval_stage(fluid_p, solid_p, grid, params, shape, pcor);

    CoupledState next;
    next.fluid = heun_combine(cs.fluid, dt, s1.fluid, s2.fluid);
    next.solid.delta = cs.solid.delta + 0.5 * dt * (s1.d_delta + s2.d_delta);
    next.solid.w = cs.solid.w + 0.5 * dt * (s1.d_w + s2.d_w);
    next.t = cs.t + dt;

    // The stage evaluation at the accepted state doubles as next step's
    // first stage.
    StageEval s_next =
        eval_stage(next.fluid, next.solid, grid, params, shape, pcor);

    TrajectoryRecord rec =
        make_record(next.t, next.fluid, next.solid, s_next, grid, params,
                    shape);
    rec.dt_applied = dt;
    rec.wall_mass_rate_applied =
        two_pi * grid.R * 0.5 *
        (s1.fluid.wall_mass_flux + s2.fluid.wall_mass_flux);
    rec.outer_mass_rate_applied =
        two_pi * grid.r_max * 0.5 *
        (s1.fluid.outer_mass_flux + s2.fluid.outer_mass_flux);
    rec.outer_energy_rate_applied =
        0.5 * (s1.fluid.outer_energy_flux + s2.fluid.outer_energy_flux);
    rec.w_predictor = solid_p.w;
    traj.records.push_back(rec);

    ++step;
    if (opts.snapshot_every > 0 && step % opts.snapshot_every == 0) {
      traj.snapshots.emplace_back(next.t, next.fluid);
    }

    cs = next;
    s1 = s_next;
  }
  return traj;
}

MotionSignal MotionSignal::from_function(std::function<double(double)> w_of_t) {
  MotionSignal s;
  s.w_ = std::move(w_of_t);
  s.w0_ = s.w_(0.0);
  s.tabulated_ = false;
  return s;
}

MotionSignal MotionSignal::from_trajectory(const Trajectory& recorded) {
  MotionSignal s;
  s.tabulated_ = true;
  const auto& rec = recorded.records;
  s.w0_ = rec.empty() ? 0.0 : rec.front().w;
  s.delta0_ = rec.empty() ? 0.0 : rec.front().delta;
  for (size_t k = 0; k + 1 < rec.size(); ++k) {
    s.stages_.emplace_back(rec[k].w, rec[k + 1].w_predictor);
  }
  return s;
}

std::pair<double, double> MotionSignal::stage_values(int step, double t,
                                                     double dt) const {
  if (!tabulated_) return {w_(t), w_(t + dt)};
  if (step < 0 || step >= static_cast<int>(stages_.size())) {
    throw IncompatibleData(
        "recorded motion table exhausted at step " + std::to_string(step),
        static_cast<double>(step));
  }
  return stages_[static_cast<size_t>(step)];
}

double MotionSignal::initial_value() const { return w0_; }

Trajectory run_prescribed(const FluidState& fluid0, const MotionSignal& motion,
                          const RunOptions& opts, const RadialGrid& grid,
                          const PhysicalParams& params,
                          const SolidShape& shape) {
  // Order-0 compatibility: the data's wall trace must carry the discharge the
  // motion prescribes at t = 0.
  const double q_trace = trace_value(fluid0.q);
  const double required = interior_discharge(params.R, motion.initial_value());
  const double residual = q_trace - required;
  const double tol0 = 1e-8 * std::sqrt(params.g * params.h0) * params.h0;
  if (std::fabs(residual) > tol0) {
    throw IncompatibleData(
        "prescribed motion incompatible at order 0: residual = " +
            std::to_string(residual),
        residual);
  }

  Trajectory traj;
  FluidState fluid = fluid0;
  SolidState solid{motion.initial_delta(), motion.initial_value()};
  double t = fluid0.t;

  const auto eval = [&](const FluidState& f, double w) {
    StageEval stage;
    stage.q_wall = interior_discharge(params.R, w);
    stage.fluid = fluid_rhs(f, grid, params, stage.q_wall);
    stage.d_delta = w;
    stage.d_w = 0.0;
    return stage;
  };

  StageEval s1 = eval(fluid, solid.w);
  traj.records.push_back(
      make_record(t, fluid, solid, s1, grid, params, shape));
  if (opts.snapshot_every > 0) traj.snapshots.emplace_back(t, fluid);

  const double two_pi = 2.0 * std::numbers::pi;
  int step = 0;
  while (t < opts.T_end - 1e-14 * std::max(opts.T_end, 1.0)) {
    const double dt = pick_dt(fluid, grid, params, opts, t);
    const auto [w1, w2] = motion.stage_values(step, t, dt);

    StageEval stage1 = (w1 == solid.w) ? s1 : eval(fluid, w1);
    const FluidState fluid_p =
        axpy(fluid, dt, stage1.fluid.d_zeta, stage1.fluid.d_q);
    const StageEval stage2 = eval(fluid_p, w2);

    FluidState next = heun_combine(fluid, dt, stage1.fluid, stage2.fluid);
    SolidState next_solid{solid.delta + 0.5 * dt * (w1 + w2), 0.0};
    t += dt;

    // Row velocity: the signal value at the new time (table: next stage-1).
    double w_row = w2;
    try {
      w_row = motion.stage_values(step + 1, t, 0.0).first;
    } catch (const IncompatibleData&) {
      // final row of a tabulated replay; keep the predictor value
    }
    next_solid.w = w_row;

    StageEval s_next = eval(next, next_solid.w);
    TrajectoryRecord rec =
        make_record(t, next, next_solid, s_next, grid, params, shape);
    rec.dt_applied = dt;
    rec.wall_mass_rate_applied =
        two_pi * grid.R * 0.5 *
        (stage1.fluid.wall_mass_flux + stage2.fluid.wall_mass_flux);
    rec.outer_mass_rate_applied =
        two_pi * grid.r_max * 0.5 *
        (stage1.fluid.outer_mass_flux + stage2.fluid.outer_mass_flux);
    rec.outer_energy_rate_applied =
        0.5 * (stage1.fluid.outer_energy_flux + stage2.fluid.outer_energy_flux);
    rec.w_predictor = w2;
    traj.records.push_back(rec);

    ++step;
    if (opts.snapshot_every > 0 && step % opts.snapshot_every == 0) {
      traj.snapshots.emplace_back(t, next);
    }
    fluid = next;
    solid = next_solid;
    s1 = s_next;
  }
  return traj;
}

CompatibilityReport check_compatibility(const FluidState& fluid0,
                                        const SolidState& solid0,
                                        const RadialGrid& grid,
                                        const PhysicalParams& params,
                                        const SolidShape& shape, double tol0,
                                        double tol1) {
  CompatibilityReport report;
  report.tol0 =
      tol0 > 0.0 ? tol0 : 1e-8 * std::sqrt(params.g * params.h0) * params.h0;
  report.tol1 = tol1 > 0.0 ? tol1 : 1e-6 * params.g * params.h0;

  const double q_R = trace_value(fluid0.q);
  const double zeta_R = trace_value(fluid0.zeta);
  const double h_R = params.h0 + zeta_R;

  report.order0_residual = q_R - interior_discharge(params.R, solid0.w);

  std::vector<double> momentum(3);
  for (int j = 0; j < 3; ++j) {
    const double h = params.h0 + fluid0.zeta[j];
    momentum[j] = fluid0.q[j] * fluid0.q[j] / h;
  }
  const double lhs = -trace_derivative(momentum, grid.dr) -
                     trace_value(momentum) / params.R -
                     params.g * h_R * trace_derivative(fluid0.zeta, grid.dr);
  const double delta2 = solid_rhs(solid0, zeta_R, params, shape);
  const double rhs = -(params.R / 2.0) * delta2;
  report.order1_residual = lhs - rhs;

  report.pass0 = std::fabs(report.order0_residual) < report.tol0;
  report.pass1 = std::fabs(report.order1_residual) < report.tol1;
  return report;
}

ReleaseData generate_compatible_release(double delta0, double L,
                                        const RadialGrid& grid,
                                        const PhysicalParams& params,
                                        const SolidShape& shape) {
  if (!(L > 0.0)) throw NonPositiveParameter("L");
  const double m_a = added_mass(delta0, shape, params);  // guards contact
  const double slope = -params.c_stiff * delta0 * params.R /
                       (2.0 * (params.m + m_a) * params.g * params.h0);

  // Quadratic across the wall stencil (so the one-sided traces are exact),
  // C^1-matched exponential tail beyond it.
  const double s_star = std::max(3.5 * grid.dr, L / 4.0);
  const double c2 = -slope / (2.0 * L);
  const auto Q = [&](double s) { return slope * s + c2 * s * s; };
  const double A = Q(s_star);
  const double Qp = slope + 2.0 * c2 * s_star;
  const double B = Qp + A / L;

  const auto profile = [&](double s) {
    if (s <= s_star) return Q(s);
    const double tau = s - s_star;
    return (A + B * tau) * std::exp(-tau / L);
  };

  ReleaseData release;
  release.wall_slope = slope;
  release.state.fluid.zeta.resize(grid.N);
  release.state.fluid.q.assign(grid.N, 0.0);
  for (int j = 0; j < grid.N; ++j) {
    const double zeta = profile(grid.center[j] - grid.R);
    if (!(params.h0 + zeta > 0.0)) {
      throw DryState("release profile dries cell " + std::to_string(j), j);
    }
    release.state.fluid.zeta[j] = zeta;
  }
  release.state.fluid.t = 0.0;
  release.state.solid = {delta0, 0.0};
  release.state.t = 0.0;
  return release;
}

PicardResult picard_solve(const CoupledState& cs0, double T, int n_iters,
                          const RadialGrid& grid, const PhysicalParams& params,
                          const SolidShape& shape) {
  if (n_iters < 1) throw NonPositiveParameter("n_iters");
  if (!(T > 0.0)) throw NonPositiveParameter("T");

  const double dt_cfl = cfl_dt(cs0.fluid, grid, params, 0.9);
  const int steps = std::max(1, static_cast<int>(std::ceil(T / dt_cfl)));
  const double dt = T / steps;
  const int K = steps;

  struct IterateTrajectory {
    std::vector<FluidState> fluid;   // K+1 states
    std::vector<double> delta, w;    // K+1 values
    std::vector<double> zeta_R;      // wall trace per step time
  };

  // Iterate 0: constant-in-time data with the release velocity.
  IterateTrajectory prev;
  prev.fluid.assign(K + 1, cs0.fluid);
  prev.delta.resize(K + 1);
  prev.w.assign(K + 1, cs0.solid.w);
  prev.zeta_R.assign(K + 1, trace_value(cs0.fluid.zeta));
  for (int k = 0; k <= K; ++k) {
    prev.delta[k] = cs0.solid.delta + cs0.solid.w * (dt * k);
  }

  PicardResult result;
  int growth_streak = 0;

  for (int n = 1; n <= n_iters; ++n) {
    IterateTrajectory cur;
    cur.fluid.resize(K + 1);
    cur.delta.resize(K + 1);
    cur.w.resize(K + 1);
    cur.zeta_R.resize(K + 1);

    // Linear fluid problem, coefficients and boundary data frozen at the
    // previous iterate; Heun in time with stage data at the stored times.
    cur.fluid[0] = cs0.fluid;
    for (int k = 0; k < K; ++k) {
      const double gb0 = interior_discharge(params.R, prev.w[k]);
      const double gb1 = interior_discharge(params.R, prev.w[k + 1]);
      const LinearRhs L1 = linearized_rhs(prev.fluid[k], cur.fluid[k], nullptr,
                                          gb0, grid, params);
      const FluidState mid = axpy(cur.fluid[k], dt, L1.d_zeta, L1.d_q);
      const LinearRhs L2 = linearized_rhs(prev.fluid[k + 1], mid, nullptr, gb1,
                                          grid, params);
      FluidState next;
      next.zeta.resize(grid.N);
      next.q.resize(grid.N);
      for (int j = 0; j < grid.N; ++j) {
        next.zeta[j] =
            cur.fluid[k].zeta[j] + 0.5 * dt * (L1.d_zeta[j] + L2.d_zeta[j]);
        next.q[j] = cur.fluid[k].q[j] + 0.5 * dt * (L1.d_q[j] + L2.d_q[j]);
      }
      next.t = cs0.fluid.t + dt * (k + 1);
      cur.zeta_R[k] = L1.wall_state.zeta;
      cur.fluid[k + 1] = std::move(next);
    }
    cur.zeta_R[K] = linearized_rhs(prev.fluid[K], cur.fluid[K], nullptr,
                                   interior_discharge(params.R, prev.w[K]),
                                   grid, params)
                        .wall_state.zeta;

    // Linear heave ODE forced by the new wall trace; the quadratic velocity
    // term is frozen at the previous iterate.
    const auto ode_coeffs = [&](int k, double& a, double& b, double& c) {
      const double M = params.m + added_mass(prev.delta[k], shape, params);
      const double h_e = params.h0 + prev.zeta_R[k];
      if (!(h_e > 0.0)) throw DryState("dry wall trace in the iteration");
      const double quad = params.b_scale / (h_e * h_e) +
                          beta_coeff(prev.delta[k], shape, params);
      a = -params.c_stiff / M;
      b = quad * prev.w[k] / M;
      c = params.c_stiff * cur.zeta_R[k] / M;
    };

    cur.delta[0] = cs0.solid.delta;
    cur.w[0] = cs0.solid.w;
    for (int k = 0; k < K; ++k) {
      double a0, b0, c0, a1, b1, c1;
      ode_coeffs(k, a0, b0, c0);
      ode_coeffs(k + 1, a1, b1, c1);
      const double k1 = a0 * cur.delta[k] + b0 * cur.w[k] + c0;
      const double dp = cur.delta[k] + dt * cur.w[k];
      const double wp = cur.w[k] + dt * k1;
      const double k2 = a1 * dp + b1 * wp + c1;
      cur.delta[k + 1] = cur.delta[k] + 0.5 * dt * (cur.w[k] + wp);
      cur.w[k + 1] = cur.w[k] + 0.5 * dt * (k1 + k2);
    }

    double diff = 0.0;
    for (int k = 0; k <= K; ++k) {
      double fluid_diff = 0.0;
      for (int j = 0; j < grid.N; ++j) {
        fluid_diff = std::max(
            fluid_diff, std::fabs(cur.fluid[k].zeta[j] - prev.fluid[k].zeta[j]));
        fluid_diff = std::max(fluid_diff,
                              std::fabs(cur.fluid[k].q[j] - prev.fluid[k].q[j]));
      }
      diff = std::max(diff, fluid_diff + std::fabs(cur.delta[k] - prev.delta[k]) +
                                std::fabs(cur.w[k] - prev.w[k]));
    }

    if (!result.diff_history.empty() && diff > result.diff_history.back()) {
      if (++growth_streak >= 3) {
        throw NonContracting(
            "iterate differences grew for 3 consecutive iterations "
            "(horizon too long); last = " +
            std::to_string(diff));
      }
    } else {
      growth_streak = 0;
    }
    result.diff_history.push_back(diff);
    prev = std::move(cur);
  }

  result.iterations = static_cast<int>(result.diff_history.size());
  result.dt = dt;
  result.steps = K;
  for (int k = 0; k <= K; ++k) {
    TrajectoryRecord rec;
    rec.t = cs0.fluid.t + dt * k;
    rec.delta = prev.delta[k];
    rec.w = prev.w[k];
    rec.zeta_R = prev.zeta_R[k];
    rec.q_wall = interior_discharge(params.R, prev.w[k]);
    rec.dt_applied = (k == 0) ? 0.0 : dt;
    result.last.records.push_back(rec);
    result.last.snapshots.emplace_back(rec.t, prev.fluid[k]);
  }
  return result;
}

}  // namespace floatswe
