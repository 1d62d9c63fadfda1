#include "floatswe/diagnostics.hpp"

#include <cmath>
#include <numbers>

namespace floatswe {

namespace {

// Compensated summation; the conservation audits assert per-step residuals
// near machine precision, so the reductions must not lose digits.
class KahanSum {
 public:
  void add(double v) {
    const double y = v - carry_;
    const double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace

double fluid_energy(const FluidState& state, const RadialGrid& grid,
                    const PhysicalParams& params) {
  KahanSum sum;
  for (int j = 0; j < grid.N; ++j) {
    const double h = params.h0 + state.zeta[j];
    if (!(h > 0.0)) throw DryState("dry cell in energy quadrature", j);
    const double density = params.g * state.zeta[j] * state.zeta[j] +
                           state.q[j] * state.q[j] / h;
    sum.add(density * grid.center[j] * grid.dr);
  }
  return std::numbers::pi * params.rho * sum.value();
}

double solid_energy(const SolidState& s, const PhysicalParams& params) {
  return 0.5 * params.m * s.w * s.w + params.m * params.g * s.delta;
}

double coupled_solid_energy(const SolidState& s, const PhysicalParams& params,
                            const SolidShape& shape) {
  const double m_a = added_mass(s.delta, shape, params);
  return 0.5 * (params.m + m_a) * s.w * s.w +
         0.5 * params.c_stiff * s.delta * s.delta;
}

double mass_total(const FluidState& state, const RadialGrid& grid) {
  KahanSum sum;
  for (int j = 0; j < grid.N; ++j) {
    sum.add(state.zeta[j] * grid.center[j] * grid.dr);
  }
  return 2.0 * std::numbers::pi * sum.value();
}

std::pair<double, double> energy_flux_at_wall(const StatePoint& wall_state,
                                              double P_i_wall_minus_Patm,
                                              const PhysicalParams& params) {
  const double h = wall_state.h;
  if (!(h > 0.0)) throw DryState("dry wall state");
  const double q = wall_state.q;
  const double radiation =
      2.0 * std::numbers::pi * params.R * params.rho *
      (q * q * q / (2.0 * h * h) + params.g * wall_state.zeta * q);
  const double pressure_work =
      2.0 * std::numbers::pi * params.R * P_i_wall_minus_Patm * q;
  return {radiation, pressure_work};
}

AuditReport audit_run(const Trajectory& trajectory) {
  AuditReport report;
  const auto& rec = trajectory.records;
  if (rec.empty()) return report;

  const double E0 = rec.front().E_tot;
  KahanSum radiated;
  double max_drift = 0.0;
  double max_mass_residual = 0.0;

  for (size_t k = 1; k < rec.size(); ++k) {
    const double dt = rec[k].dt_applied;
    radiated.add(dt * rec[k].outer_energy_rate_applied);
    max_drift = std::max(max_drift,
                         std::fabs(rec[k].E_tot - E0 + radiated.value()));

    const double exchanged = dt * (rec[k].wall_mass_rate_applied -
                                   rec[k].outer_mass_rate_applied);
    const double residual =
        std::fabs(rec[k].mass_total - rec[k - 1].mass_total - exchanged);
    max_mass_residual = std::max(max_mass_residual, residual);
  }

  report.max_energy_drift = max_drift;
  report.max_mass_residual_per_step = max_mass_residual;
  report.final_energy_imbalance =
      std::fabs(rec.back().E_tot - E0 + radiated.value());
  report.duration = rec.back().t - rec.front().t;
  report.steps = static_cast<int>(rec.size()) - 1;
  return report;
}

double observed_order(const std::vector<int>& cells,
                      const std::vector<double>& drifts) {
  // Least-squares slope of log(drift) against log(1/N).
  const size_t n = std::min(cells.size(), drifts.size());
  if (n < 2) return 0.0;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double x = -std::log(static_cast<double>(cells[i]));
    const double y = std::log(std::max(drifts[i], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  return (n * sxy - sx * sy) / denom;
}

}  // namespace floatswe
