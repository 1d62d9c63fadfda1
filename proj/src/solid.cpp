#include "floatswe/solid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "floatswe/quadrature.hpp"

namespace floatswe {

namespace {

// Profiled bottoms carry arbitrary closures, so non-contact is enforced by
// sampling the column height across [0, R].
void require_no_contact(double delta, const SolidShape& shape, double R) {
  if (shape.is_flat()) {
    if (!(shape.h_w(delta, 0.0) > 0.0)) {
      throw BottomContact("solid touches the bottom: h_w = " +
                          std::to_string(shape.h_w(delta, 0.0)));
    }
    return;
  }
  constexpr int kSamples = 256;
  for (int i = 0; i <= kSamples; ++i) {
    const double r = R * static_cast<double>(i) / kSamples;
    if (!(shape.h_w(delta, r) > 0.0)) {
      throw BottomContact("solid touches the bottom at r = " +
                          std::to_string(r));
    }
  }
}

}  // namespace

double added_mass(double delta, const SolidShape& shape,
                  const PhysicalParams& params) {
  require_no_contact(delta, shape, params.R);
  if (shape.is_flat()) {
    return params.b_scale / shape.h_w(delta, 0.0);
  }
  const double coeff = params.rho * std::numbers::pi / 2.0;
  return coeff * integrate(
                     [&](double r) { return r * r * r / shape.h_w(delta, r); },
                     0.0, params.R);
}

double beta_coeff(double delta, const SolidShape& shape,
                  const PhysicalParams& params) {
  require_no_contact(delta, shape, params.R);
  const double h_w_edge = shape.h_w(delta, params.R);
  const double edge_term = params.b_scale / (2.0 * h_w_edge * h_w_edge);
  if (shape.is_flat()) return edge_term;
  const double coeff = params.rho * std::numbers::pi / 8.0;
  return edge_term +
         coeff * integrate(
                     [&](double r) {
                       const double hw = shape.h_w(delta, r);
                       return r * r * r * r * shape.dr_h_w_eq(r) /
                              (hw * hw * hw);
                     },
                     0.0, params.R);
}

double interior_discharge(double r, double w) { return -(r / 2.0) * w; }

double pressure_cor(double q_i_R, double h_e_R, double h_w_R, double rho) {
  if (!(h_e_R > 0.0)) throw DryState("h_e(R) must be positive");
  if (!(h_w_R > 0.0)) throw DryState("h_w(R) must be positive");
  return 0.5 * rho * q_i_R * q_i_R *
         (1.0 / (h_e_R * h_e_R) - 1.0 / (h_w_R * h_w_R));
}

double solid_rhs(const SolidState& s, double zeta_e_R,
                 const PhysicalParams& params, const SolidShape& shape,
                 bool with_pressure_corrector) {
  const double h_e_R = params.h0 + zeta_e_R;
  if (!(h_e_R > 0.0)) {
    throw DryState("dry exterior trace at the wall: h_e(R) = " +
                   std::to_string(h_e_R));
  }
  const double m_a = added_mass(s.delta, shape, params);
  const double beta = beta_coeff(s.delta, shape, params);
  const double h_w_edge = shape.h_w(s.delta, params.R);
  const double quad =
      with_pressure_corrector
          ? params.b_scale / (h_e_R * h_e_R) + beta
          : params.b_scale / (h_w_edge * h_w_edge) + beta;
  return (-params.c_stiff * s.delta + params.c_stiff * zeta_e_R +
          quad * s.w * s.w) /
         (params.m + m_a);
}

InteriorPressureField interior_pressure_profiles(const SolidState& s,
                                                 double delta_ddot,
                                                 double zeta_e_R,
                                                 const PhysicalParams& params,
                                                 const SolidShape& shape) {
  require_no_contact(s.delta, shape, params.R);
  const double h_e_R = params.h0 + zeta_e_R;
  if (!(h_e_R > 0.0)) throw DryState("dry exterior trace at the wall");

  const double R = params.R;
  const double rho = params.rho;
  const double w = s.w;
  const double h_w_edge = shape.h_w(s.delta, R);
  const double zeta_i_R = h_w_edge - params.h0;
  const double q_i_R = interior_discharge(R, w);

  InteriorPressureField field;
  field.forces.m_a = added_mass(s.delta, shape, params);
  field.forces.beta = beta_coeff(s.delta, shape, params);
  field.forces.P_cor = pressure_cor(q_i_R, h_e_R, h_w_edge, rho);
  field.P_III = rho * params.g * (zeta_e_R - zeta_i_R) + field.forces.P_cor;
  field.forces.F_III = std::numbers::pi * R * R * field.P_III;

  if (shape.is_flat()) {
    const double hw = h_w_edge;
    const double P_atm = params.P_atm;
    field.P_I = [=](double r) {
      return P_atm + 3.0 * rho * w * w / (8.0 * hw * hw) * (R * R - r * r);
    };
    field.P_II = [=, dd = delta_ddot](double r) {
      return -rho * dd * (R * R - r * r) / (4.0 * hw);
    };
    field.forces.F_I =
        3.0 * std::numbers::pi * rho * R * R * R * R * w * w / (16.0 * hw * hw);
    field.forces.F_II = -field.forces.m_a * delta_ddot;
    return field;
  }

  // Non-flat bottom: integrate the first-order radial pressure equations.
  const double delta = s.delta;
  const double g = params.g;
  const double P_atm = params.P_atm;
  const auto dPI = [=](double t) {
    const double hw = shape.h_w(delta, t);
    const double dhw = shape.dr_h_w_eq(t);
    return rho * (w * w * (3.0 * t / (4.0 * hw * hw) -
                           t * t * dhw / (4.0 * hw * hw * hw)) +
                  g * dhw);
  };
  field.P_I = [=](double r) { return P_atm + integrate(dPI, r, R); };
  field.P_II = [=, dd = delta_ddot](double r) {
    return -rho * dd *
           integrate([=](double t) { return t / (2.0 * shape.h_w(delta, t)); },
                     r, R);
  };
  const auto& PI = field.P_I;
  const auto& PII = field.P_II;
  field.forces.F_I =
      2.0 * std::numbers::pi *
      integrate([&](double r) { return (PI(r) - P_atm) * r; }, 0.0, R);
  field.forces.F_II =
      2.0 * std::numbers::pi * integrate([&](double r) { return PII(r) * r; },
                                         0.0, R);
  return field;
}

}  // namespace floatswe
