#pragma once

// Heave dynamics of the floating cylinder: added mass and its companion
// coefficient, the vertical-acceleration right-hand side, the interior
// discharge profile, the three-part interior pressure reconstruction and the
// energy-correcting wall pressure term.

#include <functional>

#include "floatswe/params.hpp"

namespace floatswe {

struct SolidState {
  double delta = 0.0;  // vertical displacement from equilibrium [m]
  double w = 0.0;      // vertical velocity [m/s]
};

// Added mass m_a(delta). Flat bottoms use the closed form b_scale/h_w;
// profiled bottoms integrate (rho*pi/2) r^3 / h_w(delta, r).
double added_mass(double delta, const SolidShape& shape,
                  const PhysicalParams& params);

// Companion coefficient beta(delta): b_scale/(2 h_w^2) for flat bottoms, plus
// the profile correction (pi rho/8) int r^4 h_w'/h_w^3 for non-flat ones.
double beta_coeff(double delta, const SolidShape& shape,
                  const PhysicalParams& params);

// Interior discharge q_i(r) = -(r/2) w; exact solution of the interior mass
// balance d_r q_i + q_i/r = -w with regularity at the axis.
double interior_discharge(double r, double w);

// Non-hydrostatic wall pressure correction (rho/2) q_i(R)^2 (1/h_e^2 - 1/h_w^2).
double pressure_cor(double q_i_R, double h_e_R, double h_w_R, double rho);

// Vertical acceleration from the heave ODE:
//   (m + m_a) dd  = -c_stiff delta + c_stiff zeta_e(R) + (b_scale/h_e(R)^2 + beta) w^2.
// With the pressure corrector disabled the quadratic coefficient degrades to
// b_scale/h_w(R)^2 + beta (the wall jump term is then unbalanced).
double solid_rhs(const SolidState& s, double zeta_e_R,
                 const PhysicalParams& params, const SolidShape& shape,
                 bool with_pressure_corrector = true);

struct FluidForceBreakdown {
  double F_I = 0.0;    // velocity-squared part [N]
  double F_II = 0.0;   // acceleration (added mass) part [N]
  double F_III = 0.0;  // contact-line pressure jump part [N]
  double P_cor = 0.0;  // [Pa]
  double m_a = 0.0;    // [kg]
  double beta = 0.0;   // [kg/m]

  double total() const { return F_I + F_II + F_III; }
};

struct InteriorPressureField {
  std::function<double(double)> P_I;   // includes P_atm offset
  std::function<double(double)> P_II;  // vanishes at r = R
  double P_III = 0.0;                  // spatially constant
  FluidForceBreakdown forces;
};

// Reconstructs the interior pressure for a given acceleration delta_ddot
// (an input, so force identities can be tested non-circularly). Flat bottoms
// use closed forms; profiled bottoms integrate the radial pressure ODEs.
InteriorPressureField interior_pressure_profiles(const SolidState& s,
                                                 double delta_ddot,
                                                 double zeta_e_R,
                                                 const PhysicalParams& params,
                                                 const SolidShape& shape);

}  // namespace floatswe
