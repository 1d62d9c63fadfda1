#include "floatswe/params.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace floatswe {

PhysicalParams make_params(double g, double rho, double h0, double R, double m,
                           double P_atm) {
  const auto positive = [](double v, const char* name) {
    if (!(v > 0.0)) throw NonPositiveParameter(name);
  };
  positive(g, "g");
  positive(rho, "rho");
  positive(h0, "h0");
  positive(R, "R");
  positive(m, "m");
  if (!(P_atm >= 0.0)) throw NonPositiveParameter("P_atm");

  PhysicalParams p;
  p.g = g;
  p.rho = rho;
  p.h0 = h0;
  p.R = R;
  p.m = m;
  p.P_atm = P_atm;
  p.c_stiff = rho * g * std::numbers::pi * R * R;
  p.b_scale = std::numbers::pi * rho * R * R * R * R / 8.0;
  return p;
}

SolidShape SolidShape::flat(double h_w_eq) {
  if (!(h_w_eq > 0.0)) throw NonPositiveParameter("h_w_eq");
  SolidShape s;
  s.flat_ = true;
  s.h_flat_ = h_w_eq;
  return s;
}

SolidShape SolidShape::profiled(Profile h_w_eq, Profile dr_h_w_eq) {
  SolidShape s;
  s.flat_ = false;
  s.h_eq_ = std::move(h_w_eq);
  s.dh_eq_ = std::move(dr_h_w_eq);
  return s;
}

RadialGrid make_grid(double R, double r_max, int N) {
  if (!(R > 0.0)) throw InvalidGrid("inner radius must be positive");
  if (!(r_max > R)) throw InvalidGrid("r_max must exceed the solid radius");
  if (N < 4) throw InvalidGrid("need at least 4 cells");

  RadialGrid grid;
  grid.R = R;
  grid.r_max = r_max;
  grid.N = N;
  grid.dr = (r_max - R) / static_cast<double>(N);

  grid.face.resize(N + 1);
  grid.center.resize(N);
  const double width = r_max - R;
  for (int j = 0; j <= N; ++j) {
    grid.face[j] = R + width * (static_cast<double>(j) / N);
  }
  grid.face[0] = R;
  grid.face[N] = r_max;
  for (int j = 0; j < N; ++j) {
    grid.center[j] = 0.5 * (grid.face[j] + grid.face[j + 1]);
  }
  return grid;
}

}  // namespace floatswe
