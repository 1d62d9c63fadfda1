#include "floatswe/hyperbolic.hpp"

#include <cmath>
#include <string>

namespace floatswe {

namespace {

void require_wet(const StatePoint& p) {
  if (!(p.h > 0.0)) {
    throw DryState("column height must be positive, got h = " +
                   std::to_string(p.h));
  }
}

}  // namespace

Mat2 flux_jacobian(const StatePoint& p, double g) {
  require_wet(p);
  const double u = p.q / p.h;
  return {0.0, 1.0, g * p.h - u * u, 2.0 * u};
}

Mat2 source_matrix(const StatePoint& p, double r) {
  require_wet(p);
  if (!(r > 0.0)) throw NonPositiveRadius(r);
  return {0.0, 1.0 / r, 0.0, p.q / (r * p.h)};
}

double subsonic_margin(const StatePoint& p, double g) {
  require_wet(p);
  const double u = p.q / p.h;
  return g * p.h - u * u;
}

EigenData eigen(const StatePoint& p, double g) {
  const double margin = subsonic_margin(p, g);
  if (!(margin > 0.0)) {
    throw NotSubsonic("state is not subsonic; margin = " +
                      std::to_string(margin), margin);
  }
  const double u = p.q / p.h;
  const double c = std::sqrt(g * p.h);

  EigenData ed;
  ed.lambda_minus = u - c;
  ed.lambda_plus = u + c;

  const double nm = std::sqrt(1.0 + ed.lambda_minus * ed.lambda_minus);
  const double np = std::sqrt(1.0 + ed.lambda_plus * ed.lambda_plus);
  ed.e_minus = {1.0 / nm, ed.lambda_minus / nm};
  ed.e_plus = {1.0 / np, ed.lambda_plus / np};

  const Mat2 A = flux_jacobian(p, g);
  const double d = ed.lambda_plus - ed.lambda_minus;
  ed.P_plus = (1.0 / d) * (A - ed.lambda_minus * Mat2::identity());
  ed.P_minus = (-1.0 / d) * (A - ed.lambda_plus * Mat2::identity());
  return ed;
}

double dissipativity_threshold(const StatePoint& p, double g) {
  const EigenData ed = eigen(p, g);
  const Vec2 e1{1.0, 0.0};
  const double plus = (ed.P_plus * e1).norm2();
  const double minus = (ed.P_minus * e1).norm2();
  return -ed.lambda_plus * plus / (ed.lambda_minus * minus);
}

Symmetrizer build_symmetrizer(const StatePoint& p, double g, double M) {
  if (!(M > 0.0)) throw NonPositiveParameter("M");
  const EigenData ed = eigen(p, g);

  Symmetrizer sym;
  sym.M = M;
  sym.S = M * (ed.P_minus.transpose() * ed.P_minus) +
          ed.P_plus.transpose() * ed.P_plus;
  sym.alpha = 0.5 * std::min(M, 1.0);

  const Mat2 SA = sym.S * flux_jacobian(p, g);
  sym.sa_e1_e1 = SA.a;  // (SA e1, e1)
  sym.maximally_dissipative = M > dissipativity_threshold(p, g);
  return sym;
}

Symmetrizer build_symmetrizer(const StatePoint& p, double g) {
  return build_symmetrizer(p, g, 2.0 * dissipativity_threshold(p, g));
}

}  // namespace floatswe
