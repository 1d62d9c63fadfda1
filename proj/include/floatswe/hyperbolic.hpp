#pragma once

// Algebra of the quasilinear radial shallow-water system: flux Jacobian,
// geometric source matrix, eigenstructure, characteristic projectors and the
// Kreiss symmetrizer with its maximal-dissipativity threshold. All pure
// functions of value inputs.

#include "floatswe/errors.hpp"
#include "floatswe/mat2.hpp"

namespace floatswe {

struct StatePoint {
  double zeta = 0.0;  // surface elevation [m]
  double q = 0.0;     // radial discharge [m^2/s]
  double h = 0.0;     // column height h0 + zeta [m]

  static StatePoint from_elevation(double zeta, double q, double h0) {
    return {zeta, q, h0 + zeta};
  }
  static StatePoint from_depth(double h, double q, double h0 = 0.0) {
    return {h - h0, q, h};
  }
};

// A(u): rows [[0, 1], [g h - q^2/h^2, 2 q/h]].
Mat2 flux_jacobian(const StatePoint& p, double g);

// B(u, r): rows [[0, 1/r], [0, q/(r h)]].
Mat2 source_matrix(const StatePoint& p, double r);

// g h - q^2/h^2; the flow is subsonic iff this is positive.
double subsonic_margin(const StatePoint& p, double g);

struct EigenData {
  double lambda_minus = 0.0;
  double lambda_plus = 0.0;
  Vec2 e_minus;   // unit eigenvectors (1, lambda)/|.|
  Vec2 e_plus;
  Mat2 P_minus;   // spectral projectors, P- + P+ = Id
  Mat2 P_plus;
};

// Requires a subsonic state; then lambda- < 0 < lambda+.
EigenData eigen(const StatePoint& p, double g);

// Smallest weight M for which the symmetrized boundary form turns negative
// on the kernel of the boundary condition: -lambda+ |P+ e1|^2 / (lambda- |P- e1|^2).
double dissipativity_threshold(const StatePoint& p, double g);

struct Symmetrizer {
  double M = 0.0;
  Mat2 S;                             // M P-^T P- + P+^T P+
  double alpha = 0.0;                 // coercivity bound min(M,1)/2
  double sa_e1_e1 = 0.0;              // (S A e1, e1)
  bool maximally_dissipative = false; // M > dissipativity_threshold
};

Symmetrizer build_symmetrizer(const StatePoint& p, double g, double M);

// Default weight: twice the dissipativity threshold, strictly inside the
// dissipative region.
Symmetrizer build_symmetrizer(const StatePoint& p, double g);

}  // namespace floatswe
