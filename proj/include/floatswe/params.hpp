#pragma once

// Physical constants, solid bottom geometry and the radial finite-volume
// grid. Everything here is immutable after construction and safe to share
// across threads.

#include <functional>
#include <vector>

#include "floatswe/errors.hpp"

namespace floatswe {

struct PhysicalParams {
  double g;      // gravity [m/s^2]
  double rho;    // fluid density [kg/m^3]
  double h0;     // rest depth [m]
  double R;      // solid radius [m]
  double m;      // solid mass [kg]
  double P_atm;  // atmospheric pressure [Pa]

  // Derived constants, always recomputed from the primitives above.
  double c_stiff;  // rho*g*pi*R^2, hydrostatic restoring stiffness [N/m]
  double b_scale;  // pi*rho*R^4/8, added-mass scale [kg*m]
};

PhysicalParams make_params(double g, double rho, double h0, double R, double m,
                           double P_atm);

// Equilibrium fluid height under the solid. Flat keeps a constant column
// h_w_eq; Profiled supplies h_w_eq(r) on [0,R] together with its radial
// derivative (the non-flat force integrals need the derivative pointwise).
class SolidShape {
 public:
  using Profile = std::function<double(double)>;

  static SolidShape flat(double h_w_eq);
  static SolidShape profiled(Profile h_w_eq, Profile dr_h_w_eq);

  bool is_flat() const { return flat_; }

  // Equilibrium column height and its radial derivative at r in [0, R].
  double h_w_eq(double r) const { return flat_ ? h_flat_ : h_eq_(r); }
  double dr_h_w_eq(double r) const { return flat_ ? 0.0 : dh_eq_(r); }

  // Instantaneous column height under displacement delta.
  double h_w(double delta, double r) const { return h_w_eq(r) + delta; }

  double flat_value() const { return h_flat_; }

 private:
  SolidShape() = default;
  bool flat_ = true;
  double h_flat_ = 0.0;
  Profile h_eq_;
  Profile dh_eq_;
};

struct RadialGrid {
  double R;      // inner radius (wall face) [m]
  double r_max;  // outer truncation radius [m]
  int N;         // cell count
  double dr;     // uniform cell width [m]

  std::vector<double> face;    // N+1 faces, face[0] = R, face[N] = r_max
  std::vector<double> center;  // N cell centers
};

RadialGrid make_grid(double R, double r_max, int N);

}  // namespace floatswe
