#pragma once

// Composite Gauss-Legendre quadrature for the radial integrals of the solid
// module. Node/weight tables are generated once per order by Newton iteration
// on the Legendre polynomial.

#include <functional>
#include <vector>

namespace floatswe {

struct GaussRule {
  std::vector<double> node;    // on [-1, 1]
  std::vector<double> weight;
};

// Returns the n-point rule (cached; thread-safe after first use per order).
const GaussRule& gauss_legendre(int n);

// Integrates f over [a, b] with `panels` equal panels of the n-point rule.
double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels = 8, int points = 32);

inline constexpr int kDefaultQuadPanels = 8;
inline constexpr int kDefaultQuadPoints = 32;

}  // namespace floatswe
