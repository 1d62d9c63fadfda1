#pragma once

// Closed-form 2x2 linear algebra. The hyperbolic system is 2x2 by
// construction, so everything stays exact and allocation-free.

#include <cmath>

namespace floatswe {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  double norm2() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm2()); }
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

struct Mat2 {
  // Row-major: a b / c d.
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Mat2 transpose() const { return {a, c, b, d}; }
};

inline Mat2 operator+(Mat2 m, Mat2 n) {
  return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d};
}
inline Mat2 operator-(Mat2 m, Mat2 n) {
  return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d};
}
inline Mat2 operator*(double s, Mat2 m) {
  return {s * m.a, s * m.b, s * m.c, s * m.d};
}
inline Mat2 operator*(Mat2 m, Mat2 n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}
inline Vec2 operator*(Mat2 m, Vec2 v) {
  return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
}

inline double quadratic_form(Mat2 m, Vec2 v) { return dot(m * v, v); }

inline double max_abs_entry(Mat2 m) {
  return std::max(std::max(std::fabs(m.a), std::fabs(m.b)),
                  std::max(std::fabs(m.c), std::fabs(m.d)));
}

inline double asymmetry(Mat2 m) { return std::fabs(m.b - m.c); }

// Eigenvalues of a symmetric 2x2 matrix, smallest first.
inline void symmetric_eigenvalues(Mat2 m, double& lo, double& hi) {
  const double mean = 0.5 * (m.a + m.d);
  const double off = 0.5 * (m.b + m.c);
  const double rad = std::hypot(0.5 * (m.a - m.d), off);
  lo = mean - rad;
  hi = mean + rad;
}

}  // namespace floatswe
