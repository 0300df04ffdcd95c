#pragma once

#include <cmath>

namespace pdm {

// Order-2 forward jet: a value with its first two derivatives with respect
// to one scalar. Propagating jets through a closed-form expression yields
// exact (rounding-level) derivatives, which the residual checks need.
struct Jet2 {
  double f = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  static constexpr Jet2 variable(double x, double dx = 1.0) { return {x, dx, 0.0}; }
  static constexpr Jet2 constant(double c) { return {c, 0.0, 0.0}; }
};

constexpr Jet2 operator+(Jet2 a, Jet2 b) { return {a.f + b.f, a.d1 + b.d1, a.d2 + b.d2}; }
constexpr Jet2 operator-(Jet2 a, Jet2 b) { return {a.f - b.f, a.d1 - b.d1, a.d2 - b.d2}; }
constexpr Jet2 operator*(Jet2 a, Jet2 b) {
  return {a.f * b.f, a.d1 * b.f + a.f * b.d1, a.d2 * b.f + 2.0 * a.d1 * b.d1 + a.f * b.d2};
}

constexpr Jet2 operator+(Jet2 a, double c) { return {a.f + c, a.d1, a.d2}; }
constexpr Jet2 operator+(double c, Jet2 a) { return a + c; }
constexpr Jet2 operator-(double c, Jet2 a) { return {c - a.f, -a.d1, -a.d2}; }
constexpr Jet2 operator*(Jet2 a, double c) { return {a.f * c, a.d1 * c, a.d2 * c}; }
constexpr Jet2 operator*(double c, Jet2 a) { return a * c; }

inline Jet2 operator/(Jet2 a, Jet2 b) {
  const double inv = 1.0 / b.f;
  const double q = a.f * inv;
  const double q1 = (a.d1 - q * b.d1) * inv;
  return {q, q1, (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) * inv};
}

// a^p for real p. The base may be negative only when p is integer-valued
// (IEEE pow handles that case exactly for our unit exponents).
inline Jet2 pow(Jet2 a, double p) {
  if (p == 0.0) return Jet2::constant(1.0);
  if (p == 1.0) return a;  // avoids 0 * inf in the curvature at a zero base
  const double fp = std::pow(a.f, p);
  const double fp1 = p * std::pow(a.f, p - 1.0);
  const double fp2 = p * (p - 1.0) * std::pow(a.f, p - 2.0);
  return {fp, fp1 * a.d1, fp2 * a.d1 * a.d1 + fp1 * a.d2};
}

}  // namespace pdm
