#pragma once

#include <functional>
#include <optional>

#include "pdm/halfint.hpp"

namespace pdm {

enum class Parity { Even, Odd };

// Mass value together with its first two radial derivatives.
struct MassDerivs {
  double m;
  double m1;
  double m2;
};

enum class MassKind { LorentzianSquared, Numeric };

// Radial mass profile m(r) with inverse-length scale zeta.
//
// The built-in profile is the squared Lorentzian m(r) = 1/(1 + zeta^2 r^2)^2,
// positive everywhere, m(0) = 1, vanishing like r^-4. Numeric profiles carry
// caller-supplied derivative callables; they are never differentiated
// internally, since m'' enters a verification path and numeric
// differentiation of an opaque callable would add uncontrolled error.
class MassModel {
 public:
  using Callable = std::function<double(double)>;

  static MassModel lorentzian_squared(double zeta);
  static MassModel numeric(double zeta, Callable m, Callable m1, Callable m2);

  // Profile value and first two derivatives at r. r may be negative only in
  // one-dimensional (full-line) use; the profiles are even in r.
  MassDerivs at(double r) const;

  double zeta() const { return zeta_; }
  MassKind kind() const { return kind_; }

 private:
  MassModel(double zeta, MassKind kind) : zeta_(zeta), kind_(kind) {}

  double zeta_;
  MassKind kind_;
  Callable m_, m1_, m2_;
};

// Radial quantum number, angular momentum, dimension and (for d = 1) parity.
// d = 1 requires an explicit parity: the two parities map to different
// effective angular momenta (ell_d = -1 even, 0 odd) and a default would
// silently pick one physics branch.
class QuantumNumbers {
 public:
  QuantumNumbers(int n_r, int ell, int d);   // d >= 2
  QuantumNumbers(int n_r, Parity parity);    // d == 1, ell forced to 0

  int n_r() const { return n_r_; }
  int ell() const { return ell_; }
  int dim() const { return d_; }
  std::optional<Parity> parity() const { return parity_; }

  // ell_d = ell + (d-3)/2 for d >= 2; -1 / 0 for even / odd parity at d = 1.
  HalfInt ell_d() const;

 private:
  int n_r_;
  int ell_;
  int d_;
  std::optional<Parity> parity_;
};

inline HalfInt ell_d_of(const QuantumNumbers& qn) { return qn.ell_d(); }

}  // namespace pdm
