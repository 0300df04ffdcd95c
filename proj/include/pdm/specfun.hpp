#pragma once

#include <functional>
#include <vector>

namespace pdm::specfun {

// Gauss hypergeometric 2F1(-n, b; c; x) with non-positive-integer first
// parameter: the series terminates and the function is an exact polynomial
// of degree <= n. Coefficients are built once by the Pochhammer ratio
// recurrence coeff_{k+1} = coeff_k (k-n)(b+k) / ((c+k)(k+1)), which stays
// overflow-free up to n ~ 1e3.
class TerminatingHyp {
 public:
  TerminatingHyp(int n, double b, double c_param);

  // Polynomial value by Horner's rule.
  double operator()(double x) const;

  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  const std::vector<double>& coefficients() const { return coeff_; }

 private:
  std::vector<double> coeff_;
};

struct QuadResult {
  double value;
  double error_estimate;
};

// Composite 15-point Gauss-Legendre quadrature of f over [a, b]. The panel
// count doubles until two successive estimates differ by at most tol
// (absolute); returns the last estimate and that difference. Throws
// QuadratureError with the best estimate attached if 2^20 panels are reached.
QuadResult quad(const std::function<double(double)>& f, double a, double b, double tol);

// Strict sign changes of f sampled at `samples` cell-centred points of
// (a, b). Samples with |f| <= 1e-13 * max|f| are treated as zeros and
// skipped, so the count is invariant under positive rescaling of f.
int count_nodes(const std::function<double(double)>& f, double a, double b, int samples);

}  // namespace pdm::specfun
