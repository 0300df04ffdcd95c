#include "pdm/specfun.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pdm/errors.hpp"

namespace pdm::specfun {

TerminatingHyp::TerminatingHyp(int n, double b, double c_param) {
  if (n < 0) throw std::invalid_argument("TerminatingHyp: series order must be non-negative");
  for (int k = 0; k < n; ++k) {
    if (c_param + k == 0.0)
      throw std::invalid_argument("TerminatingHyp: third parameter " + std::to_string(c_param) +
                                  " hits a Pochhammer pole within " + std::to_string(n) + " terms");
  }
  coeff_.resize(static_cast<std::size_t>(n) + 1);
  coeff_[0] = 1.0;
  for (int k = 0; k < n; ++k)
    coeff_[k + 1] = coeff_[k] * ((k - n) * (b + k)) / ((c_param + k) * (k + 1));
}

double TerminatingHyp::operator()(double x) const {
  double acc = coeff_.back();
  for (auto it = coeff_.rbegin() + 1; it != coeff_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

struct GlPoint {
  double node, weight;
};

// 15-point Gauss-Legendre rule on [-1, 1]; exact through degree 29.
constexpr std::array<GlPoint, 15> kGl15{{
    {-9.87992518020485377e-01, 3.07532419961186465e-02},
    {-9.37273392400705951e-01, 7.03660474881080689e-02},
    {-8.48206583410427206e-01, 1.07159220467171773e-01},
    {-7.24417731360170070e-01, 1.39570677926153908e-01},
    {-5.70972172608538830e-01, 1.66269205816993781e-01},
    {-3.94151347077563385e-01, 1.86161000015561878e-01},
    {-2.01194093997434514e-01, 1.98431485327111246e-01},
    {+0.00000000000000000e+00, 2.02578241925560898e-01},
    {+2.01194093997434514e-01, 1.98431485327111246e-01},
    {+3.94151347077563385e-01, 1.86161000015561878e-01},
    {+5.70972172608538830e-01, 1.66269205816993781e-01},
    {+7.24417731360170070e-01, 1.39570677926153908e-01},
    {+8.48206583410427206e-01, 1.07159220467171773e-01},
    {+9.37273392400705951e-01, 7.03660474881080689e-02},
    {+9.87992518020485377e-01, 3.07532419961186465e-02},
}};

double gl_panels(const std::function<double(double)>& f, double a, double b, int panels) {
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    double sum = 0.0;
    for (const auto& pt : kGl15) sum += pt.weight * f(mid + 0.5 * width * pt.node);
    total += 0.5 * width * sum;
  }
  return total;
}

}  // namespace

QuadResult quad(const std::function<double(double)>& f, double a, double b, double tol) {
  if (!(a < b)) throw std::invalid_argument("quad: need a < b");
  if (!(tol > 0.0)) throw std::invalid_argument("quad: tolerance must be positive");
  constexpr int kMaxPanels = 1 << 20;
  double prev = gl_panels(f, a, b, 1);
  double diff = 0.0;
  for (int panels = 2; panels <= kMaxPanels; panels *= 2) {
    const double cur = gl_panels(f, a, b, panels);
    diff = std::abs(cur - prev);
    if (diff <= tol) return QuadResult{cur, diff};
    prev = cur;
  }
  throw QuadratureError("quad: no convergence to tol=" + std::to_string(tol) + " within 2^20 panels", prev, diff);
}

int count_nodes(const std::function<double(double)>& f, double a, double b, int samples) {
  if (samples < 2) throw std::invalid_argument("count_nodes: need at least 2 samples");
  if (!(a < b)) throw std::invalid_argument("count_nodes: need a < b");
  std::vector<double> values(static_cast<std::size_t>(samples));
  const double step = (b - a) / samples;
  double fmax = 0.0;
  for (int i = 0; i < samples; ++i) {
    values[i] = f(a + (i + 0.5) * step);
    fmax = std::max(fmax, std::abs(values[i]));
  }
  const double floor = 1e-13 * fmax;
  int changes = 0;
  int last_sign = 0;
  for (double v : values) {
    if (!(std::abs(v) > floor)) continue;  // also skips NaN
    const int sign = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++changes;
    last_sign = sign;
  }
  return changes;
}

}  // namespace pdm::specfun
