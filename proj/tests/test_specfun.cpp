#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pdm/errors.hpp"
#include "pdm/specfun.hpp"

using namespace pdm;
using specfun::TerminatingHyp;

namespace {

// Independent route for the terminating series: direct Pochhammer products in
// extended precision, no shared code with the recurrence implementation.
long double hyp_direct(int n, long double b, long double c, long double x) {
  long double sum = 0.0L;
  for (int k = 0; k <= n; ++k) {
    long double term = 1.0L;
    for (int i = 0; i < k; ++i) term *= (-n + i) * (b + i) / ((c + i) * (i + 1));
    long double xk = 1.0L;
    for (int i = 0; i < k; ++i) xk *= x;
    sum += term * xk;
  }
  return sum;
}

}  // namespace

TEST_CASE("terminating 2F1 spot values") {
  // n = 0: empty product, identically one.
  for (double x : {0.0, 0.3, 1.0}) CHECK(TerminatingHyp(0, 17.3, 0.4)(x) == 1.0);

  CHECK(TerminatingHyp(1, 4.0, 1.5)(0.5) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  // 1 - 2.6667 + 1.3333: the degree-2 series collapses to -1/3 as well.
  CHECK(TerminatingHyp(2, 4.0, 1.5)(0.5) == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));

  // High-precision CAS values.
  CHECK(TerminatingHyp(3, 7.0, 2.5)(0.3) == doctest::Approx(-0.1376).epsilon(1e-14));
  CHECK(TerminatingHyp(5, 12.0, 3.5)(0.77) == doctest::Approx(0.09013894826666666667).epsilon(1e-12));
  CHECK(TerminatingHyp(4, std::numbers::pi, 1.5)(0.25) == doctest::Approx(-0.08466520236737658159).epsilon(1e-13));
  CHECK(TerminatingHyp(6, 8.5, 0.75)(0.9) == doctest::Approx(0.8772820779220779221).epsilon(1e-12));
}

TEST_CASE("terminating 2F1 matches an independent extended-precision route") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> b_dist(-3.0, 15.0);
  std::uniform_real_distribution<double> c_dist(0.3, 6.0);
  std::uniform_real_distribution<double> x_dist(0.0, 1.0);
  std::uniform_int_distribution<int> n_dist(0, 8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = n_dist(rng);
    const double b = b_dist(rng);
    const double c = c_dist(rng);
    const double x = x_dist(rng);
    const double mine = TerminatingHyp(n, b, c)(x);
    const long double ref = hyp_direct(n, b, c, x);
    CHECK(std::abs(mine - static_cast<double>(ref)) <= 1e-12 * (1.0 + std::abs(static_cast<double>(ref))));
  }
}

TEST_CASE("terminating 2F1 structural properties") {
  const TerminatingHyp h(4, 6.25, 1.75);
  CHECK(h(0.0) == 1.0);  // exactly
  CHECK(h.degree() == 4);
  CHECK(h.coefficients().size() == 5);

  // Pochhammer recurrence invariant on the stored coefficients.
  const auto& co = h.coefficients();
  for (int k = 0; k + 1 < static_cast<int>(co.size()); ++k) {
    const double expected = co[k] * ((k - 4) * (6.25 + k)) / ((1.75 + k) * (k + 1));
    CHECK(co[k + 1] == doctest::Approx(expected).epsilon(1e-15));
  }

  // A degree-n polynomial is annihilated by the (n+1)-th finite difference.
  const int n = h.degree();
  std::vector<double> values;
  double scale = 0.0;
  for (int i = 0; i <= n + 1; ++i) {
    values.push_back(h(0.1 + 0.15 * i));
    scale = std::max(scale, std::abs(values.back()));
  }
  for (int order = 0; order < n + 1; ++order)
    for (std::size_t i = 0; i + 1 < values.size() - order; ++i) values[i] = values[i + 1] - values[i];
  CHECK(std::abs(values[0]) <= 1e-10 * std::max(1.0, scale));

  // Pochhammer pole in the denominator within reach.
  CHECK_THROWS_AS(TerminatingHyp(3, 2.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(TerminatingHyp(1, 2.0, 0.0), std::invalid_argument);
  CHECK_NOTHROW(TerminatingHyp(3, 2.0, -5.0));  // pole beyond the last term
  CHECK_THROWS_AS(TerminatingHyp(-1, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("quadrature battery with closed forms") {
  using specfun::quad;
  struct Case {
    std::function<double(double)> f;
    double a, b, exact;
  };
  const Case battery[] = {
      {[](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 2.0},
      {[](double x) { return std::pow(std::sin(x), 2) * std::pow(std::cos(x), 6); }, 0.0, std::numbers::pi / 2,
       0.06135923151542564919},  // 5 pi/256
      {[](double) { return 1.0; }, 0.0, 1.0, 1.0},
      {[](double x) { return std::exp(x); }, 0.0, 1.0, 1.71828182845904523536},
      {[](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 2.0, 1.10714871779409050302},
      {[](double x) { return std::pow(x, 5) - 2.0 * x * x; }, 0.0, 3.0, 103.5},
      {[](double x) { return std::pow(std::sin(x), 4) * std::pow(std::cos(x), 2); }, 0.0, std::numbers::pi / 2,
       0.09817477042468103870},  // 3 pi/96
  };
  for (const auto& c : battery) {
    const auto res = quad(c.f, c.a, c.b, 1e-12);
    CHECK(std::abs(res.value - c.exact) <= res.error_estimate + 1e-14 * (1.0 + std::abs(c.exact)));
    CHECK(std::abs(res.value - c.exact) <= 1e-11 * (1.0 + std::abs(c.exact)));
  }
}

TEST_CASE("quadrature error handling") {
  using specfun::quad;
  CHECK_THROWS_AS(quad([](double) { return 1.0; }, 1.0, 1.0, 1e-10), std::invalid_argument);
  CHECK_THROWS_AS(quad([](double) { return 1.0; }, 2.0, 1.0, 1e-10), std::invalid_argument);
  CHECK_THROWS_AS(quad([](double) { return 1.0; }, 0.0, 1.0, 0.0), std::invalid_argument);

  // Endpoint 1/sqrt(x) singularity: dyadic panels cannot reach 1e-12.
  try {
    quad([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-12);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(std::abs(e.best_estimate - 2.0) < 1e-2);  // true value 2
    CHECK(e.achieved_tolerance > 1e-12);
  }
}

TEST_CASE("node counting") {
  using specfun::count_nodes;
  CHECK(count_nodes([](double x) { return std::sin(x); }, 0.0, 2.0 * std::numbers::pi, 10000) == 1);
  CHECK(count_nodes([](double x) { return std::sin(x); }, 0.0, 4.0 * std::numbers::pi, 10000) == 3);
  CHECK(count_nodes([](double) { return 1.0; }, 0.0, 1.0, 100) == 0);

  // Invariant under positive rescaling.
  auto poly = [](double x) { return (x - 0.2) * (x - 0.5) * (x - 0.51) * (x + 3.0); };
  for (double scale : {1e-8, 1.0, 1e8}) {
    auto scaled = [&, scale](double x) { return scale * poly(x); };
    CHECK(count_nodes(scaled, 0.0, 1.0, 20000) == 3);
  }

  CHECK_THROWS_AS(count_nodes([](double) { return 1.0; }, 0.0, 1.0, 1), std::invalid_argument);
}
