#include "pdm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pdm/errors.hpp"

namespace pdm::oracle {

namespace {

// 1/sin^2(x) - 1/x^2, analytic at 0 (value 1/3).
double inv_sin_sq_regular(double x) {
  const double ax = std::abs(x);
  if (ax < 0.2) {
    const double x2 = x * x;
    return 1.0 / 3.0 +
           x2 * (1.0 / 15.0 +
                 x2 * (2.0 / 189.0 + x2 * (1.0 / 675.0 + x2 * (2.0 / 10395.0 + x2 * (1382.0 / 58046625.0 + x2 * (4.0 / 1403325.0))))));
  }
  const double s = std::sin(x);
  return 1.0 / (s * s) - 1.0 / (x * x);
}

// Discrete-consistent replacement for the inverse-square coefficient
// p(p-1)/(2 t^2) at grid index t (in units of h^-2): the unique diagonal
// value making the three-point stencil annihilate the local power solution
// u^p. Reduces to the plain coefficient for p in {0, 1, 2, 3}.
double disc_inv_square(double p, double t) {
  if (p == 0.0 || p == 1.0) return 0.0;
  if (t <= 256.0)
    return (std::pow(t + 1.0, p) - 2.0 * std::pow(t, p) + std::pow(t - 1.0, p)) / (2.0 * std::pow(t, p));
  // Large t: the direct form cancels catastrophically; two correction terms
  // leave a relative error below 1e-13.
  const double s = 0.5 * p * (p - 1.0);
  const double x2 = 1.0 / (t * t);
  return s * x2 * (1.0 + (p - 2.0) * (p - 3.0) / 12.0 * x2 + (p - 2.0) * (p - 3.0) * (p - 4.0) * (p - 5.0) / 360.0 * x2 * x2);
}

Tridiag build_dirichlet(const analytic::PTParams& p, int n) {
  const double zeta = p.zeta;
  const double big_l = std::numbers::pi / (2.0 * zeta);
  const double h = big_l / n;
  const double skap = 0.5 * p.kappa * (p.kappa - 1.0);
  const double slam = 0.5 * p.lambda * (p.lambda - 1.0);
  const double inv_h2 = 1.0 / (h * h);

  Tridiag t;
  t.off = -0.5 * inv_h2;
  t.diag.resize(static_cast<std::size_t>(n) - 1);
  for (int j = 1; j < n; ++j) {
    const double q = j * h;
    const double u = big_l - q;
    const double v = skap * zeta * zeta * inv_sin_sq_regular(zeta * q) +
                     slam * zeta * zeta * inv_sin_sq_regular(zeta * u) +
                     (disc_inv_square(p.kappa, j) + disc_inv_square(p.lambda, n - j)) * inv_h2;
    t.diag[j - 1] = inv_h2 + v;
  }
  return t;
}

Tridiag build_reflecting(const analytic::PTParams& p, int n) {
  const double zeta = p.zeta;
  const double big_l = std::numbers::pi / (2.0 * zeta);
  const double h = big_l / n;
  const double slam = 0.5 * p.lambda * (p.lambda - 1.0);
  const double inv_h2 = 1.0 / (h * h);

  Tridiag t;
  t.off = -0.5 * inv_h2;
  t.diag.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double u = (n - j - 0.5) * h;
    // Last point: odd-mirror ghost; the matched coefficient is (3^l - 3)/2.
    const double sing = j < n - 1 ? disc_inv_square(p.lambda, n - j - 0.5) : 0.5 * (std::pow(3.0, p.lambda) - 3.0);
    t.diag[j] = inv_h2 + slam * zeta * zeta * inv_sin_sq_regular(zeta * u) + sing * inv_h2;
  }
  t.diag[0] -= 0.5 * inv_h2;   // even mirror at q = 0
  t.diag[n - 1] += 0.5 * inv_h2;  // odd mirror at q = L
  return t;
}

}  // namespace

Tridiag build_pt_matrix(const analytic::PTParams& params, int grid_size) {
  if (grid_size < 64) throw std::invalid_argument("build_pt_matrix: grid_size must be >= 64");
  return params.kappa == 0.0 ? build_reflecting(params, grid_size) : build_dirichlet(params, grid_size);
}

int sturm_count_below(const Tridiag& t, double x) {
  const double off_sq = t.off * t.off;
  int count = 0;
  double d = 0.0;  // no subdiagonal term on the first pivot
  bool first = true;
  for (double diag : t.diag) {
    double v = diag - x - (first ? 0.0 : off_sq / d);
    first = false;
    if (v == 0.0) v = -std::numeric_limits<double>::min();
    if (v < 0.0) ++count;
    d = v;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(const Tridiag& t, int n) {
  const int size = static_cast<int>(t.diag.size());
  if (n < 1 || n > size) throw std::invalid_argument("lowest_eigenvalues: bad eigenvalue count");

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double diag : t.diag) {
    lo = std::min(lo, diag - 2.0 * std::abs(t.off));
    hi = std::max(hi, diag + 2.0 * std::abs(t.off));
  }
  lo -= 1e-3 * (1.0 + std::abs(lo));
  hi += 1e-3 * (1.0 + std::abs(hi));
  if (sturm_count_below(t, lo) != 0 || sturm_count_below(t, hi) != size)
    throw BracketError("lowest_eigenvalues: Gershgorin bracket does not contain the spectrum");

  std::vector<double> out(static_cast<std::size_t>(n));
  double floor = lo;
  for (int k = 0; k < n; ++k) {
    double a = floor;  // eigenvalues are ascending; reuse the previous one as a lower bound
    double b = hi;
    for (int iter = 0; iter < 200 && b - a > 1e-12 * std::max(1.0, std::max(std::abs(a), std::abs(b))); ++iter) {
      const double mid = 0.5 * (a + b);
      (sturm_count_below(t, mid) >= k + 1 ? b : a) = mid;
    }
    if (!(a <= b)) throw BracketError("lowest_eigenvalues: bisection bracket collapsed");
    out[k] = 0.5 * (a + b);
    floor = a;
  }
  for (int k = 1; k < n; ++k)
    if (!(out[k] >= out[k - 1])) throw BracketError("lowest_eigenvalues: non-monotone Sturm extraction");
  return out;
}

std::vector<double> EigenReport::energies() const {
  std::vector<double> e(extrapolated.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = extrapolated[i] + shift_applied;
  return e;
}

namespace {

void require_solve_args(int n_states, int grid_size) {
  if (grid_size < 64) throw std::invalid_argument("solve: grid_size must be >= 64");
  if (grid_size % 2 != 0) throw std::invalid_argument("solve: grid_size must be even (Richardson halving)");
  if (n_states < 1) throw std::invalid_argument("solve: n_states must be >= 1");
  if (n_states > grid_size / 4)
    throw std::invalid_argument("solve: n_states=" + std::to_string(n_states) + " too large for grid_size=" +
                                std::to_string(grid_size));
}

EigenReport combine(std::vector<double> fine, const std::vector<double>& coarse) {
  EigenReport rep;
  rep.eigenvalues = std::move(fine);
  rep.extrapolated.resize(rep.eigenvalues.size());
  rep.error_estimates.resize(rep.eigenvalues.size());
  for (std::size_t i = 0; i < rep.eigenvalues.size(); ++i) {
    rep.extrapolated[i] = (4.0 * rep.eigenvalues[i] - coarse[i]) / 3.0;
    rep.error_estimates[i] = std::abs(rep.extrapolated[i] - rep.eigenvalues[i]);
  }
  return rep;
}

}  // namespace

EigenReport solve_pt(const analytic::PTParams& params, int n_states, int grid_size) {
  require_solve_args(n_states, grid_size);
  const auto fine = lowest_eigenvalues(build_pt_matrix(params, grid_size), n_states);
  const auto coarse = lowest_eigenvalues(build_pt_matrix(params, grid_size / 2), n_states);
  EigenReport rep = combine(fine, coarse);
  rep.grid_size = grid_size;
  rep.q_min = 0.0;
  rep.q_max = std::numbers::pi / (2.0 * params.zeta);
  rep.shift_applied = -0.5 * params.zeta * params.zeta;
  return rep;
}

namespace {

Tridiag build_sampled(const pct::EffectivePotential& potential, int n) {
  const double lo = potential.q_min();
  const double hi = potential.q_max();
  const double h = (hi - lo) / n;
  Tridiag t;
  t.off = -0.5 / (h * h);
  t.diag.resize(static_cast<std::size_t>(n) - 1);
  for (int j = 1; j < n; ++j) t.diag[j - 1] = 1.0 / (h * h) + potential(lo + j * h);
  return t;
}

}  // namespace

EigenReport solve_effective(const pct::EffectivePotential& potential, int n_states, int grid_size) {
  require_solve_args(n_states, grid_size);
  const auto fine = lowest_eigenvalues(build_sampled(potential, grid_size), n_states);
  const auto coarse = lowest_eigenvalues(build_sampled(potential, grid_size / 2), n_states);
  EigenReport rep = combine(fine, coarse);
  rep.grid_size = grid_size;
  rep.q_min = potential.q_min();
  rep.q_max = potential.q_max();
  rep.shift_applied = 0.0;
  return rep;
}

namespace {

struct ResidualPoint {
  double residual;
  double scale;  // sum of the operator's term magnitudes
};

ResidualPoint residual_at(const analytic::BoundState& state, const MassModel& model, double a, double r) {
  const auto [value, d1, d2] = analytic::radial_jet(state, r);
  const auto [m, m1, m2] = model.at(r);
  (void)m2;
  const int d = state.qn.dim();
  const double centrifugal = a == 0.0 ? 0.0 : -a / (r * r) * value;
  const double drift = m1 / m * ((d - 1) / (2.0 * r) * value - d1);
  const double energy_term = 2.0 * m * state.energy * value;
  return {d2 + centrifugal + drift + energy_term,
          std::abs(d2) + std::abs(centrifugal) + std::abs(drift) + std::abs(energy_term)};
}

}  // namespace

std::vector<double> residual_eq1(const analytic::BoundState& state, std::span<const double> r_grid) {
  const MassModel model = MassModel::lorentzian_squared(state.params.zeta);
  const double a = angular_factor(state.params.ell_d);
  std::vector<double> out;
  out.reserve(r_grid.size());
  for (double r : r_grid) out.push_back(residual_at(state, model, a, r).residual);
  return out;
}

double max_relative_residual(const analytic::BoundState& state, std::span<const double> r_grid) {
  const MassModel model = MassModel::lorentzian_squared(state.params.zeta);
  const double a = angular_factor(state.params.ell_d);
  double worst = 0.0;
  double scale = 0.0;
  for (double r : r_grid) {
    const auto pt = residual_at(state, model, a, r);
    worst = std::max(worst, std::abs(pt.residual));
    scale = std::max(scale, pt.scale);
  }
  return scale > 0.0 ? worst / scale : worst;
}

}  // namespace pdm::oracle
