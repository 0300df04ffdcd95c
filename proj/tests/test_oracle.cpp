#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pdm/analytic.hpp"
#include "pdm/oracle.hpp"
#include "pdm/pct.hpp"

using namespace pdm;
using analytic::pt_params;
using oracle::build_pt_matrix;
using oracle::lowest_eigenvalues;
using oracle::solve_pt;
using oracle::sturm_count_below;

namespace {

// Dense cyclic-Jacobi eigenvalues; test-only oracle for the Sturm counts.
std::vector<double> jacobi_eigenvalues(const oracle::Tridiag& t) {
  const int n = static_cast<int>(t.diag.size());
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) a[i][i] = t.diag[i];
  for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = t.off;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off_norm = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off_norm += a[i][j] * a[i][j];
    if (off_norm < 1e-22) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = 0.5 * (a[q][q] - a[p][p]) / a[p][q];
        const double sign = theta >= 0.0 ? 1.0 : -1.0;
        const double tt = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(tt * tt + 1.0);
        const double s = tt * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = a[i][i];
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace

TEST_CASE("Sturm count agrees with dense diagonalization at grid 128") {
  for (const auto& qn : {QuantumNumbers(0, 0, 3), QuantumNumbers(0, 0, 2), QuantumNumbers(0, 1, 5)}) {
    const auto t = build_pt_matrix(pt_params(qn, 1.0), 128);
    const auto dense = jacobi_eigenvalues(t);
    for (double x : {0.5, 3.0, 8.1, 20.0, 100.0, 1234.5, 1e7}) {
      const int expected = static_cast<int>(std::count_if(dense.begin(), dense.end(), [&](double w) { return w < x; }));
      CHECK(sturm_count_below(t, x) == expected);
    }
    // Bracketing across each of the lowest eigenvalues.
    const auto lowest = lowest_eigenvalues(t, 5);
    for (int k = 0; k < 5; ++k) {
      CHECK(lowest[k] == doctest::Approx(dense[k]).epsilon(1e-10));
      CHECK(sturm_count_below(t, lowest[k] - 1e-6) == k);
      CHECK(sturm_count_below(t, lowest[k] + 1e-6) == k + 1);
    }
  }
}

TEST_CASE("trigonometric eigenvalues reproduce the closed form") {
  // kappa=1, lambda=3 (d=3, ell=0): eps_0 = 8, E_0 = 7.5.
  const auto p = pt_params(QuantumNumbers(0, 0, 3), 1.0);
  const auto rep = solve_pt(p, 4, 2048);
  CHECK(rep.extrapolated[0] == doctest::Approx(8.0).epsilon(1e-8));
  CHECK(rep.energies()[0] == doctest::Approx(7.5).epsilon(1e-8));
  CHECK(rep.energies()[1] == doctest::Approx(17.5).epsilon(1e-8));
  CHECK(rep.shift_applied == -0.5);
  CHECK(rep.grid_size == 2048);
  CHECK(rep.q_max == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));

  // Reported sequences are strictly increasing and sized as requested.
  REQUIRE(rep.eigenvalues.size() == 4);
  for (int k = 1; k < 4; ++k) {
    CHECK(rep.eigenvalues[k] > rep.eigenvalues[k - 1]);
    CHECK(rep.extrapolated[k] > rep.extrapolated[k - 1]);
  }
  for (std::size_t k = 0; k < rep.eigenvalues.size(); ++k)
    CHECK(rep.error_estimates[k] == std::abs(rep.extrapolated[k] - rep.eigenvalues[k]));

  // kappa=0 even branch: E_0 = 1.5.
  const auto pe = pt_params(QuantumNumbers(0, Parity::Even), 1.0);
  const auto repe = solve_pt(pe, 3, 2048);
  CHECK(repe.energies()[0] == doctest::Approx(1.5).epsilon(1e-7));
  CHECK(repe.energies()[1] == doctest::Approx(7.5).epsilon(1e-7));

  // d=1 odd branch through the Dirichlet path: E_0 = 4.
  const auto po = pt_params(QuantumNumbers(0, Parity::Odd), 1.0);
  CHECK(solve_pt(po, 1, 2048).energies()[0] == doctest::Approx(4.0).epsilon(1e-7));

  // The borderline attractive case (d=2, ell=0, kappa=1/2).
  const auto p2 = pt_params(QuantumNumbers(0, 0, 2), 1.0);
  const auto rep2 = solve_pt(p2, 3, 2048);
  CHECK(rep2.energies()[0] == doctest::Approx(4.0).epsilon(1e-6));

  // Scaled profile.
  const auto pz = pt_params(QuantumNumbers(0, 0, 3), 2.0);
  CHECK(solve_pt(pz, 1, 2048).energies()[0] == doctest::Approx(30.0).epsilon(1e-7));
}

TEST_CASE("solver input validation") {
  const auto p = pt_params(QuantumNumbers(0, 0, 3), 1.0);
  CHECK_THROWS_AS(solve_pt(p, 0, 1024), std::invalid_argument);
  CHECK_THROWS_AS(solve_pt(p, 300, 1024), std::invalid_argument);  // > grid/4
  CHECK_THROWS_AS(solve_pt(p, 1, 32), std::invalid_argument);
  CHECK_THROWS_AS(solve_pt(p, 1, 1001), std::invalid_argument);  // odd grid
  CHECK_THROWS_AS(build_pt_matrix(p, 32), std::invalid_argument);
  const auto t = build_pt_matrix(p, 128);
  CHECK_THROWS_AS(lowest_eigenvalues(t, 0), std::invalid_argument);
  CHECK_THROWS_AS(lowest_eigenvalues(t, 1000), std::invalid_argument);
}

TEST_CASE("eigenvalue error is second order in the grid spacing") {
  const auto p = pt_params(QuantumNumbers(0, 0, 3), 1.0);
  double err[3];
  const int grids[3] = {500, 1000, 2000};
  for (int i = 0; i < 3; ++i) err[i] = std::abs(lowest_eigenvalues(build_pt_matrix(p, grids[i]), 1)[0] - 8.0);
  const double slope01 = std::log2(err[0] / err[1]);
  const double slope12 = std::log2(err[1] / err[2]);
  CHECK(slope01 > 1.6);
  CHECK(slope01 < 2.4);
  CHECK(slope12 > 1.6);
  CHECK(slope12 < 2.4);
}

TEST_CASE("Richardson extrapolation beats the finest grid in >= 90% of states") {
  int improved = 0;
  int total = 0;
  for (int d : {2, 3}) {
    for (int ell = 0; ell <= 1; ++ell) {
      const QuantumNumbers qn(0, ell, d);
      const auto rep = solve_pt(pt_params(qn, 1.0), 4, 2048);
      for (int n = 0; n <= 3; ++n) {
        const double exact = analytic::energy(QuantumNumbers(n, ell, d), 1.0);
        const double e_fine = rep.eigenvalues[n] + rep.shift_applied;
        const double e_rich = rep.extrapolated[n] + rep.shift_applied;
        if (std::abs(e_rich - exact) < std::abs(e_fine - exact)) ++improved;
        ++total;
      }
    }
  }
  CHECK(improved * 10 >= total * 9);
}

TEST_CASE("general-potential variant agrees with the trigonometric solve") {
  const auto p = pt_params(QuantumNumbers(0, 0, 3), 1.0);
  const auto direct = solve_pt(p, 3, 2048);

  // Closed-form potential, Eq-(5)-style solve: eigenvalues are E already.
  const auto closed_pot = pct::EffectivePotential::closed_form(1.0, HalfInt(0), 3);
  const auto via_closed = oracle::solve_effective(closed_pot, 3, 2048);
  CHECK(via_closed.shift_applied == 0.0);
  for (int k = 0; k < 3; ++k)
    CHECK(via_closed.energies()[k] == doctest::Approx(direct.energies()[k]).epsilon(1e-9));

  // Assembled potential from the transform of the built-in profile.
  const auto assembled = pct::EffectivePotential::general(pct::PctMap(MassModel::lorentzian_squared(1.0), 3), HalfInt(0));
  const auto via_assembled = oracle::solve_effective(assembled, 2, 1024);
  CHECK(via_assembled.energies()[0] == doctest::Approx(7.5).epsilon(1e-6));
  CHECK(via_assembled.energies()[1] == doctest::Approx(17.5).epsilon(1e-6));

  // Numeric-profile cross-check path (quadrature-based map), coarse grid.
  const auto numeric_model = MassModel::numeric(
      1.0, [](double r) { return std::pow(1.0 + r * r, -2.0); },
      [](double r) { return -4.0 * r * std::pow(1.0 + r * r, -3.0); },
      [](double r) { return 4.0 * (5.0 * r * r - 1.0) * std::pow(1.0 + r * r, -4.0); });
  const auto numeric_pot = pct::EffectivePotential::general(pct::PctMap(numeric_model, 3), HalfInt(0));
  const auto via_numeric = oracle::solve_effective(numeric_pot, 1, 256);
  CHECK(via_numeric.energies()[0] == doctest::Approx(7.5).epsilon(2e-5));
}

TEST_CASE("radial-operator residuals") {
  std::vector<double> grid;
  for (int i = 0; i < 120; ++i) grid.push_back(0.05 * std::pow(400.0, i / 119.0));

  // A true eigenpair solves the operator to rounding.
  const auto ground = analytic::normalize(analytic::bound_state(QuantumNumbers(0, 0, 3), 1.0));
  CHECK(oracle::max_relative_residual(ground, grid) <= 1e-9);

  const auto excited = analytic::normalize(analytic::bound_state(QuantumNumbers(3, 1, 3), 1.0));
  CHECK(oracle::max_relative_residual(excited, grid) <= 1e-8);

  const auto halfint = analytic::normalize(analytic::bound_state(QuantumNumbers(2, 1, 2), 1.0));
  CHECK(oracle::max_relative_residual(halfint, grid) <= 1e-8);

  const auto even1d = analytic::normalize(analytic::bound_state(QuantumNumbers(1, Parity::Even), 1.0));
  CHECK(oracle::max_relative_residual(even1d, grid) <= 1e-8);

  // Perturbing the energy is detected through the 2 m E term.
  auto perturbed = ground;
  perturbed.energy += 0.1;
  CHECK(oracle::max_relative_residual(perturbed, grid) > 1e-3);

  // Pointwise residuals are linear in the energy perturbation.
  const auto res = oracle::residual_eq1(perturbed, grid);
  REQUIRE(res.size() == grid.size());
  const MassModel model = MassModel::lorentzian_squared(1.0);
  for (std::size_t i = 0; i < grid.size(); i += 17) {
    const double expected = 2.0 * model.at(grid[i]).m * 0.1 * analytic::radial(perturbed, grid[i]);
    CHECK(res[i] == doctest::Approx(expected).epsilon(1e-6));
  }
}
