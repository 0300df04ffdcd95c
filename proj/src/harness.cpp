#include "pdm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "pdm/errors.hpp"
#include "pdm/oracle.hpp"
#include "pdm/pct.hpp"
#include "pdm/specfun.hpp"

namespace pdm::harness {

namespace {

QuantumNumbers make_qn(int n_r, int ell, int d, std::optional<Parity> parity) {
  if (d == 1) return QuantumNumbers(n_r, *parity);
  return QuantumNumbers(n_r, ell, d);
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  const double ratio = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) out[i] = lo * std::exp(i * ratio);
  return out;
}

}  // namespace

int worker_limit(int jobs) {
  if (jobs <= 1) return 1;
  int cap = 0;
  if (const char* env = std::getenv("PDM_SPECTRA_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) cap = static_cast<int>(std::min<long>(v, 1024));
  }
  if (cap == 0) cap = std::max(1u, std::thread::hardware_concurrency());
  return std::min(jobs, cap);
}

DegeneracyReport degeneracy_ladder(int n_r, int ell, int d_start, double zeta, bool run_oracle, int grid_size,
                                   const Tolerances& tol) {
  if (ell < 1) throw std::invalid_argument("degeneracy_ladder: need ell >= 1 for a ladder with >= 2 rungs");
  if (d_start != 2 && d_start != 3) throw std::invalid_argument("degeneracy_ladder: d_start must be 2 or 3");

  DegeneracyReport report;
  double e_lo = 0.0, e_hi = 0.0, e_sum = 0.0;
  for (int k = 0; k <= ell; ++k) {
    const QuantumNumbers qn(n_r, ell - k, d_start + 2 * k);
    DegeneracyRung rung{n_r, qn.ell(), qn.dim(), qn.ell_d(), analytic::energy(qn, zeta), std::nullopt};
    if (run_oracle) {
      const auto rep = oracle::solve_pt(analytic::pt_params(qn, zeta), n_r + 1, grid_size);
      rung.e_numeric = rep.energies()[static_cast<std::size_t>(n_r)];
    }
    if (k == 0) {
      e_lo = e_hi = rung.e_analytic;
    } else {
      e_lo = std::min(e_lo, rung.e_analytic);
      e_hi = std::max(e_hi, rung.e_analytic);
    }
    e_sum += std::abs(rung.e_analytic);
    report.ladder.push_back(std::move(rung));
  }
  report.max_pairwise_spread = e_hi - e_lo;
  const double mean = e_sum / report.ladder.size();
  report.claim_satisfied = report.max_pairwise_spread <= tol.degeneracy_rel * std::max(1.0, mean);
  return report;
}

GramResult orthonormality_matrix(int ell, int d, double zeta, int n_max) {
  if (n_max < 1 || n_max > 10) throw std::invalid_argument("orthonormality_matrix: n_max must be in [1, 10]");
  if (d < 1) throw std::invalid_argument("orthonormality_matrix: dimension must be >= 1");
  if (d == 1 && ell != 0) throw std::invalid_argument("orthonormality_matrix: ell must be 0 for d = 1");

  std::vector<analytic::BoundState> states;
  states.reserve(static_cast<std::size_t>(n_max));
  for (int i = 0; i < n_max; ++i) {
    // d = 1: energy order alternates parity (even n=0, odd n=0, even n=1, ...).
    const QuantumNumbers qn = d == 1 ? QuantumNumbers(i / 2, i % 2 == 0 ? Parity::Even : Parity::Odd)
                                     : QuantumNumbers(i, ell, d);
    states.push_back(analytic::normalize(analytic::bound_state(qn, zeta)));
  }
  const auto [lo, hi] = analytic::q_domain(states.front());

  GramResult result;
  result.matrix.assign(static_cast<std::size_t>(n_max), std::vector<double>(static_cast<std::size_t>(n_max), 0.0));
  for (int i = 0; i < n_max; ++i) {
    for (int j = 0; j < n_max; ++j) {
      auto overlap = [&](double q) { return analytic::normalized_phi(states[i], q) * analytic::normalized_phi(states[j], q); };
      result.matrix[i][j] = specfun::quad(overlap, lo, hi, 1e-12).value;
      const double target = i == j ? 1.0 : 0.0;
      result.max_deviation = std::max(result.max_deviation, std::abs(result.matrix[i][j] - target));
    }
  }
  return result;
}

namespace {

struct Group {
  double zeta;
  int d;
  int ell;  // 0 for d = 1
  std::optional<Parity> parity;
};

void fail_check(ComparisonRow& row, const std::string& what) {
  row.pass = false;
  if (!row.note.empty()) row.note += "; ";
  row.note += what;
}

void compute_group(const SweepConfig& config, const Group& group, std::vector<ComparisonRow>& rows,
                   std::size_t first_row, const std::vector<double>& r_grid) {
  const int n_states = config.n_max + 1;

  std::optional<oracle::EigenReport> report;
  std::string solve_error;
  if (config.run_oracle) {
    try {
      const QuantumNumbers qn0 = make_qn(0, group.ell, group.d, group.parity);
      report = oracle::solve_pt(analytic::pt_params(qn0, group.zeta), n_states, config.grid_size);
    } catch (const std::exception& e) {
      solve_error = std::string("oracle solve failed: ") + e.what();
    }
  }

  for (int n = 0; n < n_states; ++n) {
    ComparisonRow& row = rows[first_row + static_cast<std::size_t>(n)];
    row.pass = true;
    try {
      const QuantumNumbers qn = make_qn(n, group.ell, group.d, group.parity);
      auto state = analytic::bound_state(qn, group.zeta);
      row.n_r = n;
      row.ell = qn.ell();
      row.d = qn.dim();
      row.parity = qn.parity();
      row.zeta = group.zeta;
      row.ell_d = qn.ell_d().value();
      row.kappa = state.params.kappa;
      row.lambda = state.params.lambda;
      row.delta = state.params.delta;

      if (config.energy_offset_hook) {
        const double offset = config.energy_offset_hook(n, qn.ell(), qn.dim());
        state.energy += offset;
      }
      row.e_analytic = state.energy;

      state = analytic::normalize(state);
      const auto [qlo, qhi] = analytic::q_domain(state);
      auto density = [&](double q) {
        const double v = analytic::normalized_phi(state, q);
        return v * v;
      };
      row.norm_error = std::abs(specfun::quad(density, qlo, qhi, 1e-12).value - 1.0);
      if (!(row.norm_error <= config.tol.norm_abs)) fail_check(row, "norm");

      // Nodes are counted on (0, q_sup) so d = 1 parities count alike.
      row.nodes = specfun::count_nodes([&](double q) { return analytic::normalized_phi(state, q); }, 0.0, qhi,
                                       config.node_samples);
      if (row.nodes != n) fail_check(row, "nodes");

      row.residual_rel = oracle::max_relative_residual(state, r_grid);
      if (!(row.residual_rel <= config.tol.residual_rel)) fail_check(row, "residual");

      if (config.run_oracle) {
        if (report) {
          row.e_numeric = report->energies()[static_cast<std::size_t>(n)];
          row.rel_err = std::abs(*row.e_numeric - row.e_analytic) / std::abs(row.e_analytic);
          if (!(*row.rel_err <= config.tol.oracle_rel)) fail_check(row, "oracle");
        } else {
          fail_check(row, solve_error);
        }
      }
    } catch (const std::exception& e) {
      fail_check(row, std::string("state computation failed: ") + e.what());
    }
  }
}

}  // namespace

ComparisonTable full_comparison(const SweepConfig& config) {
  if (config.n_max < 0 || config.ell_max < 0)
    throw std::invalid_argument("full_comparison: sweep bounds must be non-negative");
  for (double z : config.zetas)
    if (!(z > 0.0)) throw std::invalid_argument("full_comparison: zeta values must be positive");

  std::vector<Group> groups;
  for (double zeta : config.zetas) {
    for (int d : config.dims) {
      if (d < 1) throw std::invalid_argument("full_comparison: dimensions must be >= 1");
      if (d == 1) {
        groups.push_back({zeta, 1, 0, Parity::Even});
        groups.push_back({zeta, 1, 0, Parity::Odd});
      } else {
        for (int ell = 0; ell <= config.ell_max; ++ell) groups.push_back({zeta, d, ell, std::nullopt});
      }
    }
  }

  const int n_states = config.n_max + 1;
  ComparisonTable table;
  table.rows.resize(groups.size() * static_cast<std::size_t>(n_states));
  if (table.rows.empty()) return table;

  const auto r_grid = log_spaced(0.05, 20.0, 160);

  const int workers = worker_limit(static_cast<int>(groups.size()));
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (;;) {
      const std::size_t g = next.fetch_add(1);
      if (g >= groups.size()) return;
      compute_group(config, groups[g], table.rows, g * static_cast<std::size_t>(n_states), r_grid);
    }
  };
  if (workers <= 1) {
    drain();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(drain);
  }

  table.all_pass = std::all_of(table.rows.begin(), table.rows.end(), [](const ComparisonRow& r) { return r.pass; });
  return table;
}

namespace {

// dev(a, b) relative to the larger magnitude, floored at 1 so the huge
// near-singular values do not mask absolute agreement elsewhere.
double normalized_dev(double a, double b) { return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b))); }

std::vector<HalfInt> ell_d_values(int d) {
  if (d == 1) return {HalfInt(-1), HalfInt(0)};
  std::vector<HalfInt> out;
  for (int ell = 0; ell <= 2; ++ell) out.push_back(HalfInt::from_twice(2 * ell + d - 3));
  return out;
}

// The criterion-3 state battery: n <= 3, ell <= 2, d in {1, 3, 5}, zeta = 1.
std::vector<QuantumNumbers> residual_states() {
  std::vector<QuantumNumbers> states;
  for (int n = 0; n <= 3; ++n) {
    states.emplace_back(n, Parity::Even);
    states.emplace_back(n, Parity::Odd);
    for (int d : {3, 5})
      for (int ell = 0; ell <= 2; ++ell) states.emplace_back(n, ell, d);
  }
  return states;
}

}  // namespace

std::vector<CheckResult> verify_transform(const VerifyConfig& config) {
  const auto rs = log_spaced(0.01, 20.0, 60);
  double worst_u = 0.0;
  double worst_v = 0.0;
  for (double zeta : {0.5, 1.0, 2.0}) {
    for (int d : {1, 2, 3, 5}) {
      const MassModel model = MassModel::lorentzian_squared(zeta);
      const pct::PctMap map(model, d);
      for (double r : rs) {
        const double q = map.q_of_r(r);
        worst_u = std::max(worst_u, normalized_dev(pct::u_d_closed(zeta, d, q), pct::u_d_general(model, d, r)));
        for (HalfInt ld : ell_d_values(d))
          worst_v = std::max(worst_v, normalized_dev(pct::v_eff_closed(zeta, ld, d, q), pct::v_eff_general(map, ld, q)));
      }
    }
  }
  const double tol = config.tol.transform_rel;
  return {
      {"transform", "u_d closed form vs derivative assembly", worst_u <= tol, worst_u, tol},
      {"transform", "V_eff closed form vs transform assembly", worst_v <= tol, worst_v, tol},
  };
}

std::vector<CheckResult> verify_spectrum(const VerifyConfig& config) {
  SweepConfig sweep;
  sweep.n_max = 4;
  sweep.ell_max = 2;
  sweep.dims = {1, 2, 3, 5};
  sweep.zetas = {0.5, 1.0, 2.0};
  sweep.run_oracle = true;
  sweep.grid_size = config.grid_size;
  sweep.tol = config.tol;
  const auto table = full_comparison(sweep);

  double worst = 0.0;
  bool all_present = !table.rows.empty();
  for (const auto& row : table.rows) {
    if (!row.rel_err) {
      all_present = false;
      continue;
    }
    worst = std::max(worst, *row.rel_err);
  }
  std::vector<CheckResult> checks;
  checks.push_back({"spectrum", "oracle agreement over n<=4, ell<=2, d={1,2,3,5}, zeta={0.5,1,2}",
                    all_present && worst <= config.tol.oracle_rel, worst, config.tol.oracle_rel});

  struct Anchor {
    const char* name;
    int n_r, ell, d;
    std::optional<Parity> parity;
    double expected;
  };
  const Anchor anchors[] = {
      {"anchor E(n=0,ell=0,d=3)=7.5", 0, 0, 3, std::nullopt, 7.5},
      {"anchor E(n=1,ell=0,d=3)=17.5", 1, 0, 3, std::nullopt, 17.5},
      {"anchor E(n=0,d=1,even)=1.5", 0, 0, 1, Parity::Even, 1.5},
      {"anchor E(n=0,d=1,odd)=4.0", 0, 0, 1, Parity::Odd, 4.0},
  };
  for (const auto& anchor : anchors) {
    const ComparisonRow* found = nullptr;
    for (const auto& row : table.rows) {
      if (row.zeta == 1.0 && row.n_r == anchor.n_r && row.ell == anchor.ell && row.d == anchor.d &&
          row.parity == anchor.parity) {
        found = &row;
        break;
      }
    }
    if (!found || !found->rel_err) {
      checks.push_back({"spectrum", anchor.name, false, 0.0, config.tol.oracle_rel});
      continue;
    }
    const bool analytic_ok = std::abs(found->e_analytic - anchor.expected) <= 1e-12;
    const bool oracle_ok = *found->rel_err <= config.tol.oracle_rel;
    checks.push_back({"spectrum", anchor.name, analytic_ok && oracle_ok,
                      analytic_ok ? *found->rel_err : std::abs(found->e_analytic - anchor.expected),
                      config.tol.oracle_rel});
  }
  return checks;
}

std::vector<CheckResult> verify_residual(const VerifyConfig& config) {
  const auto r_grid = log_spaced(0.05, 20.0, 160);
  double worst = 0.0;
  for (const auto& qn : residual_states()) {
    const auto state = analytic::normalize(analytic::bound_state(qn, 1.0));
    worst = std::max(worst, oracle::max_relative_residual(state, r_grid));
  }
  return {{"residual", "radial operator residual, n<=3, ell<=2, d={1,3,5}", worst <= config.tol.residual_rel, worst,
           config.tol.residual_rel}};
}

std::vector<CheckResult> verify_structure(const VerifyConfig& config) {
  std::vector<CheckResult> checks;

  // Node counts: the residual battery plus the half-integer d=2 column.
  auto states = residual_states();
  for (int n = 0; n <= 3; ++n)
    for (int ell = 0; ell <= 2; ++ell) states.emplace_back(n, ell, 2);
  int mismatches = 0;
  for (const auto& qn : states) {
    const auto state = analytic::bound_state(qn, 1.0);
    const auto [lo, hi] = analytic::q_domain(state);
    (void)lo;
    const int nodes =
        specfun::count_nodes([&](double q) { return analytic::normalized_phi(state, q); }, 0.0, hi, 10000);
    if (nodes != qn.n_r()) ++mismatches;
  }
  checks.push_back({"structure", "node count equals n_r", mismatches == 0, static_cast<double>(mismatches), 0.0});

  double worst_gram = 0.0;
  const int gram_sets[][2] = {{0, 3}, {1, 3}, {2, 5}, {0, 1}, {1, 2}};
  for (const auto& set : gram_sets)
    worst_gram = std::max(worst_gram, orthonormality_matrix(set[0], set[1], 1.0, 6).max_deviation);
  checks.push_back(
      {"structure", "orthonormality Gram deviation", worst_gram <= config.tol.gram_abs, worst_gram, config.tol.gram_abs});

  // R(r) against m^{1/4} phi(q(r)): the two closed forms must agree up to one
  // r-independent constant.
  double worst_var = 0.0;
  std::vector<QuantumNumbers> ratio_states{{0, 0, 3}, {2, 1, 3}, {1, 1, 2}, {3, 2, 5},
                                           {1, Parity::Even}, {2, Parity::Odd}};
  for (const auto& qn : ratio_states) {
    const auto state = analytic::normalize(analytic::bound_state(qn, 1.0));
    const MassModel model = MassModel::lorentzian_squared(1.0);
    const pct::PctMap map(model, qn.dim());
    std::vector<double> ratios;
    for (int i = 0; i < 50; ++i) {
      const double r = 0.1 + i * (5.0 - 0.1) / 49.0;
      const double g = std::pow(model.at(r).m, 0.25);
      ratios.push_back(analytic::radial(state, r) / (g * analytic::normalized_phi(state, map.q_of_r(r))));
    }
    double mean = 0.0;
    for (double v : ratios) mean += v;
    mean /= static_cast<double>(ratios.size());
    double var = 0.0;
    for (double v : ratios) var += (v - mean) * (v - mean);
    var /= static_cast<double>(ratios.size());
    worst_var = std::max(worst_var, var);
  }
  checks.push_back({"structure", "R proportional to m^(1/4) phi(q), ratio variance", worst_var <= 1e-16, worst_var, 1e-16});
  return checks;
}

std::vector<CheckResult> verify_scaling(const VerifyConfig& config) {
  (void)config;
  double worst = 0.0;
  for (double zeta : {0.5, 2.0}) {
    for (int d : {1, 2, 3, 5}) {
      for (int n = 0; n <= 4; ++n) {
        std::vector<QuantumNumbers> qns;
        if (d == 1) {
          qns.emplace_back(n, Parity::Even);
          qns.emplace_back(n, Parity::Odd);
        } else {
          for (int ell = 0; ell <= 2; ++ell) qns.emplace_back(n, ell, d);
        }
        for (const auto& qn : qns)
          worst = std::max(worst, std::abs(analytic::energy(qn, zeta) - zeta * zeta * analytic::energy(qn, 1.0)));
      }
    }
  }
  return {{"scaling", "energy(qn, zeta) = zeta^2 energy(qn, 1) exactly", worst == 0.0, worst, 0.0}};
}

std::vector<CheckResult> verify_degeneracy(const VerifyConfig& config) {
  const auto report = degeneracy_ladder(0, 1, 3, 1.0, true, config.grid_size, config.tol);
  std::vector<CheckResult> checks;

  const double expected[] = {13.930703308172536, 17.5};
  double worst_analytic = 0.0;
  double worst_oracle = 0.0;
  bool oracle_present = true;
  for (std::size_t k = 0; k < report.ladder.size(); ++k) {
    worst_analytic = std::max(worst_analytic, std::abs(report.ladder[k].e_analytic - expected[k]));
    if (report.ladder[k].e_numeric)
      worst_oracle = std::max(worst_oracle, std::abs(*report.ladder[k].e_numeric - report.ladder[k].e_analytic) /
                                                std::abs(report.ladder[k].e_analytic));
    else
      oracle_present = false;
  }
  checks.push_back({"degeneracy", "ladder(0,1,3) rung energies", worst_analytic <= 1e-9, worst_analytic, 1e-9});
  checks.push_back({"degeneracy", "rungs oracle-confirmed", oracle_present && worst_oracle <= config.tol.oracle_rel,
                    worst_oracle, config.tol.oracle_rel});
  checks.push_back({"degeneracy", "spread reported (nonzero, claim not asserted)", report.max_pairwise_spread > 0.0,
                    report.max_pairwise_spread, 0.0});
  return checks;
}

std::vector<CheckResult> verify_convergence(const VerifyConfig& config) {
  (void)config;
  const auto params = analytic::pt_params(QuantumNumbers(0, 0, 3), 1.0);  // kappa = 1, lambda = 3
  const double exact = analytic::epsilon(params, 0);                      // 8
  const int grids[] = {1000, 2000, 4000};
  double xs[3], ys[3];
  for (int i = 0; i < 3; ++i) {
    const double eps = oracle::lowest_eigenvalues(oracle::build_pt_matrix(params, grids[i]), 1)[0];
    xs[i] = std::log(1.0 / grids[i]);  // log h up to a constant
    ys[i] = std::log(std::abs(eps - exact));
  }
  double mx = (xs[0] + xs[1] + xs[2]) / 3.0;
  double my = (ys[0] + ys[1] + ys[2]) / 3.0;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 3; ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = num / den;
  return {{"convergence", "eigenvalue error order in [1.7, 2.3]", slope >= 1.7 && slope <= 2.3, slope, 2.0}};
}

}  // namespace pdm::harness
