#include "pdm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pdm/analytic.hpp"
#include "pdm/harness.hpp"
#include "pdm/model.hpp"
#include "pdm/pct.hpp"

namespace pdm::cli {

namespace {

// All numeric output funnels through one fixed 12-significant-digit format,
// so CSV and JSON encode identical values and identical runs are
// byte-identical.
std::string fmt12(double v) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt12_json(double v) { return std::isfinite(v) ? fmt12(v) : "null"; }

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt12(*v) : ""; }

std::string fmt_opt_json(const std::optional<double>& v) { return v ? fmt12_json(*v) : "null"; }

const char* bool_str(bool b) { return b ? "true" : "false"; }

struct OutputTarget {
  std::ofstream file;
  std::ostream* sink = nullptr;
};

bool open_target(OutputTarget& target, const std::string& path, std::ostream& fallback, std::ostream& err) {
  if (path.empty()) {
    target.sink = &fallback;
    return true;
  }
  target.file.open(path);
  if (!target.file) {
    err << "error: cannot open output file '" << path << "'\n";
    return false;
  }
  target.sink = &target.file;
  return true;
}

// Plain key=value config support. CLI11 2.4 does not process config files
// attached to subcommands, so the merge is done up front: each key missing
// from the explicit arguments is appended as a flag, which makes "explicit
// flags win" hold by construction.
bool merge_config_args(std::vector<std::string>& argv, std::ostream& err) {
  std::string path;
  for (std::size_t i = 0; i < argv.size(); ++i) {
    if (argv[i] == "--config" && i + 1 < argv.size()) path = argv[i + 1];
    else if (argv[i].rfind("--config=", 0) == 0) path = argv[i].substr(9);
  }
  if (path.empty()) return true;
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read config file '" << path << "'\n";
    return false;
  }
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      err << "error: config file '" << path << "' line " << lineno << ": expected key=value\n";
      return false;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || key == "config") continue;
    const std::string flag = "--" + key;
    bool given = false;
    for (const auto& arg : argv)
      if (arg == flag || arg.rfind(flag + "=", 0) == 0) given = true;
    if (given) continue;
    if (value == "true") {
      argv.push_back(flag);
    } else if (value == "false") {
      argv.push_back("--no-" + key);
    } else {
      argv.push_back(flag);
      argv.push_back(value);
    }
  }
  return true;
}

const CLI::Validator EvenGrid(
    [](std::string& s) -> std::string {
      try {
        const long v = std::stol(s);
        if (v < 64 || v % 2 != 0) return std::string("grid must be an even integer >= 64");
      } catch (...) {
        return std::string("grid must be an even integer >= 64");
      }
      return {};
    },
    "EVEN_GRID");

void add_tolerance_options(CLI::App* cmd, harness::Tolerances& tol) {
  cmd->add_option("--tol-oracle", tol.oracle_rel, "relative oracle-vs-analytic energy tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--tol-norm", tol.norm_abs, "absolute normalization tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--tol-residual", tol.residual_rel, "relative radial-operator residual tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--tol-gram", tol.gram_abs, "entrywise Gram-matrix tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--tol-degeneracy", tol.degeneracy_rel, "relative ladder-spread tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--tol-transform", tol.transform_rel, "relative transform-identity tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

std::string tolerances_json(const harness::Tolerances& tol, const char* indent) {
  std::ostringstream os;
  os << "{\n";
  os << indent << "  \"oracle_rel\": " << fmt12_json(tol.oracle_rel) << ",\n";
  os << indent << "  \"norm_abs\": " << fmt12_json(tol.norm_abs) << ",\n";
  os << indent << "  \"residual_rel\": " << fmt12_json(tol.residual_rel) << ",\n";
  os << indent << "  \"gram_abs\": " << fmt12_json(tol.gram_abs) << ",\n";
  os << indent << "  \"degeneracy_rel\": " << fmt12_json(tol.degeneracy_rel) << ",\n";
  os << indent << "  \"transform_rel\": " << fmt12_json(tol.transform_rel) << "\n";
  os << indent << "}";
  return os.str();
}

// ---------------------------------------------------------------- spectrum

struct SpectrumOpts {
  double zeta = 1.0;
  std::vector<int> dims{3};
  int ell_max = 2;
  int n_max = 4;
  std::string parity;
  bool oracle = false;
  int grid = 8192;
  std::string format = "csv";
  std::string out_path;
  harness::Tolerances tol;
};

void emit_spectrum_csv(std::ostream& os, const std::vector<harness::ComparisonRow>& rows) {
  os << "n_r,ell,d,ell_d,kappa,lambda,delta,E_analytic,E_numeric,rel_err,nodes,pass\n";
  for (const auto& row : rows) {
    os << row.n_r << ',' << row.ell << ',' << row.d << ',' << fmt12(row.ell_d) << ',' << fmt12(row.kappa) << ','
       << fmt12(row.lambda) << ',' << fmt12(row.delta) << ',' << fmt12(row.e_analytic) << ','
       << fmt_opt(row.e_numeric) << ',' << fmt_opt(row.rel_err) << ',' << row.nodes << ',' << bool_str(row.pass)
       << '\n';
  }
}

void emit_spectrum_json(std::ostream& os, double zeta, const harness::Tolerances& tol,
                        const std::vector<harness::ComparisonRow>& rows) {
  os << "{\n  \"zeta\": " << fmt12_json(zeta) << ",\n";
  os << "  \"tolerances\": " << tolerances_json(tol, "  ") << ",\n";
  os << "  \"states\": [";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    os << (i == 0 ? "\n" : ",\n");
    os << "    {\"n_r\": " << row.n_r << ", \"ell\": " << row.ell << ", \"d\": " << row.d
       << ", \"ell_d\": " << fmt12_json(row.ell_d) << ", \"kappa\": " << fmt12_json(row.kappa)
       << ", \"lambda\": " << fmt12_json(row.lambda) << ", \"delta\": " << fmt12_json(row.delta)
       << ", \"E_analytic\": " << fmt12_json(row.e_analytic) << ", \"E_numeric\": " << fmt_opt_json(row.e_numeric)
       << ", \"rel_err\": " << fmt_opt_json(row.rel_err) << ", \"nodes\": " << row.nodes
       << ", \"pass\": " << bool_str(row.pass) << "}";
  }
  os << "\n  ]\n}\n";
}

int exec_spectrum(const SpectrumOpts& o, std::ostream& out, std::ostream& err) {
  harness::SweepConfig cfg;
  cfg.n_max = o.n_max;
  cfg.ell_max = o.ell_max;
  cfg.dims = o.dims;
  cfg.zetas = {o.zeta};
  cfg.run_oracle = o.oracle;
  cfg.grid_size = o.grid;
  cfg.tol = o.tol;
  auto table = harness::full_comparison(cfg);

  if (!o.parity.empty()) {
    const Parity want = o.parity == "even" ? Parity::Even : Parity::Odd;
    std::erase_if(table.rows, [&](const harness::ComparisonRow& r) { return r.d == 1 && r.parity != want; });
  }

  OutputTarget target;
  if (!open_target(target, o.out_path, out, err)) return 1;
  if (o.format == "json")
    emit_spectrum_json(*target.sink, o.zeta, o.tol, table.rows);
  else
    emit_spectrum_csv(*target.sink, table.rows);
  return 0;
}

// ------------------------------------------------------------ wavefunction

struct WavefunctionOpts {
  double zeta = 1.0;
  int n_r = 0;
  int ell = 0;
  int d = 3;
  std::string parity;
  int points = 500;
  double r_max = 0.0;  // 0: use 10/zeta
  std::string format = "csv";
  std::string out_path;
};

int exec_wavefunction(const WavefunctionOpts& o, std::ostream& out, std::ostream& err) {
  if (o.d == 1 && o.parity.empty()) {
    err << "error: --d 1 requires --parity even|odd\n";
    return 2;
  }
  const QuantumNumbers qn = o.d == 1
                                ? QuantumNumbers(o.n_r, o.parity == "even" ? Parity::Even : Parity::Odd)
                                : QuantumNumbers(o.n_r, o.ell, o.d);
  const auto state = analytic::normalize(analytic::bound_state(qn, o.zeta));
  const MassModel model = MassModel::lorentzian_squared(o.zeta);
  const pct::PctMap map(model, o.d);
  const double r_max = o.r_max > 0.0 ? o.r_max : 10.0 / o.zeta;

  OutputTarget target;
  if (!open_target(target, o.out_path, out, err)) return 1;
  std::ostream& os = *target.sink;

  struct Sample {
    double r, q, m, radial, phi;
  };
  std::vector<Sample> samples;
  samples.reserve(static_cast<std::size_t>(o.points));
  for (int i = 0; i < o.points; ++i) {
    const double r = r_max * i / (o.points - 1);
    const double q = map.q_of_r(r);
    samples.push_back({r, q, model.at(r).m, analytic::radial(state, r), analytic::normalized_phi(state, q)});
  }

  if (o.format == "json") {
    os << "{\n  \"zeta\": " << fmt12_json(o.zeta) << ",\n";
    os << "  \"n_r\": " << qn.n_r() << ",\n  \"ell\": " << qn.ell() << ",\n  \"d\": " << qn.dim() << ",\n";
    os << "  \"ell_d\": " << fmt12_json(qn.ell_d().value()) << ",\n";
    os << "  \"energy\": " << fmt12_json(state.energy) << ",\n";
    os << "  \"norm_constant\": " << fmt12_json(state.norm_constant) << ",\n";
    os << "  \"samples\": [";
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const auto& s = samples[i];
      os << (i == 0 ? "\n" : ",\n");
      os << "    {\"r\": " << fmt12_json(s.r) << ", \"q\": " << fmt12_json(s.q) << ", \"m\": " << fmt12_json(s.m)
         << ", \"R\": " << fmt12_json(s.radial) << ", \"phi\": " << fmt12_json(s.phi) << "}";
    }
    os << "\n  ]\n}\n";
  } else {
    os << "r,q,m,R,phi\n";
    for (const auto& s : samples)
      os << fmt12(s.r) << ',' << fmt12(s.q) << ',' << fmt12(s.m) << ',' << fmt12(s.radial) << ',' << fmt12(s.phi)
         << '\n';
  }
  return 0;
}

// -------------------------------------------------------------- degeneracy

struct DegeneracyOpts {
  double zeta = 1.0;
  int n_r = 0;
  int ell = 1;
  int d_start = 3;
  bool oracle = true;
  int grid = 8192;
  std::string format = "csv";
  std::string out_path;
  harness::Tolerances tol;
};

int exec_degeneracy(const DegeneracyOpts& o, std::ostream& out, std::ostream& err) {
  const auto report = harness::degeneracy_ladder(o.n_r, o.ell, o.d_start, o.zeta, o.oracle, o.grid, o.tol);

  OutputTarget target;
  if (!open_target(target, o.out_path, out, err)) return 1;
  std::ostream& os = *target.sink;

  if (o.format == "json") {
    os << "{\n  \"zeta\": " << fmt12_json(o.zeta) << ",\n";
    os << "  \"n_r\": " << o.n_r << ",\n  \"ell\": " << o.ell << ",\n  \"d_start\": " << o.d_start << ",\n";
    os << "  \"rungs\": [";
    for (std::size_t i = 0; i < report.ladder.size(); ++i) {
      const auto& rung = report.ladder[i];
      std::optional<double> abs_err;
      if (rung.e_numeric) abs_err = std::abs(*rung.e_numeric - rung.e_analytic);
      os << (i == 0 ? "\n" : ",\n");
      os << "    {\"n_r\": " << rung.n_r << ", \"ell\": " << rung.ell << ", \"d\": " << rung.d
         << ", \"ell_d\": " << fmt12_json(rung.ell_d.value()) << ", \"E_analytic\": " << fmt12_json(rung.e_analytic)
         << ", \"E_numeric\": " << fmt_opt_json(rung.e_numeric) << ", \"abs_err\": " << fmt_opt_json(abs_err) << "}";
    }
    os << "\n  ],\n";
    os << "  \"max_pairwise_spread\": " << fmt12_json(report.max_pairwise_spread) << ",\n";
    os << "  \"claim_satisfied\": " << bool_str(report.claim_satisfied) << "\n}\n";
  } else {
    os << "n_r,ell,d,ell_d,E_analytic,E_numeric,abs_err,max_pairwise_spread,claim_satisfied\n";
    for (const auto& rung : report.ladder) {
      std::optional<double> abs_err;
      if (rung.e_numeric) abs_err = std::abs(*rung.e_numeric - rung.e_analytic);
      os << rung.n_r << ',' << rung.ell << ',' << rung.d << ',' << fmt12(rung.ell_d.value()) << ','
         << fmt12(rung.e_analytic) << ',' << fmt_opt(rung.e_numeric) << ',' << fmt_opt(abs_err) << ','
         << fmt12(report.max_pairwise_spread) << ',' << bool_str(report.claim_satisfied) << '\n';
    }
  }
  return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyOpts {
  std::vector<std::string> suites{"all"};
  int grid = 8192;
  std::string format = "csv";
  std::string out_path;
  harness::Tolerances tol;
};

std::vector<harness::CheckResult> determinism_checks() {
  const std::vector<std::string> args{"spectrum", "--zeta", "1", "--d", "3", "--ell-max", "2", "--n-max", "4"};
  std::ostringstream out_a, out_b, err_a, err_b;
  const int rc_a = run(args, out_a, err_a);
  const int rc_b = run(args, out_b, err_b);
  const bool same = rc_a == 0 && rc_b == 0 && out_a.str() == out_b.str();
  return {{"determinism", "identical spectrum invocations are byte-identical", same, same ? 0.0 : 1.0, 0.0}};
}

int exec_verify(const VerifyOpts& o, std::ostream& out, std::ostream& err) {
  harness::VerifyConfig vc{o.grid, o.tol};

  bool all = false;
  bool known = true;
  std::vector<std::string> wanted;
  for (const auto& s : o.suites) {
    if (s == "all") all = true;
    else wanted.push_back(s);
  }
  const std::vector<std::string> order{"transform",  "spectrum",   "residual", "structure",
                                       "scaling",    "degeneracy", "convergence", "determinism"};
  std::vector<harness::CheckResult> checks;
  for (const auto& name : order) {
    const bool selected = all || std::find(wanted.begin(), wanted.end(), name) != wanted.end();
    if (!selected) continue;
    err << "[verify] running suite '" << name << "'...\n";
    std::vector<harness::CheckResult> batch;
    if (name == "transform") batch = harness::verify_transform(vc);
    else if (name == "spectrum") batch = harness::verify_spectrum(vc);
    else if (name == "residual") batch = harness::verify_residual(vc);
    else if (name == "structure") batch = harness::verify_structure(vc);
    else if (name == "scaling") batch = harness::verify_scaling(vc);
    else if (name == "degeneracy") batch = harness::verify_degeneracy(vc);
    else if (name == "convergence") batch = harness::verify_convergence(vc);
    else if (name == "determinism") batch = determinism_checks();
    for (const auto& c : batch)
      err << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.check << " (observed " << fmt12(c.observed)
          << ", threshold " << fmt12(c.threshold) << ")\n";
    checks.insert(checks.end(), batch.begin(), batch.end());
  }
  for (const auto& s : wanted)
    if (std::find(order.begin(), order.end(), s) == order.end()) known = false;
  if (!known) {
    err << "error: unknown suite name; valid: all transform spectrum residual structure scaling degeneracy "
           "convergence determinism\n";
    return 2;
  }

  OutputTarget target;
  if (!open_target(target, o.out_path, out, err)) return 1;
  std::ostream& os = *target.sink;
  const bool all_pass = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });

  if (o.format == "json") {
    os << "{\n  \"grid\": " << o.grid << ",\n";
    os << "  \"tolerances\": " << tolerances_json(o.tol, "  ") << ",\n";
    os << "  \"checks\": [";
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const auto& c = checks[i];
      os << (i == 0 ? "\n" : ",\n");
      os << "    {\"suite\": \"" << c.suite << "\", \"check\": \"" << c.check << "\", \"status\": \""
         << (c.pass ? "pass" : "fail") << "\", \"observed\": " << fmt12_json(c.observed)
         << ", \"threshold\": " << fmt12_json(c.threshold) << "}";
    }
    os << "\n  ],\n  \"all_pass\": " << bool_str(all_pass) << "\n}\n";
  } else {
    os << "suite,check,status,observed,threshold\n";
    for (const auto& c : checks)
      os << c.suite << ",\"" << c.check << "\"," << (c.pass ? "pass" : "fail") << ',' << fmt12(c.observed) << ','
         << fmt12(c.threshold) << '\n';
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and finite-difference bound states of a quantum particle with an\n"
               "asymptotically vanishing position-dependent mass m(r) = 1/(1 + zeta^2 r^2)^2."};
  app.name("pdm-spectra");
  app.require_subcommand(1);
  app.set_version_flag("--version", "pdm-spectra 1.0.0");
  std::string config_path_spectrum, config_path_wavefunction, config_path_degeneracy, config_path_verify;

  SpectrumOpts so;
  auto* spectrum = app.add_subcommand("spectrum", "Closed-form spectrum table, optionally oracle-checked");
  spectrum->add_option("--zeta", so.zeta, "inverse length scale of the mass profile")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  spectrum->add_option("--d", so.dims, "dimension list (comma separated or repeated)")
      ->delimiter(',')
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  spectrum->add_option("--ell-max", so.ell_max, "largest angular momentum (ignored for d=1)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  spectrum->add_option("--n-max", so.n_max, "largest radial quantum number")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  spectrum->add_option("--parity", so.parity, "restrict d=1 rows to one parity")
      ->check(CLI::IsMember({"even", "odd"}));
  spectrum->add_flag("--oracle,!--no-oracle", so.oracle, "run the finite-difference eigensolver per state");
  spectrum->add_option("--grid", so.grid, "oracle grid size")->check(EvenGrid)->capture_default_str();
  spectrum->add_option("--format", so.format, "output format")->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  spectrum->add_option("--out", so.out_path, "output file (default: stdout)");
  spectrum->add_option("--config", config_path_spectrum, "key=value config file; explicit flags win");
  add_tolerance_options(spectrum, so.tol);

  WavefunctionOpts wo;
  auto* wavefunction = app.add_subcommand("wavefunction", "Sample one bound state in both coordinate pictures");
  wavefunction->add_option("--zeta", wo.zeta, "inverse length scale")->check(CLI::PositiveNumber)
      ->capture_default_str();
  wavefunction->add_option("--n", wo.n_r, "radial quantum number")->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  wavefunction->add_option("--ell", wo.ell, "angular momentum (d >= 2)")->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  wavefunction->add_option("--d", wo.d, "dimension")->check(CLI::Range(1, 64))->capture_default_str();
  wavefunction->add_option("--parity", wo.parity, "parity, required for d=1")
      ->check(CLI::IsMember({"even", "odd"}));
  wavefunction->add_option("--points", wo.points, "number of radial samples")->check(CLI::Range(2, 10000000))
      ->capture_default_str();
  wavefunction->add_option("--r-max", wo.r_max, "largest radius (default 10/zeta)")->check(CLI::PositiveNumber);
  wavefunction->add_option("--format", wo.format, "output format")->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  wavefunction->add_option("--out", wo.out_path, "output file (default: stdout)");
  wavefunction->add_option("--config", config_path_wavefunction, "key=value config file; explicit flags win");

  DegeneracyOpts dgo;
  auto* degeneracy = app.add_subcommand("degeneracy", "Inter-dimensional ladder report (spread measured, not assumed)");
  degeneracy->add_option("--zeta", dgo.zeta, "inverse length scale")->check(CLI::PositiveNumber)
      ->capture_default_str();
  degeneracy->add_option("--n", dgo.n_r, "radial quantum number")->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  degeneracy->add_option("--ell", dgo.ell, "top-rung angular momentum (>= 1)")->check(CLI::Range(1, 64))
      ->capture_default_str();
  degeneracy->add_option("--d-start", dgo.d_start, "dimension of the top rung")->check(CLI::IsMember({2, 3}))
      ->capture_default_str();
  degeneracy->add_flag("--oracle,!--no-oracle", dgo.oracle, "oracle-confirm every rung");
  degeneracy->add_option("--grid", dgo.grid, "oracle grid size")->check(EvenGrid)->capture_default_str();
  degeneracy->add_option("--format", dgo.format, "output format")->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  degeneracy->add_option("--out", dgo.out_path, "output file (default: stdout)");
  degeneracy->add_option("--config", config_path_degeneracy, "key=value config file; explicit flags win");
  add_tolerance_options(degeneracy, dgo.tol);

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "Run verification suites; exit 0 only if every check passes");
  verify->add_option("--suite", vo.suites,
                     "suites: all transform spectrum residual structure scaling degeneracy convergence determinism")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--grid", vo.grid, "oracle grid size")->check(EvenGrid)->capture_default_str();
  verify->add_option("--format", vo.format, "output format")->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  verify->add_option("--out", vo.out_path, "output file (default: stdout)");
  verify->add_option("--config", config_path_verify, "key=value config file; explicit flags win");
  add_tolerance_options(verify, vo.tol);

  std::vector<std::string> argv = args;
  if (!merge_config_args(argv, err)) return 2;
  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (spectrum->parsed()) return exec_spectrum(so, out, err);
    if (wavefunction->parsed()) return exec_wavefunction(wo, out, err);
    if (degeneracy->parsed()) return exec_degeneracy(dgo, out, err);
    if (verify->parsed()) return exec_verify(vo, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace pdm::cli
