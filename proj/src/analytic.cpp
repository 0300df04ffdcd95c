#include "pdm/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pdm/errors.hpp"
#include "pdm/jet.hpp"

namespace pdm::analytic {

namespace {

void require_zeta(double zeta) {
  if (!(zeta > 0.0) || !std::isfinite(zeta))
    throw std::invalid_argument("analytic: zeta must be positive, got " + std::to_string(zeta));
}

// (2 ell_d + 1)^2 + 8d, an exact integer.
int delta_radicand(HalfInt ell_d, int d) {
  const int t = ell_d.twice() + 1;
  return t * t + 8 * d;
}

}  // namespace

PTParams pt_params(const QuantumNumbers& qn, double zeta) {
  require_zeta(zeta);
  const HalfInt ld = qn.ell_d();
  const double delta = std::sqrt(static_cast<double>(delta_radicand(ld, qn.dim())));
  return PTParams{
      .kappa = (ld + 1).value(),
      .lambda = 0.5 * (1.0 + delta),
      .delta = delta,
      .c = (ld + HalfInt::from_twice(3)).value(),
      .zeta = zeta,
      .ell_d = ld,
      .dim = qn.dim(),
  };
}

double energy(const QuantumNumbers& qn, double zeta) {
  require_zeta(zeta);
  const HalfInt ld = qn.ell_d();
  const double delta = std::sqrt(static_cast<double>(delta_radicand(ld, qn.dim())));
  const double c = (ld + HalfInt::from_twice(3)).value();
  const double base = c + 0.5 * delta + 2.0 * qn.n_r();
  const double unit = 0.5 * (base * base - 1.0);
  return (zeta * zeta) * unit;
}

double epsilon(const PTParams& params, int n_r) {
  const double base = params.kappa + params.lambda + 2.0 * n_r;
  return 0.5 * params.zeta * params.zeta * base * base;
}

namespace {

double phi_impl(const PTParams& p, const specfun::TerminatingHyp& series, double q) {
  const double s = std::sin(p.zeta * q);
  const double co = std::cos(p.zeta * q);
  return std::pow(s, p.kappa) * std::pow(co, p.lambda) * series(s * s);
}

double radial_raw(const PTParams& p, const specfun::TerminatingHyp& series, double r) {
  const double rho = p.zeta * r;
  const double w = 1.0 + rho * rho;
  const double exponent = -0.25 * (p.ell_d.twice() + 5.0 + p.delta);
  return std::pow(rho, p.kappa) * std::pow(w, exponent) * series(rho * rho / w);
}

}  // namespace

double phi(const PTParams& params, int n_r, double q) {
  if (n_r < 0) throw std::invalid_argument("phi: n_r must be non-negative");
  const specfun::TerminatingHyp series(n_r, params.kappa + params.lambda + n_r, params.kappa + 0.5);
  return phi_impl(params, series, q);
}

BoundState bound_state(const QuantumNumbers& qn, double zeta) {
  PTParams p = pt_params(qn, zeta);
  specfun::TerminatingHyp series(qn.n_r(), p.kappa + p.lambda + qn.n_r(), p.kappa + 0.5);
  return BoundState{qn, p, energy(qn, zeta), 1.0, std::move(series)};
}

double radial(const BoundState& state, double r) {
  return state.norm_constant * radial_raw(state.params, state.series, r);
}

std::array<double, 3> radial_jet(const BoundState& state, double r) {
  const PTParams& p = state.params;
  const Jet2 rho = Jet2::variable(p.zeta * r, p.zeta);
  const Jet2 w = rho * rho + 1.0;
  const double exponent = -0.25 * (p.ell_d.twice() + 5.0 + p.delta);

  const auto& coeff = state.series.coefficients();
  const Jet2 t = (rho * rho) / w;
  Jet2 poly = Jet2::constant(coeff.back());
  for (auto it = coeff.rbegin() + 1; it != coeff.rend(); ++it) poly = poly * t + *it;

  const Jet2 result = pow(rho, p.kappa) * pow(w, exponent) * poly * state.norm_constant;
  return {result.f, result.d1, result.d2};
}

double normalized_phi(const BoundState& state, double q) {
  return state.norm_constant * phi_impl(state.params, state.series, q);
}

std::array<double, 2> q_domain(const BoundState& state) {
  const double sup = std::numbers::pi / (2.0 * state.params.zeta);
  return {state.qn.dim() == 1 ? -sup : 0.0, sup};
}

BoundState normalize(const BoundState& state) {
  const auto [lo, hi] = q_domain(state);
  auto density = [&](double q) {
    const double v = normalized_phi(state, q);
    return v * v;
  };
  // Scale-aware tolerance: the raw polynomial factor can make |phi|^2 large
  // for excited states, and an absolute 1e-12 would then be unreachable.
  double peak = 0.0;
  for (int i = 0; i < 64; ++i) peak = std::max(peak, density(lo + (i + 0.5) * (hi - lo) / 64.0));
  const auto integral = specfun::quad(density, lo, hi, 1e-13 * std::max(1.0, peak * (hi - lo)));
  if (!(integral.value > 0.0))
    throw EvaluationError("normalize: non-positive norm integral");
  BoundState out = state;
  out.norm_constant = state.norm_constant / std::sqrt(integral.value);
  return out;
}

}  // namespace pdm::analytic
