#include "pdm/pct.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pdm/errors.hpp"

namespace pdm::pct {

namespace {

constexpr double kQuadTol = 1e-12;       // transform quadrature target
constexpr double kOriginRadius = 1e-8;   // below this, assembly switches to the closed-form limit

double sqrt_mass(const MassModel& model, double r) {
  const double m = model.at(r).m;
  if (!(m > 0.0)) throw EvaluationError("PctMap: mass not positive at r=" + std::to_string(r));
  return std::sqrt(m);
}

// int_0^inf sqrt(m) dr via the compactification r = t/(1-t). Profiles whose
// tail decays no faster than 1/r have a divergent integral: the map then
// covers the whole line and q_sup is +inf. r_of_q stays correct either way,
// since its bracketing search raises a domain error for unattained q.
double numeric_q_sup(const MassModel& model) {
  const double s1 = sqrt_mass(model, 1e8);
  const double s2 = sqrt_mass(model, 2e8);
  if (s1 > 0.0 && s2 > 0.0 && std::log2(s1 / s2) <= 1.05) return std::numeric_limits<double>::infinity();
  auto integrand = [&](double t) {
    const double om = 1.0 - t;
    return sqrt_mass(model, t / om) / (om * om);
  };
  try {
    return specfun::quad(integrand, 0.0, 1.0, 1e-10).value;
  } catch (const QuadratureError&) {
    return std::numeric_limits<double>::infinity();
  }
}

}  // namespace

PctMap::PctMap(MassModel model, int d) : model_(std::move(model)), d_(d) {
  if (d < 1) throw std::invalid_argument("PctMap: dimension must be >= 1");
  q_sup_ = model_.kind() == MassKind::LorentzianSquared ? std::numbers::pi / (2.0 * model_.zeta())
                                                        : numeric_q_sup(model_);
}

specfun::QuadResult PctMap::q_of_r_checked(double r) const {
  if (model_.kind() == MassKind::LorentzianSquared) {
    const double z = model_.zeta();
    return {std::atan(z * r) / z, 0.0};
  }
  if (r == 0.0) return {0.0, 0.0};
  // q is odd in r for an even profile (full-line case).
  const double sign = r < 0.0 ? -1.0 : 1.0;
  auto res = specfun::quad([&](double t) { return sqrt_mass(model_, t); }, 0.0, std::abs(r), kQuadTol);
  return {sign * res.value, res.error_estimate};
}

double PctMap::q_of_r(double r) const { return q_of_r_checked(r).value; }

double PctMap::r_of_q(double q) const {
  if (!(std::abs(q) < q_sup_))
    throw std::domain_error("r_of_q: q=" + std::to_string(q) + " outside (-" + std::to_string(q_sup_) + ", " +
                            std::to_string(q_sup_) + ")");
  if (model_.kind() == MassKind::LorentzianSquared) {
    const double z = model_.zeta();
    return std::tan(z * q) / z;
  }
  if (q == 0.0) return 0.0;
  const double target = std::abs(q);
  const double sign = q < 0.0 ? -1.0 : 1.0;
  // Monotone bracketing: expand, then bisect.
  double hi = 1.0;
  while (q_of_r(hi) < target) {
    hi *= 2.0;
    if (hi > 1e12)
      throw std::domain_error("r_of_q: q=" + std::to_string(q) + " not attained below r=1e12");
  }
  double lo = 0.0;
  while (hi - lo > 1e-14 * std::max(1.0, lo)) {
    const double mid = 0.5 * (lo + hi);
    (q_of_r(mid) < target ? lo : hi) = mid;
  }
  return sign * 0.5 * (lo + hi);
}

double u_d_general(const MassModel& model, int d, double r) {
  if (r == 0.0) throw SingularPointError("u_d_general: the (d-1)/r term is singular at r=0");
  if (r < 0.0 && d != 1) throw std::domain_error("u_d_general: r must be positive for d >= 2");
  const auto [m, m1, m2] = model.at(r);
  if (!(m > 0.0)) throw EvaluationError("u_d_general: mass not positive at r=" + std::to_string(r));
  const double m_2 = m * m;
  return m2 / (8.0 * m_2) - 7.0 * m1 * m1 / (32.0 * m_2 * m) + m1 * (d - 1) / (4.0 * r * m_2);
}

double u_d_closed(double zeta, int d, double q) {
  const double t = std::tan(zeta * q);
  return -(zeta * zeta * d) * t * t + 0.5 * zeta * zeta * (1.0 - 2.0 * d);
}

double v_eff_closed(double zeta, HalfInt ell_d, int d, double q) {
  const double a = angular_factor(ell_d);
  const double b = a + 2.0 * d;
  const double s = std::sin(zeta * q);
  const double co = std::cos(zeta * q);
  // Nonzero coefficients divide through to +-inf at the interval ends; a
  // vanishing coefficient must not turn that into 0/0.
  const double term_a = a == 0.0 ? 0.0 : a / (s * s);
  const double term_b = b == 0.0 ? 0.0 : b / (co * co);
  return 0.5 * zeta * zeta * (term_a + term_b) - 0.5 * zeta * zeta;
}

double v_eff_general(const PctMap& map, HalfInt ell_d, double q) {
  const double r = map.r_of_q(q);
  const double a = angular_factor(ell_d);
  if (std::abs(r) < kOriginRadius) {
    if (map.model().kind() == MassKind::LorentzianSquared)
      return v_eff_closed(map.model().zeta(), ell_d, map.dim(), q);
    if (a != 0.0) return a > 0.0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
    // Centrifugal-free: only U_d survives; evaluate just off the origin.
    const double r_eval = r < 0.0 ? -kOriginRadius : kOriginRadius;
    return -u_d_general(map.model(), map.dim(), r_eval);
  }
  const double m = map.model().at(r).m;
  const double centrifugal = a == 0.0 ? 0.0 : a / (2.0 * r * r * m);
  return centrifugal - u_d_general(map.model(), map.dim(), r);
}

double v_eff(const PctMap& map, HalfInt ell_d, double q) {
  if (map.model().kind() == MassKind::LorentzianSquared)
    return v_eff_closed(map.model().zeta(), ell_d, map.dim(), q);
  return v_eff_general(map, ell_d, q);
}

EffectivePotential EffectivePotential::closed_form(double zeta, HalfInt ell_d, int d) {
  if (!(zeta > 0.0)) throw std::invalid_argument("EffectivePotential: zeta must be positive");
  const double sup = std::numbers::pi / (2.0 * zeta);
  return EffectivePotential([zeta, ell_d, d](double q) { return v_eff_closed(zeta, ell_d, d, q); },
                            -0.5 * zeta * zeta, d == 1 ? -sup : 0.0, sup);
}

EffectivePotential EffectivePotential::general(PctMap map, HalfInt ell_d) {
  const double zeta = map.model().zeta();
  const double lo = map.q_min();
  const double hi = map.q_sup();
  auto eval = [m = std::move(map), ell_d](double q) { return v_eff_general(m, ell_d, q); };
  return EffectivePotential(std::move(eval), -0.5 * zeta * zeta, lo, hi);
}

}  // namespace pdm::pct
