#pragma once

#include <functional>

#include "pdm/halfint.hpp"
#include "pdm/model.hpp"
#include "pdm/specfun.hpp"

namespace pdm::pct {

// The point canonical transformation coordinate map
//
//   q(r) = int_0^r sqrt(m(t)) dt,    g(r) = m(r)^{1/4},
//
// strictly increasing since q' = sqrt(m) > 0. For the lorentzian-squared
// profile q(r) = arctan(zeta r)/zeta, with range [0, pi/(2 zeta)) over
// r >= 0; the symmetric interval is used on the full line (d = 1).
class PctMap {
 public:
  PctMap(MassModel model, int d);

  double q_of_r(double r) const;
  // Same, with the achieved quadrature error estimate (0 for closed form).
  specfun::QuadResult q_of_r_checked(double r) const;

  // Inverse map; q must lie in (-q_sup, q_sup), else std::domain_error.
  double r_of_q(double q) const;

  // Least upper bound of q(r) over r >= 0.
  double q_sup() const { return q_sup_; }
  // Lower end of the physical q-domain: 0 for d >= 2, -q_sup for d = 1.
  double q_min() const { return d_ == 1 ? -q_sup_ : 0.0; }

  const MassModel& model() const { return model_; }
  int dim() const { return d_; }

 private:
  MassModel model_;
  int d_;
  double q_sup_;
};

// Mass-derivative correction term of the transformed equation:
//
//   U_d(r) = m''/(8 m^2) - 7 m'^2/(32 m^3) + m'(d-1)/(4 r m^2).
//
// Throws SingularPointError at r = 0 (the (d-1)/r term); use u_d_closed or a
// small-r limit there.
double u_d_general(const MassModel& model, int d, double r);

// Closed form of U_d for the lorentzian-squared profile:
//   U_d = -(zeta^2 d) tan^2(zeta q) + zeta^2 (1 - 2d)/2.
double u_d_closed(double zeta, int d, double q);

// Effective potential in the q coordinate, shift included:
//
//   V_eff = ell_d(ell_d+1)/(2 r^2 m) - U_d                       (assembly)
//         = zeta^2/2 [ A/sin^2(zeta q) + B/cos^2(zeta q) ] - zeta^2/2
//
// with A = ell_d(ell_d+1) and B = A + 2d (closed form, lorentzian-squared
// profile). Singular evaluations return an explicit infinity, not an error.
double v_eff_closed(double zeta, HalfInt ell_d, int d, double q);
double v_eff_general(const PctMap& map, HalfInt ell_d, double q);
// Dispatch: closed form when the profile admits one, assembly otherwise.
double v_eff(const PctMap& map, HalfInt ell_d, double q);

// V_eff packaged with its domain and the -zeta^2/2 shift constant. The shift
// lives here and only here; solvers working with the shift-free operator add
// it back when reporting energies.
class EffectivePotential {
 public:
  static EffectivePotential closed_form(double zeta, HalfInt ell_d, int d);
  static EffectivePotential general(PctMap map, HalfInt ell_d);

  double operator()(double q) const { return eval_(q); }
  double shift() const { return shift_; }
  double q_min() const { return q_min_; }
  double q_max() const { return q_max_; }

 private:
  EffectivePotential(std::function<double(double)> eval, double shift, double q_min, double q_max)
      : eval_(std::move(eval)), shift_(shift), q_min_(q_min), q_max_(q_max) {}

  std::function<double(double)> eval_;
  double shift_;
  double q_min_, q_max_;
};

}  // namespace pdm::pct
