#pragma once

#include <array>

#include "pdm/halfint.hpp"
#include "pdm/model.hpp"
#include "pdm/specfun.hpp"

namespace pdm::analytic {

// Parameters of the solvable trigonometric potential, bridging quantum
// numbers to the closed-form spectrum:
//
//   kappa(kappa-1) = ell_d(ell_d+1)          kappa = ell_d + 1
//   lambda(lambda-1) = ell_d(ell_d+1) + 2d   lambda = (1 + delta)/2
//   delta = sqrt((2 ell_d + 1)^2 + 8d)       c = ell_d + 3/2
//
// kappa = ell_d + 1 is the root whose wavefunction vanishes like rho^{ell_d+1}
// at the origin; the mirror root -ell_d is never used. kappa = 0 occurs only
// for even parity at d = 1.
struct PTParams {
  double kappa;
  double lambda;
  double delta;
  double c;
  double zeta;
  HalfInt ell_d;
  int dim;
};

PTParams pt_params(const QuantumNumbers& qn, double zeta);

// Bound-state energy:  E = zeta^2/2 ((c + delta/2 + 2 n_r)^2 - 1).
// Implemented as zeta^2 times the zeta-independent unit value, so the
// scaling law E(zeta) = zeta^2 E(1) holds bit-exactly.
double energy(const QuantumNumbers& qn, double zeta);

// Shift-free eigenvalue of the trigonometric problem:
//   eps = zeta^2/2 (kappa + lambda + 2 n_r)^2 = E + zeta^2/2.
double epsilon(const PTParams& params, int n_r);

// Unnormalized 1D eigenfunction
//   phi = sin^kappa(zeta q) cos^lambda(zeta q)
//         2F1(-n_r, kappa+lambda+n_r, kappa+1/2; sin^2(zeta q)).
// For kappa = 0 the sin factor is 1 and the third parameter is 1/2: the even
// full-line branch is the same expression.
double phi(const PTParams& params, int n_r, double q);

// A bound state with its precomputed polynomial factor. norm_constant is 1
// until normalize() fixes it; it applies to both the q-picture phi and the
// r-picture R, which differ by the factor g = m^{1/4} only.
struct BoundState {
  QuantumNumbers qn;
  PTParams params;
  double energy;
  double norm_constant;
  specfun::TerminatingHyp series;
};

BoundState bound_state(const QuantumNumbers& qn, double zeta);

// Radial eigenfunction
//   R = norm_constant rho^{ell_d+1} (1+rho^2)^{-(2 ell_d+5+delta)/4}
//       2F1(-n_r, c+delta/2+n_r, c; rho^2/(1+rho^2)),   rho = zeta r,
// equal to norm_constant * m^{1/4} phi(q(r)) identically. r may be negative
// for d = 1, where the prefactor exponent is 0 (even) or 1 (odd).
double radial(const BoundState& state, double r);

// R with its first two r-derivatives (exact jet propagation).
std::array<double, 3> radial_jet(const BoundState& state, double r);

// norm_constant * phi at q.
double normalized_phi(const BoundState& state, double q);

// q-interval carrying the state: (0, pi/(2 zeta)) for d >= 2, the symmetric
// interval for d = 1.
std::array<double, 2> q_domain(const BoundState& state);

// Returns a copy whose norm_constant makes int |phi|^2 dq = 1 over the
// q-domain (equivalently int R^2 dr = 1). Idempotent.
BoundState normalize(const BoundState& state);

}  // namespace pdm::analytic
