#include "pdm/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pdm/errors.hpp"

namespace pdm {

MassModel MassModel::lorentzian_squared(double zeta) {
  if (!(zeta > 0.0) || !std::isfinite(zeta))
    throw std::invalid_argument("MassModel: zeta must be positive, got " + std::to_string(zeta));
  return MassModel(zeta, MassKind::LorentzianSquared);
}

MassModel MassModel::numeric(double zeta, Callable m, Callable m1, Callable m2) {
  if (!(zeta > 0.0) || !std::isfinite(zeta))
    throw std::invalid_argument("MassModel: zeta must be positive, got " + std::to_string(zeta));
  if (!m || !m1 || !m2)
    throw std::invalid_argument("MassModel: numeric profile needs m, m' and m'' callables");
  MassModel model(zeta, MassKind::Numeric);
  model.m_ = std::move(m);
  model.m1_ = std::move(m1);
  model.m2_ = std::move(m2);
  return model;
}

MassDerivs MassModel::at(double r) const {
  if (kind_ == MassKind::LorentzianSquared) {
    // m   = (1+u^2)^-2,            u = zeta r
    // m'  = -4 zeta u (1+u^2)^-3
    // m'' = 4 zeta^2 (5u^2 - 1) (1+u^2)^-4
    const double u = zeta_ * r;
    const double w = 1.0 + u * u;
    const double w2 = w * w;
    const double inv4 = 1.0 / (w2 * w2);
    return MassDerivs{inv4 * w2, -4.0 * zeta_ * u * inv4 * w, 4.0 * zeta_ * zeta_ * (5.0 * u * u - 1.0) * inv4};
  }
  try {
    return MassDerivs{m_(r), m1_(r), m2_(r)};
  } catch (const std::exception& e) {
    throw EvaluationError(std::string("numeric mass profile failed at r=") + std::to_string(r) + ": " + e.what());
  }
}

QuantumNumbers::QuantumNumbers(int n_r, int ell, int d) : n_r_(n_r), ell_(ell), d_(d) {
  if (n_r < 0) throw std::invalid_argument("QuantumNumbers: n_r must be non-negative");
  if (ell < 0) throw std::invalid_argument("QuantumNumbers: ell must be non-negative");
  if (d < 1) throw std::invalid_argument("QuantumNumbers: dimension must be >= 1");
  if (d == 1) throw std::invalid_argument("QuantumNumbers: dimension 1 requires an explicit parity");
}

QuantumNumbers::QuantumNumbers(int n_r, Parity parity) : n_r_(n_r), ell_(0), d_(1), parity_(parity) {
  if (n_r < 0) throw std::invalid_argument("QuantumNumbers: n_r must be non-negative");
}

HalfInt QuantumNumbers::ell_d() const {
  if (d_ == 1) return HalfInt(*parity_ == Parity::Even ? -1 : 0);
  return HalfInt::from_twice(2 * ell_ + d_ - 3);
}

}  // namespace pdm
