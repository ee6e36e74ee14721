#include "covfock/metric.hpp"

#include <cmath>
#include <stdexcept>

namespace covfock {

OperatorMatrix parity4_matrix(const BasisPtr& basis) {
  OperatorMatrix m(basis);
  for (int level = 0; level <= basis->n_max(); ++level) {
    auto& block = m.mutable_block(level, level);
    std::size_t offset = basis->level_offset(level);
    for (std::size_t k = 0; k < basis->level_size(level); ++k) {
      block(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) =
          basis->state_at(offset + k).n4 % 2 == 0 ? 1.0 : -1.0;
    }
  }
  return m;
}

Complex unitary_inner(const StateVector& u, const StateVector& v) {
  if (!same_basis(*u.basis(), *v.basis())) {
    throw std::invalid_argument("inner product operands live on different bases");
  }
  return u.coeffs().dot(v.coeffs());  // Eigen conjugates the first factor
}

Complex pseudo_inner(const StateVector& u, const StateVector& v) {
  return unitary_inner(u, parity4_matrix(v.basis()).apply(v));
}

NormClass classify(const StateVector& v, double tau) {
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
  NormClass out;
  out.pseudo_norm = pseudo_inner(v, v).real();
  out.unitary_norm = unitary_inner(v, v).real();
  double scaled = out.unitary_norm > 0.0 ? out.pseudo_norm / out.unitary_norm : 0.0;
  if (scaled > tau) {
    out.kind = NormKind::Spacelike;
  } else if (scaled < -tau) {
    out.kind = NormKind::Timelike;
  } else {
    out.kind = NormKind::Lightlike;
  }
  out.pseudo_normalizable = out.kind != NormKind::Lightlike;
  return out;
}

std::string to_string(NormKind kind) {
  switch (kind) {
    case NormKind::Spacelike: return "spacelike";
    case NormKind::Timelike: return "timelike";
    case NormKind::Lightlike: return "lightlike";
  }
  return "unknown";
}

InvarianceReport invariance_check(const OperatorMatrix& transform) {
  OperatorMatrix p4 = parity4_matrix(transform.basis());
  OperatorMatrix adj = transform.adjoint();
  InvarianceReport out;
  out.pseudo_metric_deviation = (adj * p4 * transform - p4).max_abs();
  out.unitary_deviation =
      (adj * transform - OperatorMatrix::identity(transform.basis())).max_abs();
  return out;
}

double pseudo_hermiticity_deviation(const OperatorMatrix& generator) {
  OperatorMatrix p4 = parity4_matrix(generator.basis());
  return (generator.adjoint() * p4 - p4 * generator).max_abs();
}

}  // namespace covfock
