#pragma once

#include "covfock/operators.hpp"

namespace covfock {

/// P4: diagonal (-1)^{n4}.  Hermitian, involutive, level preserving.
OperatorMatrix parity4_matrix(const BasisPtr& basis);

/// <u|v>, conjugate linear in the first argument.
Complex unitary_inner(const StateVector& u, const StateVector& v);

/// <<u|v>> = <u|P4|v>.
Complex pseudo_inner(const StateVector& u, const StateVector& v);

enum class NormKind { Spacelike, Timelike, Lightlike };

struct NormClass {
  NormKind kind = NormKind::Lightlike;
  double pseudo_norm = 0.0;   // <<v|v>> (real; the imaginary part is round-off)
  double unitary_norm = 0.0;  // <v|v>
  bool pseudo_normalizable = false;
};

/// Classifies by the sign of the pseudo-norm.  The class is decided on the
/// unit-normalized state (pseudo_norm / unitary_norm vs tau) so that it is
/// invariant under v -> s*v; the reported pseudo_norm stays unscaled.
NormClass classify(const StateVector& v, double tau = 1e-9);

std::string to_string(NormKind kind);

struct InvarianceReport {
  double pseudo_metric_deviation = 0.0;  // max |(L^dag P4 L - P4)_{ij}|
  double unitary_deviation = 0.0;        // max |(L^dag L - 1)_{ij}|
};

InvarianceReport invariance_check(const OperatorMatrix& transform);

/// Pseudo-Hermiticity witness max |(G^dag P4 - P4 G)_{ij}|.
double pseudo_hermiticity_deviation(const OperatorMatrix& generator);

}  // namespace covfock
