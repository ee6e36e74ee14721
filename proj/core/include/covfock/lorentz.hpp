#pragma once

#include <array>
#include <string>
#include <vector>

#include "covfock/operators.hpp"

namespace covfock {

/// Metric signature (-,+,+,+); index 0 is time.
inline constexpr std::array<double, 4> kEta = {-1.0, 1.0, 1.0, 1.0};

struct GeneratorLabel {
  enum class Kind { Rotation, Boost };
  Kind kind = Kind::Rotation;
  int i = 1;  // rotation: first spatial axis; boost: boosted spatial axis
  int j = 2;  // rotation: second spatial axis; unused for boosts

  bool operator==(const GeneratorLabel&) const = default;
};

/// J12, J13, J23, J01, J02, J03 in this order.
std::vector<GeneratorLabel> all_generator_labels();
std::string to_string(const GeneratorLabel& label);

/// J_ij = X_i P_j - X_j P_i, assembled in normal-ordered ladder form
/// (adag_i a_j - adag_j a_i)/(2i) so every retained level block equals the
/// projection of the exact operator.  Hermitian, level preserving.
OperatorMatrix rotation_generator(const BasisPtr& basis, int i, int j,
                                  double hbar = 1.0);

/// J_0i = i (X_4 P_i - X_i P_4) = (adag_4 a_i - adag_i a_4)/2.
/// Anti-Hermitian, level preserving.
OperatorMatrix boost_generator(const BasisPtr& basis, int i, double hbar = 1.0);

OperatorMatrix generator_matrix(const BasisPtr& basis, const GeneratorLabel& label,
                                double hbar = 1.0);

/// Signed J_{mu nu} for Minkowski indices 0..3; zero matrix when mu == nu.
OperatorMatrix lorentz_generator(const BasisPtr& basis, int mu, int nu,
                                 double hbar = 1.0);

/// Minkowski position X_mu: X_0 = i*X4hat, X_i = Xihat.  Same for momentum.
OperatorMatrix minkowski_position(const BasisPtr& basis, int mu, double hbar = 1.0);
OperatorMatrix minkowski_momentum(const BasisPtr& basis, int mu, double hbar = 1.0);

/// exp(i*alpha*G/hbar), exponentiated per level block.  Blocks of dimension
/// <= 500 go through a dense eigendecomposition; larger ones fall back to
/// scaling and squaring.  Requires a level-preserving generator.
OperatorMatrix finite_transform(const OperatorMatrix& generator, double alpha,
                                double hbar = 1.0);

struct FiniteTransform {
  GeneratorLabel label;
  double alpha = 0.0;
  OperatorMatrix matrix;
};

FiniteTransform make_transform(const BasisPtr& basis, const GeneratorLabel& label,
                               double alpha, double hbar = 1.0);

/// Level-1 block of a finite transform, conjugated by diag(i^{n4}) and
/// reordered to Minkowski (t, x1, x2, x3) row/column order.  For group
/// transforms the result is real up to round-off.
Eigen::Matrix4cd phase_rotated_level1(const OperatorMatrix& transform);

/// C = J12^2 + J13^2 + J23^2 - J01^2 - J02^2 - J03^2 (explicit sign table
/// from raising indices with eta).  Hermitian, level preserving; level-n
/// eigenvalues are hbar^2 (c^2 - 1) with multiplicity c^2 for
/// c = n+1, n-1, ..., >= 1.
OperatorMatrix casimir_matrix(const BasisPtr& basis, double hbar = 1.0);

struct AlgebraCheck {
  std::string relation;
  double max_deviation = 0.0;
};

/// Commutator table of the ten generators plus their action on Minkowski
/// positions/momenta, the canonical pairs, and the number-operator
/// decomposition.  Identities touched by truncation ([X,P]-type) are
/// measured on interior levels only.
std::vector<AlgebraCheck> verify_algebra(const BasisPtr& basis, double hbar = 1.0);

}  // namespace covfock
