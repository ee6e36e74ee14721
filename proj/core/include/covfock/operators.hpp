#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <set>
#include <utility>

#include "covfock/basis.hpp"

namespace covfock {

using Complex = std::complex<double>;

/// Coefficient vector over a truncated basis, graded-lex component order.
class StateVector {
 public:
  StateVector(BasisPtr basis, Eigen::VectorXcd coeffs);

  static StateVector zero(const BasisPtr& basis);
  static StateVector basis_state(const BasisPtr& basis, const FockIndex& idx);

  const BasisPtr& basis() const { return basis_; }
  std::size_t dim() const { return static_cast<std::size_t>(coeffs_.size()); }
  const Eigen::VectorXcd& coeffs() const { return coeffs_; }
  Eigen::VectorXcd& coeffs() { return coeffs_; }
  Complex operator[](std::size_t i) const { return coeffs_[static_cast<Eigen::Index>(i)]; }

  StateVector& operator+=(const StateVector& rhs);
  StateVector& operator-=(const StateVector& rhs);
  StateVector& operator*=(Complex s);
  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  friend StateVector operator*(Complex s, StateVector v) { return v *= s; }

 private:
  BasisPtr basis_;
  Eigen::VectorXcd coeffs_;
};

/// Complex operator on the truncated basis, stored block-sparse by total
/// level: key (row_level, col_level) -> dense block.  The set of level
/// shifts row-col doubles as the block-structure metadata (0 for level
/// preserving, -1/+1 for ladders, mixed for positions and momenta).
class OperatorMatrix {
 public:
  using Block = Eigen::MatrixXcd;
  using BlockKey = std::pair<int, int>;  // (row_level, col_level)

  OperatorMatrix() = default;
  explicit OperatorMatrix(BasisPtr basis) : basis_(std::move(basis)) {}

  static OperatorMatrix identity(const BasisPtr& basis);

  const BasisPtr& basis() const { return basis_; }
  std::size_t dim() const { return basis_ ? basis_->size() : 0; }

  const std::map<BlockKey, Block>& blocks() const { return blocks_; }
  bool has_block(int row_level, int col_level) const;
  const Block* block(int row_level, int col_level) const;  // nullptr if absent
  Block& mutable_block(int row_level, int col_level);      // creates zeros

  std::set<int> level_shifts() const;
  bool is_level_preserving() const;

  Complex entry(std::size_t row, std::size_t col) const;
  Eigen::MatrixXcd dense() const;
  Eigen::MatrixXcd level_block(int level) const;  // (level, level) block, dense

  StateVector apply(const StateVector& v) const;

  OperatorMatrix adjoint() const;
  OperatorMatrix& operator+=(const OperatorMatrix& rhs);
  OperatorMatrix& operator-=(const OperatorMatrix& rhs);
  OperatorMatrix& operator*=(Complex s);

  friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
  friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }
  friend OperatorMatrix operator*(Complex s, OperatorMatrix m) { return m *= s; }
  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);

  double max_abs() const;
  /// Max |entry| over blocks with both row and column level <= max_level.
  double max_abs_within_levels(int max_level) const;

 private:
  BasisPtr basis_;
  std::map<BlockKey, Block> blocks_;
};

enum class LadderKind { Lowering, Raising };

/// a_axis or adag_axis with elements sqrt(2*hbar*n); raising out of the top
/// level is projected away.
OperatorMatrix ladder_matrix(const BasisPtr& basis, int axis, LadderKind kind,
                             double hbar = 1.0);
/// N_axis = adag*a/(2*hbar); diagonal with entry n_axis.
OperatorMatrix number_matrix(const BasisPtr& basis, int axis, double hbar = 1.0);
OperatorMatrix total_number_matrix(const BasisPtr& basis, double hbar = 1.0);
/// X_axis = (a + adag)/2.
OperatorMatrix position_matrix(const BasisPtr& basis, int axis, double hbar = 1.0);
/// P_axis = (a - adag)/(2i).
OperatorMatrix momentum_matrix(const BasisPtr& basis, int axis, double hbar = 1.0);

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

}  // namespace covfock
