#include "covfock/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace covfock {

namespace {

void require_same_basis(const BasisPtr& a, const BasisPtr& b) {
  if (!a || !b || !same_basis(*a, *b)) {
    throw std::invalid_argument("operands live on different bases");
  }
}

}  // namespace

StateVector::StateVector(BasisPtr basis, Eigen::VectorXcd coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (!basis_ || static_cast<std::size_t>(coeffs_.size()) != basis_->size()) {
    throw std::invalid_argument("coefficient length does not match basis size");
  }
}

StateVector StateVector::zero(const BasisPtr& basis) {
  return StateVector(basis, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->size())));
}

StateVector StateVector::basis_state(const BasisPtr& basis, const FockIndex& idx) {
  StateVector v = zero(basis);
  v.coeffs()[static_cast<Eigen::Index>(basis->index_of(idx))] = 1.0;
  return v;
}

StateVector& StateVector::operator+=(const StateVector& rhs) {
  require_same_basis(basis_, rhs.basis_);
  coeffs_ += rhs.coeffs_;
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& rhs) {
  require_same_basis(basis_, rhs.basis_);
  coeffs_ -= rhs.coeffs_;
  return *this;
}

StateVector& StateVector::operator*=(Complex s) {
  coeffs_ *= s;
  return *this;
}

OperatorMatrix OperatorMatrix::identity(const BasisPtr& basis) {
  OperatorMatrix m(basis);
  for (int level = 0; level <= basis->n_max(); ++level) {
    auto n = static_cast<Eigen::Index>(basis->level_size(level));
    m.blocks_[{level, level}] = Eigen::MatrixXcd::Identity(n, n);
  }
  return m;
}

bool OperatorMatrix::has_block(int row_level, int col_level) const {
  return blocks_.find({row_level, col_level}) != blocks_.end();
}

const OperatorMatrix::Block* OperatorMatrix::block(int row_level, int col_level) const {
  auto it = blocks_.find({row_level, col_level});
  return it == blocks_.end() ? nullptr : &it->second;
}

OperatorMatrix::Block& OperatorMatrix::mutable_block(int row_level, int col_level) {
  if (!basis_) throw std::logic_error("OperatorMatrix has no basis");
  if (row_level < 0 || row_level > basis_->n_max() || col_level < 0 ||
      col_level > basis_->n_max()) {
    throw std::out_of_range("block level out of range");
  }
  auto it = blocks_.find({row_level, col_level});
  if (it == blocks_.end()) {
    it = blocks_
             .emplace(BlockKey{row_level, col_level},
                      Eigen::MatrixXcd::Zero(
                          static_cast<Eigen::Index>(basis_->level_size(row_level)),
                          static_cast<Eigen::Index>(basis_->level_size(col_level))))
             .first;
  }
  return it->second;
}

std::set<int> OperatorMatrix::level_shifts() const {
  std::set<int> shifts;
  for (const auto& [key, block] : blocks_) shifts.insert(key.first - key.second);
  return shifts;
}

bool OperatorMatrix::is_level_preserving() const {
  for (const auto& [key, block] : blocks_) {
    if (key.first != key.second && block.cwiseAbs().maxCoeff() != 0.0) return false;
  }
  return true;
}

Complex OperatorMatrix::entry(std::size_t row, std::size_t col) const {
  int rl = basis_->level_of(row);
  int cl = basis_->level_of(col);
  const Block* b = block(rl, cl);
  if (b == nullptr) return 0.0;
  return (*b)(static_cast<Eigen::Index>(row - basis_->level_offset(rl)),
              static_cast<Eigen::Index>(col - basis_->level_offset(cl)));
}

Eigen::MatrixXcd OperatorMatrix::dense() const {
  auto n = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [key, block] : blocks_) {
    out.block(static_cast<Eigen::Index>(basis_->level_offset(key.first)),
              static_cast<Eigen::Index>(basis_->level_offset(key.second)),
              block.rows(), block.cols()) = block;
  }
  return out;
}

Eigen::MatrixXcd OperatorMatrix::level_block(int level) const {
  auto n = static_cast<Eigen::Index>(basis_->level_size(level));
  const Block* b = block(level, level);
  if (b == nullptr) return Eigen::MatrixXcd::Zero(n, n);
  return *b;
}

StateVector OperatorMatrix::apply(const StateVector& v) const {
  require_same_basis(basis_, v.basis());
  StateVector out = StateVector::zero(v.basis());
  for (const auto& [key, block] : blocks_) {
    auto ro = static_cast<Eigen::Index>(basis_->level_offset(key.first));
    auto co = static_cast<Eigen::Index>(basis_->level_offset(key.second));
    out.coeffs().segment(ro, block.rows()) += block * v.coeffs().segment(co, block.cols());
  }
  return out;
}

OperatorMatrix OperatorMatrix::adjoint() const {
  OperatorMatrix out(basis_);
  for (const auto& [key, block] : blocks_) {
    out.blocks_[{key.second, key.first}] = block.adjoint();
  }
  return out;
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& rhs) {
  require_same_basis(basis_, rhs.basis_);
  for (const auto& [key, block] : rhs.blocks_) {
    auto it = blocks_.find(key);
    if (it == blocks_.end()) {
      blocks_.emplace(key, block);
    } else {
      it->second += block;
    }
  }
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& rhs) {
  require_same_basis(basis_, rhs.basis_);
  for (const auto& [key, block] : rhs.blocks_) {
    auto it = blocks_.find(key);
    if (it == blocks_.end()) {
      blocks_.emplace(key, -block);
    } else {
      it->second -= block;
    }
  }
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(Complex s) {
  for (auto& [key, block] : blocks_) block *= s;
  return *this;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_basis(a.basis_, b.basis_);
  OperatorMatrix out(a.basis_);
  for (const auto& [ka, ba] : a.blocks_) {
    for (const auto& [kb, bb] : b.blocks_) {
      if (ka.second != kb.first) continue;
      OperatorMatrix::BlockKey key{ka.first, kb.second};
      auto it = out.blocks_.find(key);
      if (it == out.blocks_.end()) {
        out.blocks_.emplace(key, ba * bb);
      } else {
        it->second += ba * bb;
      }
    }
  }
  return out;
}

double OperatorMatrix::max_abs() const {
  double out = 0.0;
  for (const auto& [key, block] : blocks_) {
    if (block.size() > 0) out = std::max(out, block.cwiseAbs().maxCoeff());
  }
  return out;
}

double OperatorMatrix::max_abs_within_levels(int max_level) const {
  double out = 0.0;
  for (const auto& [key, block] : blocks_) {
    if (key.first > max_level || key.second > max_level) continue;
    if (block.size() > 0) out = std::max(out, block.cwiseAbs().maxCoeff());
  }
  return out;
}

namespace {

void check_axis(int axis) {
  if (axis < 1 || axis > 4) throw std::invalid_argument("axis must be 1..4");
}

void check_hbar(double hbar) {
  if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be > 0");
}

}  // namespace

OperatorMatrix ladder_matrix(const BasisPtr& basis, int axis, LadderKind kind,
                             double hbar) {
  check_axis(axis);
  check_hbar(hbar);
  OperatorMatrix m(basis);
  for (std::size_t col = 0; col < basis->size(); ++col) {
    const FockIndex& src = basis->state_at(col);
    int n = src.occupation(axis);
    FockIndex dst;
    double amp = 0.0;
    if (kind == LadderKind::Lowering) {
      if (n == 0) continue;
      dst = src.with_occupation(axis, n - 1);
      amp = std::sqrt(2.0 * hbar * n);
    } else {
      dst = src.with_occupation(axis, n + 1);
      if (!basis->contains(dst)) continue;  // projected away above n_max
      amp = std::sqrt(2.0 * hbar * (n + 1));
    }
    std::size_t row = basis->index_of(dst);
    int rl = dst.level();
    int cl = src.level();
    m.mutable_block(rl, cl)(
        static_cast<Eigen::Index>(row - basis->level_offset(rl)),
        static_cast<Eigen::Index>(col - basis->level_offset(cl))) = amp;
  }
  return m;
}

OperatorMatrix number_matrix(const BasisPtr& basis, int axis, double hbar) {
  OperatorMatrix m = ladder_matrix(basis, axis, LadderKind::Raising, hbar) *
                     ladder_matrix(basis, axis, LadderKind::Lowering, hbar);
  m *= Complex(1.0 / (2.0 * hbar));
  return m;
}

OperatorMatrix total_number_matrix(const BasisPtr& basis, double hbar) {
  OperatorMatrix m = number_matrix(basis, 1, hbar);
  for (int axis = 2; axis <= 4; ++axis) m += number_matrix(basis, axis, hbar);
  return m;
}

OperatorMatrix position_matrix(const BasisPtr& basis, int axis, double hbar) {
  OperatorMatrix m = ladder_matrix(basis, axis, LadderKind::Lowering, hbar);
  m += ladder_matrix(basis, axis, LadderKind::Raising, hbar);
  m *= Complex(0.5);
  return m;
}

OperatorMatrix momentum_matrix(const BasisPtr& basis, int axis, double hbar) {
  OperatorMatrix m = ladder_matrix(basis, axis, LadderKind::Lowering, hbar);
  m -= ladder_matrix(basis, axis, LadderKind::Raising, hbar);
  m *= Complex(0.0, -0.5);  // 1/(2i)
  return m;
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a * b - b * a;
}

}  // namespace covfock
