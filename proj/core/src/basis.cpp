#include "covfock/basis.hpp"

#include <sstream>
#include <stdexcept>

namespace covfock {

int FockIndex::occupation(int axis) const {
  switch (axis) {
    case 1: return n1;
    case 2: return n2;
    case 3: return n3;
    case 4: return n4;
    default: throw std::invalid_argument("FockIndex axis must be 1..4");
  }
}

FockIndex FockIndex::with_occupation(int axis, int value) const {
  if (value < 0) throw std::invalid_argument("occupation number must be >= 0");
  FockIndex out = *this;
  switch (axis) {
    case 1: out.n1 = value; break;
    case 2: out.n2 = value; break;
    case 3: out.n3 = value; break;
    case 4: out.n4 = value; break;
    default: throw std::invalid_argument("FockIndex axis must be 1..4");
  }
  return out;
}

std::string to_string(const FockIndex& idx) {
  std::ostringstream os;
  os << idx.n1 << ',' << idx.n2 << ',' << idx.n3 << ';' << idx.n4;
  return os.str();
}

FockIndex parse_fock_index(const std::string& text) {
  FockIndex idx;
  char c1 = 0, c2 = 0, c3 = 0;
  std::istringstream is(text);
  if (!(is >> idx.n1 >> c1 >> idx.n2 >> c2 >> idx.n3 >> c3 >> idx.n4) ||
      c1 != ',' || c2 != ',' || c3 != ';' || !(is >> std::ws).eof()) {
    throw std::invalid_argument("bad Fock index '" + text +
                                "', expected n1,n2,n3;n4");
  }
  if (idx.n1 < 0 || idx.n2 < 0 || idx.n3 < 0 || idx.n4 < 0) {
    throw std::invalid_argument("Fock occupations must be >= 0");
  }
  return idx;
}

std::size_t FockIndexHash::operator()(const FockIndex& idx) const {
  std::size_t h = static_cast<std::size_t>(idx.n1);
  h = h * 131 + static_cast<std::size_t>(idx.n2);
  h = h * 131 + static_cast<std::size_t>(idx.n3);
  h = h * 131 + static_cast<std::size_t>(idx.n4);
  return h;
}

namespace {

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t out = 1;
  for (int i = 1; i <= k; ++i) {
    out = out * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  }
  return out;
}

}  // namespace

TruncatedBasis::TruncatedBasis(int n_max, int level_cap) : n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  if (level_cap < 0 || n_max > level_cap) {
    throw std::length_error("n_max exceeds the configured level cap");
  }
  states_.reserve(states_through_level(n_max));
  level_offsets_.reserve(static_cast<std::size_t>(n_max) + 2);
  for (int level = 0; level <= n_max; ++level) {
    level_offsets_.push_back(states_.size());
    for (int a = level; a >= 0; --a)
      for (int b = level - a; b >= 0; --b)
        for (int c = level - a - b; c >= 0; --c)
          states_.push_back(FockIndex{a, b, c, level - a - b - c});
  }
  level_offsets_.push_back(states_.size());
  index_.reserve(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

const FockIndex& TruncatedBasis::state_at(std::size_t i) const {
  if (i >= states_.size()) throw std::out_of_range("basis index out of range");
  return states_[i];
}

std::size_t TruncatedBasis::index_of(const FockIndex& idx) const {
  auto it = index_.find(idx);
  if (it == index_.end()) {
    throw std::out_of_range("state " + to_string(idx) + " not in basis");
  }
  return it->second;
}

bool TruncatedBasis::contains(const FockIndex& idx) const {
  return index_.find(idx) != index_.end();
}

int TruncatedBasis::level_of(std::size_t i) const { return state_at(i).level(); }

std::size_t TruncatedBasis::level_offset(int level) const {
  if (level < 0 || level > n_max_) throw std::out_of_range("level out of range");
  return level_offsets_[static_cast<std::size_t>(level)];
}

std::size_t TruncatedBasis::level_size(int level) const {
  if (level < 0 || level > n_max_) throw std::out_of_range("level out of range");
  return level_offsets_[static_cast<std::size_t>(level) + 1] -
         level_offsets_[static_cast<std::size_t>(level)];
}

std::size_t TruncatedBasis::states_in_level(int level) {
  return binomial(level + 3, 3);
}

std::size_t TruncatedBasis::states_through_level(int n_max) {
  return binomial(n_max + 4, 4);
}

BasisPtr make_basis(int n_max, int level_cap) {
  return std::make_shared<TruncatedBasis>(n_max, level_cap);
}

bool same_basis(const TruncatedBasis& a, const TruncatedBasis& b) {
  return &a == &b || a.n_max() == b.n_max();
}

}  // namespace covfock
