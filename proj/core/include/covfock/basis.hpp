#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace covfock {

/// Occupation numbers of the four oscillator modes.  Mode 4 is the timelike
/// one; kets are written |n1,n2,n3;n4>.
struct FockIndex {
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;
  int n4 = 0;

  int level() const { return n1 + n2 + n3 + n4; }

  int occupation(int axis) const;                       // axis in 1..4
  FockIndex with_occupation(int axis, int value) const; // throws if value < 0

  bool operator==(const FockIndex&) const = default;
};

std::string to_string(const FockIndex& idx);   // "n1,n2,n3;n4"
FockIndex parse_fock_index(const std::string& text);

struct FockIndexHash {
  std::size_t operator()(const FockIndex& idx) const;
};

inline constexpr int kDefaultLevelCap = 12;

/// All Fock states with total level <= n_max.  States are ordered by level
/// and, within a level, by descending lexicographic order on (n1,n2,n3,n4),
/// so level 1 reads (1,0,0;0), (0,1,0;0), (0,0,1;0), (0,0,0;1).  Golden
/// output depends on this ordering; do not change it.
class TruncatedBasis {
 public:
  explicit TruncatedBasis(int n_max, int level_cap = kDefaultLevelCap);

  int n_max() const { return n_max_; }
  std::size_t size() const { return states_.size(); }

  const FockIndex& state_at(std::size_t i) const;
  std::size_t index_of(const FockIndex& idx) const;  // throws if outside basis
  bool contains(const FockIndex& idx) const;

  int level_of(std::size_t i) const;
  std::size_t level_offset(int level) const;  // index of first level state
  std::size_t level_size(int level) const;    // C(level+3, 3)

  const std::vector<FockIndex>& states() const { return states_; }

  static std::size_t states_in_level(int level);       // C(level+3, 3)
  static std::size_t states_through_level(int n_max);  // C(n_max+4, 4)

 private:
  int n_max_;
  std::vector<FockIndex> states_;
  std::vector<std::size_t> level_offsets_;
  std::unordered_map<FockIndex, std::size_t, FockIndexHash> index_;
};

using BasisPtr = std::shared_ptr<const TruncatedBasis>;

BasisPtr make_basis(int n_max, int level_cap = kDefaultLevelCap);

/// Two bases with equal n_max enumerate identical state lists.
bool same_basis(const TruncatedBasis& a, const TruncatedBasis& b);

}  // namespace covfock
