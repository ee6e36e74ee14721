#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <tuple>

#include "covfock/basis.hpp"

using namespace covfock;

TEST_CASE("level 1 ordering anchor") {
  auto basis = make_basis(2);
  // The golden output format depends on this exact order.
  CHECK(basis->state_at(1) == FockIndex{1, 0, 0, 0});
  CHECK(basis->state_at(2) == FockIndex{0, 1, 0, 0});
  CHECK(basis->state_at(3) == FockIndex{0, 0, 1, 0});
  CHECK(basis->state_at(4) == FockIndex{0, 0, 0, 1});
}

TEST_CASE("descending lex within a level") {
  auto basis = make_basis(2);
  // Level 2 starts at (2,0,0,0) and ends at (0,0,0,2).
  CHECK(basis->state_at(5) == FockIndex{2, 0, 0, 0});
  CHECK(basis->state_at(6) == FockIndex{1, 1, 0, 0});
  CHECK(basis->state_at(7) == FockIndex{1, 0, 1, 0});
  CHECK(basis->state_at(8) == FockIndex{1, 0, 0, 1});
  CHECK(basis->state_at(9) == FockIndex{0, 2, 0, 0});
  CHECK(basis->state_at(14) == FockIndex{0, 0, 0, 2});
  for (std::size_t i = basis->level_offset(2); i + 1 < basis->size(); ++i) {
    const FockIndex& a = basis->state_at(i);
    const FockIndex& b = basis->state_at(i + 1);
    const bool later = std::tuple{b.n1, b.n2, b.n3, b.n4} <
                       std::tuple{a.n1, a.n2, a.n3, a.n4};
    CHECK(later);
  }
}

TEST_CASE("state counts are simplex numbers") {
  // C(level+3, 3) per level, C(n_max+4, 4) in total.
  const std::size_t per_level[7] = {1, 4, 10, 20, 35, 56, 84};
  for (int n = 0; n <= 6; ++n) {
    CHECK(TruncatedBasis::states_in_level(n) == per_level[n]);
  }
  CHECK(TruncatedBasis::states_through_level(6) == 210);
  auto basis = make_basis(6);
  CHECK(basis->size() == 210);
  std::size_t offset = 0;
  for (int n = 0; n <= 6; ++n) {
    CHECK(basis->level_offset(n) == offset);
    CHECK(basis->level_size(n) == per_level[n]);
    offset += per_level[n];
  }
}

TEST_CASE("index round trip") {
  auto basis = make_basis(5);
  for (std::size_t i = 0; i < basis->size(); ++i) {
    const FockIndex idx = basis->state_at(i);
    CHECK(basis->index_of(idx) == i);
    CHECK(basis->level_of(i) == idx.level());
    CHECK(basis->contains(idx));
  }
  CHECK_FALSE(basis->contains(FockIndex{6, 0, 0, 0}));
  CHECK_FALSE(basis->contains(FockIndex{-1, 0, 0, 1}));
  CHECK_THROWS_AS((void)basis->index_of(FockIndex{6, 0, 0, 0}), std::out_of_range);
}

TEST_CASE("string round trip") {
  CHECK(to_string(FockIndex{1, 0, 2, 3}) == "1,0,2;3");
  CHECK(parse_fock_index("1,0,2;3") == FockIndex{1, 0, 2, 3});
  CHECK(parse_fock_index("0,0,0;0") == FockIndex{});
  CHECK_THROWS_AS(parse_fock_index("1,2,3,4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fock_index("1,2;3;4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fock_index("a,b,c;d"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fock_index("1,2,-3;4"), std::invalid_argument);
}

TEST_CASE("occupation accessors") {
  const FockIndex idx{1, 2, 3, 4};
  CHECK(idx.occupation(1) == 1);
  CHECK(idx.occupation(4) == 4);
  CHECK(idx.with_occupation(2, 7) == FockIndex{1, 7, 3, 4});
  CHECK_THROWS_AS(idx.with_occupation(2, -1), std::invalid_argument);
  CHECK_THROWS_AS((void)idx.occupation(5), std::invalid_argument);
}

TEST_CASE("truncation cap") {
  CHECK_THROWS_AS(make_basis(13), std::length_error);
  CHECK_NOTHROW(make_basis(12));
  CHECK(make_basis(0)->size() == 1);
}
