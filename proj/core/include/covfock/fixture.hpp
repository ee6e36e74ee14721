#pragma once

#include <complex>
#include <string>
#include <vector>

#include "covfock/basis.hpp"
#include "covfock/irrep_label.hpp"

namespace covfock {

/// Exact surd coefficient sign * i^{i_pow} * num / sqrt(den_sq).
struct SurdCoeff {
  int num = 0;
  int den_sq = 1;
  int i_pow = 0;
  int sign = 1;

  std::complex<double> value() const;
};

struct FixtureTerm {
  IrrepLabel label;
  SurdCoeff coeff;
};

struct FixtureEntry {
  FockIndex fock;
  std::vector<FixtureTerm> terms;
};

/// Loads the golden decomposition table (UTF-8 JSON list of entries with
/// "fock": [n1,n2,n3,n4] and "terms" of {"label": [n,c,j,m], "coeff":
/// {num, den_sq, i_pow, sign}}).  Throws std::runtime_error on missing
/// files and std::invalid_argument on malformed content.
std::vector<FixtureEntry> load_fixture(const std::string& path);

}  // namespace covfock
