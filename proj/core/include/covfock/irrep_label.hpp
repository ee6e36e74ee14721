#pragma once

#include <string>

namespace covfock {

/// Hyperspherical label |n; c; j, m>: total level n, Casimir label c with
/// c = n+1, n-1, ..., >= 1 (so n+1-c is even and >= 0), angular momentum
/// 0 <= j <= c-1, |m| <= j.
struct IrrepLabel {
  int n = 0;
  int c = 1;
  int j = 0;
  int m = 0;

  bool operator==(const IrrepLabel&) const = default;
};

bool is_valid_label(const IrrepLabel& label);
void validate_label(const IrrepLabel& label);  // throws std::invalid_argument

std::string to_string(const IrrepLabel& label);  // "n;c;j,m"
IrrepLabel parse_irrep_label(const std::string& text);

}  // namespace covfock
