#include "covfock/irrep_label.hpp"

#include <sstream>
#include <stdexcept>

namespace covfock {

bool is_valid_label(const IrrepLabel& label) {
  return label.n >= 0 && label.c >= 1 && label.c <= label.n + 1 &&
         (label.n + 1 - label.c) % 2 == 0 && label.j >= 0 &&
         label.j <= label.c - 1 && label.m >= -label.j && label.m <= label.j;
}

void validate_label(const IrrepLabel& label) {
  if (!is_valid_label(label)) {
    throw std::invalid_argument("invalid irrep label " + to_string(label));
  }
}

std::string to_string(const IrrepLabel& label) {
  std::ostringstream os;
  os << label.n << ';' << label.c << ';' << label.j << ',' << label.m;
  return os.str();
}

IrrepLabel parse_irrep_label(const std::string& text) {
  IrrepLabel label;
  char c1 = 0, c2 = 0, c3 = 0;
  std::istringstream is(text);
  if (!(is >> label.n >> c1 >> label.c >> c2 >> label.j >> c3 >> label.m) ||
      c1 != ';' || c2 != ';' || c3 != ',' || !(is >> std::ws).eof()) {
    throw std::invalid_argument("bad irrep label '" + text + "', expected n;c;j,m");
  }
  validate_label(label);
  return label;
}

}  // namespace covfock
