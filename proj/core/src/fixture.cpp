#include "covfock/fixture.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace covfock {

std::complex<double> SurdCoeff::value() const {
  std::complex<double> phase{1.0, 0.0};
  switch (((i_pow % 4) + 4) % 4) {
    case 0: phase = {1.0, 0.0}; break;
    case 1: phase = {0.0, 1.0}; break;
    case 2: phase = {-1.0, 0.0}; break;
    case 3: phase = {0.0, -1.0}; break;
  }
  return static_cast<double>(sign) * phase * static_cast<double>(num) /
         std::sqrt(static_cast<double>(den_sq));
}

std::vector<FixtureEntry> load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("fixture parse error in " + path + ": " + e.what());
  }
  if (!doc.is_array()) {
    throw std::invalid_argument("fixture root must be a JSON array");
  }
  std::vector<FixtureEntry> out;
  out.reserve(doc.size());
  try {
    for (const auto& item : doc) {
      FixtureEntry entry;
      const auto& fock = item.at("fock");
      if (!fock.is_array() || fock.size() != 4) {
        throw std::invalid_argument("fixture 'fock' must have 4 entries");
      }
      entry.fock = FockIndex{fock[0].get<int>(), fock[1].get<int>(),
                             fock[2].get<int>(), fock[3].get<int>()};
      for (const auto& term : item.at("terms")) {
        const auto& label = term.at("label");
        if (!label.is_array() || label.size() != 4) {
          throw std::invalid_argument("fixture 'label' must have 4 entries");
        }
        FixtureTerm ft;
        ft.label = IrrepLabel{label[0].get<int>(), label[1].get<int>(),
                              label[2].get<int>(), label[3].get<int>()};
        validate_label(ft.label);
        if (ft.label.n != entry.fock.level()) {
          throw std::invalid_argument("fixture label level mismatch for state " +
                                      to_string(entry.fock));
        }
        const auto& coeff = term.at("coeff");
        ft.coeff.num = coeff.at("num").get<int>();
        ft.coeff.den_sq = coeff.at("den_sq").get<int>();
        ft.coeff.i_pow = coeff.at("i_pow").get<int>();
        ft.coeff.sign = coeff.at("sign").get<int>();
        if (ft.coeff.den_sq <= 0 || (ft.coeff.sign != 1 && ft.coeff.sign != -1)) {
          throw std::invalid_argument("fixture coefficient out of range");
        }
        entry.terms.push_back(ft);
      }
      out.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("fixture structure error in " + path + ": " +
                                e.what());
  }
  return out;
}

}  // namespace covfock
