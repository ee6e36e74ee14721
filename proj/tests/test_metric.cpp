#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "covfock/lorentz.hpp"
#include "covfock/metric.hpp"

using namespace covfock;
using namespace std::complex_literals;

TEST_CASE("parity operator is diagonal (-1)^{n4}") {
  auto basis = make_basis(3);
  auto p4 = parity4_matrix(basis);
  for (std::size_t i = 0; i < basis->size(); ++i) {
    const double want = basis->state_at(i).n4 % 2 == 0 ? 1.0 : -1.0;
    CHECK(p4.entry(i, i) == Complex(want, 0.0));
  }
  CHECK((p4 * p4 - OperatorMatrix::identity(basis)).max_abs() == 0.0);
  CHECK((p4.adjoint() - p4).max_abs() == 0.0);
}

TEST_CASE("inner products") {
  auto basis = make_basis(2);
  auto v = StateVector::basis_state(basis, FockIndex{0, 0, 1, 0});
  auto w = StateVector::basis_state(basis, FockIndex{0, 0, 0, 1});
  CHECK(unitary_inner(v, v) == Complex(1.0, 0.0));
  CHECK(pseudo_inner(v, v) == Complex(1.0, 0.0));
  CHECK(pseudo_inner(w, w) == Complex(-1.0, 0.0));
  CHECK(pseudo_inner(v, w) == Complex(0.0, 0.0));
  // Conjugate linearity in the first slot.
  auto u = v + 2.0i * w;
  CHECK(std::abs(pseudo_inner(u, u) - Complex(1.0 - 4.0, 0.0)) < 1e-15);
}

TEST_CASE("norm classification") {
  auto basis = make_basis(2);
  auto space = StateVector::basis_state(basis, FockIndex{0, 0, 1, 0});
  auto time = StateVector::basis_state(basis, FockIndex{0, 0, 0, 1});

  auto cls = classify(space);
  CHECK(cls.kind == NormKind::Spacelike);
  CHECK(cls.pseudo_normalizable);
  CHECK(cls.pseudo_norm == doctest::Approx(1.0));

  cls = classify(time);
  CHECK(cls.kind == NormKind::Timelike);
  CHECK(cls.pseudo_normalizable);
  CHECK(cls.pseudo_norm == doctest::Approx(-1.0));

  auto null = space + time;
  cls = classify(null);
  CHECK(cls.kind == NormKind::Lightlike);
  CHECK_FALSE(cls.pseudo_normalizable);
  CHECK(std::abs(cls.pseudo_norm) < 1e-15);
  CHECK(cls.unitary_norm == doctest::Approx(2.0));

  // Classification is invariant under rescaling.
  auto scaled = Complex(1e-8, 0.0) * null;
  CHECK(classify(scaled).kind == NormKind::Lightlike);
  auto big = Complex(1e8, 0.0) * space;
  CHECK(classify(big).kind == NormKind::Spacelike);

  CHECK(to_string(NormKind::Spacelike) == "spacelike");
  CHECK(to_string(NormKind::Timelike) == "timelike");
  CHECK(to_string(NormKind::Lightlike) == "lightlike");
}

TEST_CASE("boosts preserve the pseudo metric but not the unitary one") {
  auto basis = make_basis(4);
  const double alpha = 0.3;
  auto lam = finite_transform(boost_generator(basis, 3), alpha);
  const auto report = invariance_check(lam);
  CHECK(report.pseudo_metric_deviation < 1e-11);
  CHECK(report.unitary_deviation > 0.1);

  auto space = StateVector::basis_state(basis, FockIndex{0, 0, 1, 0});
  auto bs = lam.apply(space);
  const double grown =
      std::cosh(alpha) * std::cosh(alpha) + std::sinh(alpha) * std::sinh(alpha);
  CHECK(std::abs(pseudo_inner(bs, bs) - Complex(1.0, 0.0)) < 1e-13);
  CHECK(std::abs(unitary_inner(bs, bs) - Complex(grown, 0.0)) < 1e-13);
  // The boosted spacelike state stays pseudo normalizable.
  CHECK(classify(bs).kind == NormKind::Spacelike);
}

TEST_CASE("rotations are unitary and pseudo unitary") {
  auto basis = make_basis(3);
  auto rot = finite_transform(rotation_generator(basis, 2, 3), 0.7);
  const auto report = invariance_check(rot);
  CHECK(report.pseudo_metric_deviation < 1e-13);
  CHECK(report.unitary_deviation < 1e-13);
}

TEST_CASE("generators are pseudo hermitian, plain ladders are not") {
  auto basis = make_basis(3);
  for (const auto& label : all_generator_labels()) {
    CHECK(pseudo_hermiticity_deviation(generator_matrix(basis, label)) < 1e-14);
  }
  auto a4 = ladder_matrix(basis, 4, LadderKind::Lowering);
  CHECK(pseudo_hermiticity_deviation(a4) > 0.5);
}

TEST_CASE("identity transform has zero deviations") {
  auto basis = make_basis(2);
  const auto report = invariance_check(OperatorMatrix::identity(basis));
  CHECK(report.pseudo_metric_deviation == 0.0);
  CHECK(report.unitary_deviation == 0.0);
}
