#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "covfock/coordinates.hpp"
#include "covfock/polynomials.hpp"
#include "covfock/quadrature.hpp"
#include "covfock/wavefunctions.hpp"

using namespace covfock;

namespace {
constexpr double kPi = std::numbers::pi;

// Five-point central differences, an oracle independent of the analytic
// derivative rules used in the library.
template <typename F>
double fd1(F f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

template <typename F>
double fd2(F f, double x, double h) {
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) -
          f(x - 2 * h)) /
         (12 * h * h);
}
}  // namespace

TEST_CASE("normalized hermite explicit low orders") {
  const double y = 0.7;
  CHECK(hermite_tilde(0, y) == doctest::Approx(1.0));
  CHECK(hermite_tilde(1, y) == doctest::Approx(std::sqrt(2.0) * y));
  // H2 = 4y^2 - 2 over sqrt(2^2 2!) = sqrt(8).
  CHECK(hermite_tilde(2, y) ==
        doctest::Approx((4 * y * y - 2) / std::sqrt(8.0)).epsilon(1e-14));
  CHECK(hermite_tilde(3, y) ==
        doctest::Approx((8 * y * y * y - 12 * y) / std::sqrt(48.0)).epsilon(1e-14));
}

TEST_CASE("normalized hermite orthonormality") {
  auto rule = gauss_hermite(10);
  for (int n = 0; n <= 6; ++n) {
    for (int m = n; m <= 6; ++m) {
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) {
        acc += rule.weights[i] * hermite_tilde(n, rule.nodes[i]) *
               hermite_tilde(m, rule.nodes[i]);
      }
      acc /= std::sqrt(kPi);
      CHECK(std::abs(acc - (n == m ? 1.0 : 0.0)) < 1e-13);
    }
  }
}

TEST_CASE("laguerre explicit low orders") {
  const double t = 0.8;
  CHECK(laguerre(0, 1.0, t) == doctest::Approx(1.0));
  CHECK(laguerre(1, 1.0, t) == doctest::Approx(2.0 - t));
  CHECK(laguerre(2, 1.0, t) == doctest::Approx(3.0 - 3.0 * t + 0.5 * t * t));
  CHECK(laguerre(1, 3.0, t) == doctest::Approx(4.0 - t));
}

TEST_CASE("gegenbauer explicit low orders") {
  const double u = -0.4;
  CHECK(gegenbauer(0, 2.0, u) == doctest::Approx(1.0));
  CHECK(gegenbauer(1, 2.0, u) == doctest::Approx(4.0 * u));
  // C2^l = 2 l (l+1) u^2 - l.
  CHECK(gegenbauer(2, 2.0, u) == doctest::Approx(12.0 * u * u - 2.0));
  CHECK(gegenbauer(2, 1.0, u) == doctest::Approx(4.0 * u * u - 1.0));
}

TEST_CASE("associated legendre includes condon shortley") {
  const double u = 0.3;
  const double s = std::sqrt(1 - u * u);
  CHECK(assoc_legendre(1, 0, u) == doctest::Approx(u));
  CHECK(assoc_legendre(1, 1, u) == doctest::Approx(-s));
  CHECK(assoc_legendre(2, 1, u) == doctest::Approx(-3.0 * u * s));
  CHECK(assoc_legendre(2, 2, u) == doctest::Approx(3.0 * (1 - u * u)));
  CHECK(assoc_legendre(3, 0, u) == doctest::Approx(0.5 * (5 * u * u * u - 3 * u)));
}

TEST_CASE("spherical harmonics explicit values") {
  const double theta = 1.1;
  const double phi = 0.6;
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  auto y00 = spherical_Y(0, 0, theta, phi);
  CHECK(y00.real() == doctest::Approx(1.0 / std::sqrt(4 * kPi)));
  CHECK(y00.imag() == 0.0);
  auto y10 = spherical_Y(1, 0, theta, phi);
  CHECK(y10.real() == doctest::Approx(std::sqrt(3 / (4 * kPi)) * ct));
  auto y11 = spherical_Y(1, 1, theta, phi);
  const std::complex<double> want11 =
      -std::sqrt(3 / (8 * kPi)) * st * std::exp(std::complex<double>(0, phi));
  CHECK(std::abs(y11 - want11) < 1e-14);
  // Y_{j,-m} = (-1)^m conj(Y_{j,m}).
  auto y1m1 = spherical_Y(1, -1, theta, phi);
  CHECK(std::abs(y1m1 - (-std::conj(y11))) < 1e-15);
  auto y22 = spherical_Y(2, 2, theta, phi);
  const std::complex<double> want22 = std::sqrt(15 / (32 * kPi)) * st * st *
                                      std::exp(std::complex<double>(0, 2 * phi));
  CHECK(std::abs(y22 - want22) < 1e-14);
}

TEST_CASE("spherical harmonics orthonormality on the quadrature grid") {
  auto vrule = gauss_legendre(8);      // v = cos(theta)
  auto prule = periodic_trapezoid(9);  // phi
  for (int j1 = 0; j1 <= 3; ++j1) {
    for (int m1 = -j1; m1 <= j1; ++m1) {
      for (int j2 = j1; j2 <= 3; ++j2) {
        for (int m2 = -j2; m2 <= j2; ++m2) {
          std::complex<double> acc = 0.0;
          for (std::size_t a = 0; a < vrule.size(); ++a) {
            const double theta = std::acos(vrule.nodes[a]);
            for (std::size_t b = 0; b < prule.size(); ++b) {
              acc += vrule.weights[a] * prule.weights[b] *
                     std::conj(spherical_Y(j1, m1, theta, prule.nodes[b])) *
                     spherical_Y(j2, m2, theta, prule.nodes[b]);
            }
          }
          const double want = j1 == j2 && m1 == m2 ? 1.0 : 0.0;
          CHECK(std::abs(acc - want) < 1e-13);
        }
      }
    }
  }
}

TEST_CASE("coordinate charts round trip") {
  const CartesianPoint pts[] = {{0.3, -0.4, 1.2, 0.5},
                                {1.0, 0.0, 0.0, 0.0},
                                {0.0, 0.0, 0.0, -2.0},
                                {-0.7, 0.2, -0.1, 0.9}};
  for (const auto& p : pts) {
    const HyperPoint h = cart_to_hyper(p);
    const CartesianPoint back = hyper_to_cart(h);
    CHECK(back.x1 == doctest::Approx(p.x1).epsilon(1e-13));
    CHECK(back.x2 == doctest::Approx(p.x2).epsilon(1e-13));
    CHECK(back.x3 == doctest::Approx(p.x3).epsilon(1e-13));
    CHECK(back.x4 == doctest::Approx(p.x4).epsilon(1e-13));
    CHECK(h.r >= 0.0);
    CHECK(std::abs(h.u) <= 1.0);
    CHECK(h.phi >= 0.0);
    CHECK(h.phi < 2 * kPi);
  }
  const HyperPoint origin = cart_to_hyper(CartesianPoint{0, 0, 0, 0});
  CHECK(origin.r == 0.0);
  // Pure time direction: u = +-1.
  const HyperPoint timeish = cart_to_hyper(CartesianPoint{0, 0, 0, -2.0});
  CHECK(timeish.u == doctest::Approx(-1.0));
  CHECK(timeish.r == doctest::Approx(2.0));
}

TEST_CASE("fock wavefunction ground and excited") {
  const FockIndex vac{};
  CHECK(fock_wavefunction(vac, CartesianPoint{0, 0, 0, 0}) ==
        doctest::Approx(1.0 / kPi));
  // hbar scaling of the envelope.
  const double hbar = 2.0;
  CHECK(fock_wavefunction(vac, CartesianPoint{0, 0, 0, 0}, hbar) ==
        doctest::Approx(1.0 / (kPi * hbar)));
  const CartesianPoint p{0.5, -0.3, 0.8, 0.2};
  const double rho2 = 0.25 + 0.09 + 0.64 + 0.04;
  const double envelope = std::exp(-rho2 / 2) / kPi;
  CHECK(fock_wavefunction(vac, p) == doctest::Approx(envelope).epsilon(1e-14));
  // One quantum in x2: factor Htilde_1(x2) = sqrt(2) x2.
  CHECK(fock_wavefunction(FockIndex{0, 1, 0, 0}, p) ==
        doctest::Approx(envelope * std::sqrt(2.0) * (-0.3)).epsilon(1e-13));
}

TEST_CASE("cartesian overlaps reproduce kronecker deltas") {
  auto basis = make_basis(3);
  for (std::size_t i = 0; i < basis->size(); ++i) {
    for (std::size_t j = i; j < basis->size(); ++j) {
      const FockIndex a = basis->state_at(i);
      const FockIndex b = basis->state_at(j);
      const double plain = overlap_cartesian(a, b, false, 6);
      CHECK(std::abs(plain - (i == j ? 1.0 : 0.0)) < 1e-13);
      const double flip = overlap_cartesian(a, b, true, 6);
      const double want = i == j ? (a.n4 % 2 == 0 ? 1.0 : -1.0) : 0.0;
      CHECK(std::abs(flip - want) < 1e-13);
    }
  }
  CHECK_THROWS_AS(overlap_cartesian(FockIndex{3, 0, 0, 0}, FockIndex{}, false, 3),
                  std::invalid_argument);
}

TEST_CASE("radial factor explicit forms and normalization") {
  // n=0, c=1: R = sqrt(2) exp(-r^2/2).
  CHECK(radial_R(0, 1, 0.9) ==
        doctest::Approx(std::sqrt(2.0) * std::exp(-0.405)).epsilon(1e-14));
  // n=1, c=2: k=0, R = sqrt(2/2!) r exp(-r^2/2) = r exp(-r^2/2).
  CHECK(radial_R(1, 2, 1.3) ==
        doctest::Approx(1.3 * std::exp(-0.845)).epsilon(1e-14));
  CHECK_THROWS_AS(radial_R(1, 1, 0.5), std::invalid_argument);  // parity broken
  CHECK_THROWS_AS(radial_R(2, 4, 0.5), std::invalid_argument);  // c > n+1

  // integral R^2 r^3 dr = 1, evaluated as (1/2) integral R(sqrt t)^2 t dt.
  // R^2 carries e^{-t}; cancel it against the rule's weight so the
  // remaining integrand is a polynomial the rule integrates exactly.
  auto rule = gauss_laguerre(16, 1.0);
  for (int n = 0; n <= 5; ++n) {
    for (int c = n + 1; c >= 1; c -= 2) {
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) {
        const double t = rule.nodes[i];
        const double value = radial_R(n, c, std::sqrt(t));
        acc += rule.weights[i] * 0.5 * value * value * std::exp(t);
      }
      CHECK(acc == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("u factor explicit forms and normalization") {
  // c=1, j=0: constant sqrt(2/pi).
  CHECK(u_function(1, 0, 0.3) == doctest::Approx(std::sqrt(2 / kPi)).epsilon(1e-13));
  // c=2, j=0: 2 sqrt(2/pi) u.
  CHECK(u_function(2, 0, -0.5) ==
        doctest::Approx(2 * std::sqrt(2 / kPi) * -0.5).epsilon(1e-13));
  // c=2, j=1: sqrt(8/(3 pi)) sqrt(1-u^2).
  CHECK(u_function(2, 1, 0.6) ==
        doctest::Approx(std::sqrt(8 / (3 * kPi)) * 0.8).epsilon(1e-13));
  CHECK_THROWS_AS(u_function(2, 2, 0.1), std::invalid_argument);  // j > c-1

  auto rule = gauss_chebyshev2(12);
  for (int c = 1; c <= 6; ++c) {
    for (int j = 0; j < c; ++j) {
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) {
        const double u = rule.nodes[i];
        // The sqrt(1-u^2) measure lives in the weights.
        const double val = u_function(c, j, u);
        acc += rule.weights[i] * val * val;
      }
      CHECK(acc == doctest::Approx(1.0).epsilon(1e-12));
      // Leading sign convention: positive as u -> 1.
      CHECK(u_function(c, j, 0.999) > 0.0);
    }
  }
}

TEST_CASE("analytic derivatives match finite differences") {
  const double h = 1e-3;
  for (int n = 0; n <= 5; ++n) {
    for (int c = n + 1; c >= 1; c -= 2) {
      for (double r : {0.4, 1.1, 2.3}) {
        const Derivs d = radial_R_derivs(n, c, r);
        auto f = [&](double x) { return radial_R(n, c, x); };
        CHECK(d.value == doctest::Approx(f(r)).epsilon(1e-13));
        CHECK(d.d1 == doctest::Approx(fd1(f, r, h)).epsilon(1e-7));
        CHECK(d.d2 == doctest::Approx(fd2(f, r, h)).epsilon(1e-6));
      }
    }
  }
  for (int c = 1; c <= 6; ++c) {
    for (int j = 0; j < c; ++j) {
      for (double u : {-0.6, 0.1, 0.7}) {
        const Derivs d = u_function_derivs(c, j, u);
        auto f = [&](double x) { return u_function(c, j, x); };
        CHECK(d.value == doctest::Approx(f(u)).epsilon(1e-13));
        CHECK(d.d1 == doctest::Approx(fd1(f, u, h)).epsilon(1e-7));
        CHECK(d.d2 == doctest::Approx(fd2(f, u, h)).epsilon(1e-5));
      }
    }
  }
}

TEST_CASE("ode residuals vanish") {
  for (int c = 1; c <= 7; ++c) {
    for (int j = 0; j < c; ++j) {
      for (double u : {-0.9, -0.3, 0.2, 0.8}) {
        CHECK(ode_residual_U(c, j, u) < 1e-10);
      }
    }
  }
  for (int n = 0; n <= 6; ++n) {
    for (int c = n + 1; c >= 1; c -= 2) {
      for (double r : {0.3, 1.0, 2.5, 4.0}) {
        CHECK(ode_residual_R(n, c, r) < 1e-10);
      }
    }
  }
}

TEST_CASE("irrep wavefunction factorizes") {
  const IrrepLabel label{2, 3, 2, 0};
  const HyperPoint h{1.2, 0.4, 0.9, 2.0};
  const auto got = irrep_wavefunction(label, h);
  const auto want = radial_R(2, 3, 1.2) * u_function(3, 2, 0.4) *
                    spherical_Y(2, 0, 0.9, 2.0);
  CHECK(std::abs(got - want) < 1e-15);
  CHECK_THROWS_AS(irrep_wavefunction(IrrepLabel{2, 2, 0, 0}, h),
                  std::invalid_argument);
}
