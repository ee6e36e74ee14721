#pragma once

#include <vector>

namespace covfock {

enum class QuadKind {
  GaussHermite,     // weight exp(-y^2) on R
  GaussLegendre,    // weight 1 on [-1, 1]
  GaussChebyshev2,  // weight sqrt(1 - u^2) on [-1, 1]
  GaussLaguerre,    // weight t^alpha exp(-t) on [0, inf)
  Trapezoid,        // uniform nodes on [0, 2pi), equal weights
};

struct QuadratureRule {
  QuadKind kind = QuadKind::GaussLegendre;
  double alpha = 0.0;  // Laguerre exponent, unused otherwise
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double out = 0.0;
    for (std::size_t q = 0; q < nodes.size(); ++q) out += weights[q] * f(nodes[q]);
    return out;
  }
};

/// Gauss rules are generated by Golub-Welsch (symmetric tridiagonal Jacobi
/// matrix) except Chebyshev2, which has closed-form nodes and weights.
/// Each Gauss rule of order q integrates polynomials times its weight
/// function exactly up to degree 2q-1; the trapezoid rule integrates
/// trigonometric polynomials of degree <= q-1 exactly over the period.
QuadratureRule gauss_hermite(int q);
QuadratureRule gauss_legendre(int q);
QuadratureRule gauss_chebyshev2(int q);
QuadratureRule gauss_laguerre(int q, double alpha);
QuadratureRule periodic_trapezoid(int q);

}  // namespace covfock
