#include "covfock/quadrature.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace covfock {

namespace {

void check_order(int q) {
  if (q < 1) throw std::invalid_argument("quadrature order must be >= 1");
}

/// Nodes are eigenvalues of the Jacobi matrix with diagonal a_k and
/// off-diagonal b_k; weights are mu0 times the squared first eigenvector
/// components.
QuadratureRule golub_welsch(QuadKind kind, double alpha, int q,
                            const std::vector<double>& a,
                            const std::vector<double>& b, double mu0) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(q, q);
  for (int k = 0; k < q; ++k) {
    jacobi(k, k) = a[static_cast<std::size_t>(k)];
    if (k + 1 < q) {
      jacobi(k, k + 1) = b[static_cast<std::size_t>(k + 1)];
      jacobi(k + 1, k) = b[static_cast<std::size_t>(k + 1)];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("quadrature eigensolve failed");
  }
  QuadratureRule rule;
  rule.kind = kind;
  rule.alpha = alpha;
  rule.nodes.resize(static_cast<std::size_t>(q));
  rule.weights.resize(static_cast<std::size_t>(q));
  for (int k = 0; k < q; ++k) {
    rule.nodes[static_cast<std::size_t>(k)] = es.eigenvalues()(k);
    double v0 = es.eigenvectors()(0, k);
    rule.weights[static_cast<std::size_t>(k)] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

QuadratureRule gauss_hermite(int q) {
  check_order(q);
  std::vector<double> a(static_cast<std::size_t>(q), 0.0);
  std::vector<double> b(static_cast<std::size_t>(q), 0.0);
  for (int k = 1; k < q; ++k) b[static_cast<std::size_t>(k)] = std::sqrt(k / 2.0);
  return golub_welsch(QuadKind::GaussHermite, 0.0, q, a, b,
                      std::sqrt(std::numbers::pi));
}

QuadratureRule gauss_legendre(int q) {
  check_order(q);
  std::vector<double> a(static_cast<std::size_t>(q), 0.0);
  std::vector<double> b(static_cast<std::size_t>(q), 0.0);
  for (int k = 1; k < q; ++k) {
    b[static_cast<std::size_t>(k)] = k / std::sqrt(4.0 * k * k - 1.0);
  }
  return golub_welsch(QuadKind::GaussLegendre, 0.0, q, a, b, 2.0);
}

QuadratureRule gauss_chebyshev2(int q) {
  check_order(q);
  QuadratureRule rule;
  rule.kind = QuadKind::GaussChebyshev2;
  rule.nodes.resize(static_cast<std::size_t>(q));
  rule.weights.resize(static_cast<std::size_t>(q));
  for (int k = 1; k <= q; ++k) {
    double angle = k * std::numbers::pi / (q + 1);
    // Store ascending like the Golub-Welsch rules.
    rule.nodes[static_cast<std::size_t>(q - k)] = std::cos(angle);
    double s = std::sin(angle);
    rule.weights[static_cast<std::size_t>(q - k)] =
        std::numbers::pi / (q + 1) * s * s;
  }
  return rule;
}

QuadratureRule gauss_laguerre(int q, double alpha) {
  check_order(q);
  if (alpha <= -1.0) throw std::invalid_argument("Laguerre alpha must be > -1");
  std::vector<double> a(static_cast<std::size_t>(q), 0.0);
  std::vector<double> b(static_cast<std::size_t>(q), 0.0);
  for (int k = 0; k < q; ++k) a[static_cast<std::size_t>(k)] = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < q; ++k) {
    b[static_cast<std::size_t>(k)] = std::sqrt(k * (k + alpha));
  }
  return golub_welsch(QuadKind::GaussLaguerre, alpha, q, a, b,
                      std::tgamma(alpha + 1.0));
}

QuadratureRule periodic_trapezoid(int q) {
  check_order(q);
  QuadratureRule rule;
  rule.kind = QuadKind::Trapezoid;
  rule.nodes.resize(static_cast<std::size_t>(q));
  rule.weights.resize(static_cast<std::size_t>(q));
  for (int k = 0; k < q; ++k) {
    rule.nodes[static_cast<std::size_t>(k)] = 2.0 * std::numbers::pi * k / q;
    rule.weights[static_cast<std::size_t>(k)] = 2.0 * std::numbers::pi / q;
  }
  return rule;
}

}  // namespace covfock
