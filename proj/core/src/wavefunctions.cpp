#include "covfock/wavefunctions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "covfock/polynomials.hpp"
#include "covfock/quadrature.hpp"

namespace covfock {

namespace {

void check_hbar(double hbar) {
  if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be > 0");
}

/// k = (n+1-c)/2; throws unless 1 <= c <= n+1 with n+1-c even.
int radial_k(int n, int c) {
  if (n < 0 || c < 1 || c > n + 1 || (n + 1 - c) % 2 != 0) {
    throw std::invalid_argument("radial selection rule needs c = n+1, n-1, ..., >= 1");
  }
  return (n + 1 - c) / 2;
}

void check_uj(int c, int j) {
  if (c < 1 || j < 0 || j > c - 1) {
    throw std::invalid_argument("u_function needs c >= 1 and 0 <= j <= c-1");
  }
}

double radial_norm(int n, int c) {
  int k = radial_k(n, c);
  double ratio = 2.0;  // 2 k! / (k+c)!
  for (int i = k + 1; i <= k + c; ++i) ratio /= i;
  return std::sqrt(ratio);
}

}  // namespace

double fock_wavefunction(const FockIndex& idx, const CartesianPoint& p, double hbar) {
  check_hbar(hbar);
  double rt = std::sqrt(hbar);
  double x2 = p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3 + p.x4 * p.x4;
  return 1.0 / (std::numbers::pi * hbar) * std::exp(-x2 / (2.0 * hbar)) *
         hermite_tilde(idx.n1, p.x1 / rt) * hermite_tilde(idx.n2, p.x2 / rt) *
         hermite_tilde(idx.n3, p.x3 / rt) * hermite_tilde(idx.n4, p.x4 / rt);
}

double overlap_cartesian(const FockIndex& a, const FockIndex& b, bool flip_x4,
                         int q) {
  int need = std::max(a.level(), b.level()) + 1;
  if (q < need) {
    throw std::invalid_argument(
        "Gauss-Hermite order too small for exactness: need q >= max(level)+1");
  }
  QuadratureRule rule = gauss_hermite(q);
  // In units y = x/sqrt(hbar) the overlap factorizes into four 1D
  // integrals of Htilde pairs against exp(-y^2); hbar drops out.
  double out = 1.0 / (std::numbers::pi * std::numbers::pi);
  for (int axis = 1; axis <= 4; ++axis) {
    double sign = (flip_x4 && axis == 4) ? -1.0 : 1.0;
    double sum = 0.0;
    for (std::size_t k = 0; k < rule.size(); ++k) {
      double y = rule.nodes[k];
      sum += rule.weights[k] * hermite_tilde(a.occupation(axis), sign * y) *
             hermite_tilde(b.occupation(axis), y);
    }
    out *= sum;
  }
  return out;
}

double radial_R(int n, int c, double r) {
  int k = radial_k(n, c);
  double t = r * r;
  return radial_norm(n, c) * std::exp(-t / 2.0) * std::pow(r, c - 1) *
         laguerre(k, c, t);
}

Derivs radial_R_derivs(int n, int c, double r) {
  int k = radial_k(n, c);
  double t = r * r;
  double p0 = laguerre(k, c, t);
  double p1 = k >= 1 ? -laguerre(k - 1, c + 1.0, t) : 0.0;  // dL_k^c/dt
  double p2 = k >= 2 ? laguerre(k - 2, c + 2.0, t) : 0.0;
  double e = radial_norm(n, c) * std::exp(-t / 2.0);
  auto rpow = [&](int q) { return std::pow(r, q); };

  Derivs d;
  d.value = e * rpow(c - 1) * p0;
  d.d1 = e * (-rpow(c) * p0 + 2.0 * rpow(c) * p1);
  if (c >= 2) d.d1 += e * (c - 1.0) * rpow(c - 2) * p0;
  d.d2 = e * (rpow(c + 1) * p0 - (2.0 * c - 1.0) * rpow(c - 1) * p0 -
              4.0 * rpow(c + 1) * p1 + (4.0 * c - 2.0) * rpow(c - 1) * p1 +
              4.0 * rpow(c + 1) * p2);
  if (c >= 3) d.d2 += e * (c - 1.0) * (c - 2.0) * rpow(c - 3) * p0;
  return d;
}

double u_normalization(int c, int j) {
  check_uj(c, j);
  int d = c - j - 1;
  double lambda = j + 1.0;
  QuadratureRule rule = gauss_chebyshev2(c + 2);
  double integral = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    double u = rule.nodes[k];
    double g = gegenbauer(d, lambda, u);
    integral += rule.weights[k] * std::pow(1.0 - u * u, j) * g * g;
  }
  return 1.0 / std::sqrt(integral);
}

double u_function(int c, int j, double u) {
  check_uj(c, j);
  return u_normalization(c, j) * std::pow(1.0 - u * u, j / 2.0) *
         gegenbauer(c - j - 1, j + 1.0, u);
}

Derivs u_function_derivs(int c, int j, double u) {
  check_uj(c, j);
  int d = c - j - 1;
  double lambda = j + 1.0;
  double norm = u_normalization(c, j);
  double g0 = gegenbauer(d, lambda, u);
  double g1 = d >= 1 ? 2.0 * lambda * gegenbauer(d - 1, lambda + 1.0, u) : 0.0;
  double g2 = d >= 2 ? 4.0 * lambda * (lambda + 1.0) * gegenbauer(d - 2, lambda + 2.0, u)
                     : 0.0;
  double w0 = 1.0, w1 = 0.0, w2 = 0.0;
  if (j > 0) {
    double onem = 1.0 - u * u;
    w0 = std::pow(onem, j / 2.0);
    w1 = -j * u * std::pow(onem, j / 2.0 - 1.0);
    w2 = -j * std::pow(onem, j / 2.0 - 1.0) +
         j * (j - 2.0) * u * u * std::pow(onem, j / 2.0 - 2.0);
  }
  Derivs out;
  out.value = norm * w0 * g0;
  out.d1 = norm * (w1 * g0 + w0 * g1);
  out.d2 = norm * (w2 * g0 + 2.0 * w1 * g1 + w0 * g2);
  return out;
}

namespace {

double relative_residual(std::initializer_list<double> terms, double floor_scale) {
  double sum = 0.0;
  double scale = floor_scale;
  for (double t : terms) {
    sum += t;
    scale = std::max(scale, std::abs(t));
  }
  if (scale == 0.0) return 0.0;
  return std::abs(sum) / scale;
}

}  // namespace

double ode_residual_U(int c, int j, double u) {
  if (!(std::abs(u) < 1.0)) {
    throw std::invalid_argument("ode_residual_U needs |u| < 1");
  }
  Derivs f = u_function_derivs(c, j, u);
  double onem = 1.0 - u * u;
  return relative_residual(
      {onem * f.d2, -3.0 * u * f.d1,
       (static_cast<double>(c) * c - 1.0) * f.value,
       -static_cast<double>(j) * (j + 1.0) / onem * f.value},
      static_cast<double>(c) * c * std::abs(f.value));
}

double ode_residual_R(int n, int c, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("ode_residual_R needs r > 0");
  Derivs f = radial_R_derivs(n, c, r);
  return relative_residual(
      {f.d2, 3.0 / r * f.d1, (2.0 * (2.0 + n) - r * r) * f.value,
       (1.0 - static_cast<double>(c) * c) / (r * r) * f.value},
      2.0 * (n + 2.0) * std::abs(f.value));
}

std::complex<double> irrep_wavefunction(const IrrepLabel& label, const HyperPoint& h) {
  validate_label(label);
  return radial_R(label.n, label.c, h.r) * u_function(label.c, label.j, h.u) *
         spherical_Y(label.j, label.m, h.theta, h.phi);
}

}  // namespace covfock
