#include "covfock/polynomials.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace covfock {

double hermite_tilde(int n, double y) {
  if (n < 0) throw std::invalid_argument("hermite_tilde degree must be >= 0");
  // Htilde_{n+1} = y sqrt(2/(n+1)) Htilde_n - sqrt(n/(n+1)) Htilde_{n-1}
  double h0 = 1.0;
  if (n == 0) return h0;
  double h1 = std::numbers::sqrt2 * y;
  for (int k = 1; k < n; ++k) {
    double h2 = y * std::sqrt(2.0 / (k + 1)) * h1 - std::sqrt(k / (k + 1.0)) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double laguerre(int k, double alpha, double t) {
  if (k < 0) throw std::invalid_argument("laguerre degree must be >= 0");
  double l0 = 1.0;
  if (k == 0) return l0;
  double l1 = 1.0 + alpha - t;
  for (int i = 1; i < k; ++i) {
    double l2 = ((2.0 * i + 1.0 + alpha - t) * l1 - (i + alpha) * l0) / (i + 1.0);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

double gegenbauer(int d, double lambda, double u) {
  if (d < 0) throw std::invalid_argument("gegenbauer degree must be >= 0");
  double c0 = 1.0;
  if (d == 0) return c0;
  double c1 = 2.0 * lambda * u;
  for (int i = 1; i < d; ++i) {
    double c2 = (2.0 * u * (i + lambda) * c1 - (i + 2.0 * lambda - 1.0) * c0) / (i + 1.0);
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

double assoc_legendre(int j, int m, double x) {
  if (m < 0 || m > j) throw std::invalid_argument("assoc_legendre needs 0 <= m <= j");
  // P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}, then upward in degree.
  double pmm = 1.0;
  if (m > 0) {
    double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    double fact = 1.0;
    for (int i = 0; i < m; ++i) {
      pmm *= -fact * s;
      fact += 2.0;
    }
  }
  if (j == m) return pmm;
  double pm1 = x * (2.0 * m + 1.0) * pmm;
  if (j == m + 1) return pm1;
  double out = 0.0;
  for (int l = m + 2; l <= j; ++l) {
    out = ((2.0 * l - 1.0) * x * pm1 - (l + m - 1.0) * pmm) / (l - m);
    pmm = pm1;
    pm1 = out;
  }
  return out;
}

std::complex<double> spherical_Y(int j, int m, double theta, double phi) {
  if (j < 0 || std::abs(m) > j) {
    throw std::invalid_argument("spherical_Y needs |m| <= j");
  }
  int am = std::abs(m);
  double norm = 1.0;
  for (int i = j - am + 1; i <= j + am; ++i) norm /= i;  // (j-|m|)! / (j+|m|)!
  norm = std::sqrt((2.0 * j + 1.0) / (4.0 * std::numbers::pi) * norm);
  double p = assoc_legendre(j, am, std::cos(theta));
  std::complex<double> y =
      norm * p * std::exp(std::complex<double>(0.0, am * phi));
  if (m >= 0) return y;
  double sign = am % 2 == 0 ? 1.0 : -1.0;
  return sign * std::conj(y);
}

}  // namespace covfock
