#pragma once

#include <complex>

namespace covfock {

/// Normalized Hermite polynomial Htilde_n = H_n / sqrt(2^n n!), so that
/// integral of Htilde_n Htilde_m exp(-y^2) dy = sqrt(pi) delta_nm.
double hermite_tilde(int n, double y);

/// Generalized Laguerre L_k^alpha(t).
double laguerre(int k, double alpha, double t);

/// Gegenbauer C_d^{(lambda)}(u).
double gegenbauer(int d, double lambda, double u);

/// Associated Legendre P_j^m(x) for m >= 0, Condon-Shortley phase included.
double assoc_legendre(int j, int m, double x);

/// Spherical harmonic Y_{j m}(theta, phi) with Condon-Shortley phase;
/// negative m via Y_{j,-m} = (-1)^m conj(Y_{j,m}).
std::complex<double> spherical_Y(int j, int m, double theta, double phi);

}  // namespace covfock
