#pragma once

#include <complex>

#include "covfock/basis.hpp"
#include "covfock/coordinates.hpp"
#include "covfock/irrep_label.hpp"

namespace covfock {

/// <x|n1,n2,n3;n4> = (1/(pi hbar)) exp(-x.x/(2 hbar))
///                   prod_a Htilde_{n_a}(x^a / sqrt(hbar)); real.
double fock_wavefunction(const FockIndex& idx, const CartesianPoint& p,
                         double hbar = 1.0);

/// Four-dimensional overlap integral of two Fock wavefunctions by a tensor
/// Gauss-Hermite rule of order q per axis, evaluated with separable 1D sums.
/// flip_x4 negates the x4 argument of the first factor (both factors are
/// real).  Exactness needs q >= max(level)+1; smaller q throws.
double overlap_cartesian(const FockIndex& a, const FockIndex& b, bool flip_x4,
                         int q);

/// Radial factor R_{n c}(r) at hbar = 1:
/// exp(-r^2/2) sqrt(2 k!/(k+c)!) r^{c-1} L_k^c(r^2) with k = (n+1-c)/2,
/// normalized so that integral of R^2 r^3 dr = 1, sign positive.
double radial_R(int n, int c, double r);

struct Derivs {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// Analytic first/second derivatives from the Laguerre derivative rule
/// dL_k^c/dt = -L_{k-1}^{c+1}; no finite differences.
Derivs radial_R_derivs(int n, int c, double r);

/// u-direction factor U_{c j}(u) = N (1-u^2)^{j/2} C_{c-j-1}^{(j+1)}(u),
/// N > 0 fixed numerically by integral of U^2 sqrt(1-u^2) du = 1.  The
/// leading Gegenbauer coefficient is positive, which pins the sign.
double u_function(int c, int j, double u);
double u_normalization(int c, int j);

/// Analytic derivatives via d/du C_d^{(l)} = 2 l C_{d-1}^{(l+1)}.
Derivs u_function_derivs(int c, int j, double u);

/// Residual of (1-u^2) U'' - 3u U' + (c^2 - 1 - j(j+1)/(1-u^2)) U = 0,
/// divided by the local term scale; needs |u| < 1.
double ode_residual_U(int c, int j, double u);

/// Residual of R'' + (3/r) R' + (2(2+n) - r^2 + (1-c^2)/r^2) R = 0 at
/// hbar = 1, divided by the local term scale; needs r > 0.
double ode_residual_R(int n, int c, double r);

/// <x|n;c;j,m> = R_{n c}(r) U_{c j}(u) Y_{j m}(theta, phi) at hbar = 1.
std::complex<double> irrep_wavefunction(const IrrepLabel& label,
                                        const HyperPoint& h);

}  // namespace covfock
