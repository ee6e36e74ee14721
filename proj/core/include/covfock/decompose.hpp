#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "covfock/basis.hpp"
#include "covfock/irrep_label.hpp"

namespace covfock {

/// Level-n Fock states in basis order (descending lex).
std::vector<FockIndex> states_at_level(int level);

/// Valid labels at level n, ordered by (c desc, j asc, m asc); there are
/// sum c^2 = C(n+3,3) of them.
std::vector<IrrepLabel> irrep_labels(int n);

/// Hyperspherical product quadrature. r uses generalized Gauss-Laguerre
/// (alpha = 1) under t = r^2, u uses Gauss-Chebyshev (2nd kind, matching
/// the sqrt(1-u^2) measure), theta uses Gauss-Legendre in cos(theta), phi
/// uses the periodic trapezoid rule.  With the level-n validity bounds
/// below every surviving integrand term is integrated exactly.
struct QuadratureSpec {
  int q_radial = 12;  // needs >= n+1
  int q_u = 10;       // needs >= n+1
  int q_theta = 10;   // needs >= n+1
  int q_phi = 16;     // needs >= 2n+1
};

void validate_quadrature(const QuadratureSpec& spec, int level);

/// A_{label,fock} = <label|fock> = integral of conj(psi_label) psi_fock
/// over the hyperspherical measure (hbar-independent).
std::complex<double> overlap_fock_irrep(const FockIndex& idx, const IrrepLabel& label,
                                        const QuadratureSpec& spec = {});

/// Full level-n overlap matrix, rows = irrep_labels(n), columns = level-n
/// Fock states in basis order.  Unitary up to quadrature round-off.
Eigen::MatrixXcd level_overlap_matrix(int n, const QuadratureSpec& spec = {});

struct DecompositionTerm {
  IrrepLabel label;
  std::complex<double> coefficient;
};

struct Decomposition {
  FockIndex source;
  std::vector<DecompositionTerm> terms;  // (c desc, j, m), |coeff| > prune
  double sum_sq = 0.0;                   // over all coefficients, pre-prune
};

Decomposition decompose_fock(const FockIndex& idx, const QuadratureSpec& spec = {},
                             double prune = 1e-10);

/// Max |(A C A^dag)_{ll'} - delta_{ll'} hbar^2 (c_l^2 - 1)| over the level-n
/// block of the Casimir.
double casimir_check(int n, const QuadratureSpec& spec = {}, double hbar = 1.0);

/// Pseudo-metric in the irrep basis: (A P4 A^dag); expected diagonal
/// (-1)^{n-j}.
Eigen::MatrixXcd pseudo_metric_irrep(int n, const QuadratureSpec& spec = {});
double pseudo_metric_irrep_deviation(int n, const QuadratureSpec& spec = {});

struct AngularCheck {
  double max_jsq_deviation = 0.0;  // |J^2 v - hbar^2 j(j+1) v|
  double max_j12_deviation = 0.0;  // |J12 v - hbar m v|
};

AngularCheck angular_momentum_check(int n, const QuadratureSpec& spec = {},
                                    double hbar = 1.0);

}  // namespace covfock
