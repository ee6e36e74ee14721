#include "covfock/decompose.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "covfock/lorentz.hpp"
#include "covfock/metric.hpp"
#include "covfock/operators.hpp"
#include "covfock/parallel.hpp"
#include "covfock/polynomials.hpp"
#include "covfock/quadrature.hpp"
#include "covfock/wavefunctions.hpp"

namespace covfock {

std::vector<FockIndex> states_at_level(int level) {
  if (level < 0) throw std::invalid_argument("level must be >= 0");
  std::vector<FockIndex> out;
  out.reserve(TruncatedBasis::states_in_level(level));
  for (int a = level; a >= 0; --a)
    for (int b = level - a; b >= 0; --b)
      for (int c = level - a - b; c >= 0; --c)
        out.push_back(FockIndex{a, b, c, level - a - b - c});
  return out;
}

std::vector<IrrepLabel> irrep_labels(int n) {
  if (n < 0) throw std::invalid_argument("level must be >= 0");
  std::vector<IrrepLabel> out;
  for (int c = n + 1; c >= 1; c -= 2)
    for (int j = 0; j < c; ++j)
      for (int m = -j; m <= j; ++m) out.push_back(IrrepLabel{n, c, j, m});
  return out;
}

void validate_quadrature(const QuadratureSpec& spec, int level) {
  if (spec.q_radial < level + 1 || spec.q_u < level + 1 ||
      spec.q_theta < level + 1 || spec.q_phi < 2 * level + 1) {
    throw std::invalid_argument(
        "insufficient quadrature order for exactness at level " +
        std::to_string(level) +
        ": need q_radial,q_u,q_theta >= n+1 and q_phi >= 2n+1");
  }
}

namespace {

struct Grid {
  QuadratureRule t;      // Gauss-Laguerre alpha=1, t = r^2
  QuadratureRule u;      // Gauss-Chebyshev 2nd kind
  QuadratureRule v;      // Gauss-Legendre, v = cos(theta)
  QuadratureRule phi;    // periodic trapezoid
  std::size_t n_nodes = 0;

  std::size_t node(std::size_t it, std::size_t iu, std::size_t iv,
                   std::size_t ip) const {
    return ((it * u.size() + iu) * v.size() + iv) * phi.size() + ip;
  }
};

Grid make_grid(const QuadratureSpec& spec, int level) {
  validate_quadrature(spec, level);
  Grid g;
  g.t = gauss_laguerre(spec.q_radial, 1.0);
  g.u = gauss_chebyshev2(spec.q_u);
  g.v = gauss_legendre(spec.q_theta);
  g.phi = periodic_trapezoid(spec.q_phi);
  g.n_nodes = g.t.size() * g.u.size() * g.v.size() * g.phi.size();
  return g;
}

/// Node weights absorb the r^3 dr measure via t = r^2 (so dr r^3 ->
/// dt t/2, with exp(+t) compensating the Laguerre weight) and the
/// sqrt(1-u^2) du and sin(theta) dtheta factors via the u- and v-rules.
Eigen::VectorXd node_weights(const Grid& g) {
  Eigen::VectorXd w(static_cast<Eigen::Index>(g.n_nodes));
  for (std::size_t it = 0; it < g.t.size(); ++it) {
    double wt = 0.5 * g.t.weights[it] * std::exp(g.t.nodes[it]);
    for (std::size_t iu = 0; iu < g.u.size(); ++iu) {
      double wu = wt * g.u.weights[iu];
      for (std::size_t iv = 0; iv < g.v.size(); ++iv) {
        double wv = wu * g.v.weights[iv];
        for (std::size_t ip = 0; ip < g.phi.size(); ++ip) {
          w[static_cast<Eigen::Index>(g.node(it, iu, iv, ip))] =
              wv * g.phi.weights[ip];
        }
      }
    }
  }
  return w;
}

/// Fock wavefunctions evaluated on the grid, one column per node.
Eigen::MatrixXd fock_grid(const Grid& g, const std::vector<FockIndex>& states) {
  int level = states.empty() ? 0 : states.front().level();
  Eigen::MatrixXd f(static_cast<Eigen::Index>(states.size()),
                    static_cast<Eigen::Index>(g.n_nodes));
  parallel_for(g.n_nodes, [&](std::size_t node) {
    std::size_t ip = node % g.phi.size();
    std::size_t rest = node / g.phi.size();
    std::size_t iv = rest % g.v.size();
    rest /= g.v.size();
    std::size_t iu = rest % g.u.size();
    std::size_t it = rest / g.u.size();

    HyperPoint h;
    h.r = std::sqrt(g.t.nodes[it]);
    h.u = g.u.nodes[iu];
    h.theta = std::acos(g.v.nodes[iv]);
    h.phi = g.phi.nodes[ip];
    CartesianPoint p = hyper_to_cart(h);

    // Shared Hermite tables make each state a four-fold lookup.
    std::array<std::vector<double>, 4> table;
    const std::array<double, 4> coord = {p.x1, p.x2, p.x3, p.x4};
    for (int axis = 0; axis < 4; ++axis) {
      auto& col = table[static_cast<std::size_t>(axis)];
      col.resize(static_cast<std::size_t>(level) + 1);
      for (int d = 0; d <= level; ++d) {
        col[static_cast<std::size_t>(d)] =
            hermite_tilde(d, coord[static_cast<std::size_t>(axis)]);
      }
    }
    double envelope = std::exp(-g.t.nodes[it] / 2.0) / std::numbers::pi;
    for (std::size_t s = 0; s < states.size(); ++s) {
      const FockIndex& idx = states[s];
      f(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(node)) =
          envelope * table[0][static_cast<std::size_t>(idx.n1)] *
          table[1][static_cast<std::size_t>(idx.n2)] *
          table[2][static_cast<std::size_t>(idx.n3)] *
          table[3][static_cast<std::size_t>(idx.n4)];
    }
  });
  return f;
}

/// conj(psi_label) on the grid, factorized as R(t) U(u) conj(Y(theta,phi)).
Eigen::MatrixXcd label_grid(const Grid& g, const std::vector<IrrepLabel>& labels) {
  Eigen::MatrixXcd l(static_cast<Eigen::Index>(labels.size()),
                     static_cast<Eigen::Index>(g.n_nodes));
  parallel_for(labels.size(), [&](std::size_t row) {
    const IrrepLabel& label = labels[row];
    std::vector<double> rvals(g.t.size());
    for (std::size_t it = 0; it < g.t.size(); ++it) {
      rvals[it] = radial_R(label.n, label.c, std::sqrt(g.t.nodes[it]));
    }
    std::vector<double> uvals(g.u.size());
    for (std::size_t iu = 0; iu < g.u.size(); ++iu) {
      uvals[iu] = u_function(label.c, label.j, g.u.nodes[iu]);
    }
    std::vector<std::complex<double>> yvals(g.v.size() * g.phi.size());
    for (std::size_t iv = 0; iv < g.v.size(); ++iv) {
      double theta = std::acos(g.v.nodes[iv]);
      for (std::size_t ip = 0; ip < g.phi.size(); ++ip) {
        yvals[iv * g.phi.size() + ip] =
            std::conj(spherical_Y(label.j, label.m, theta, g.phi.nodes[ip]));
      }
    }
    for (std::size_t it = 0; it < g.t.size(); ++it) {
      for (std::size_t iu = 0; iu < g.u.size(); ++iu) {
        double ru = rvals[it] * uvals[iu];
        for (std::size_t iv = 0; iv < g.v.size(); ++iv) {
          for (std::size_t ip = 0; ip < g.phi.size(); ++ip) {
            l(static_cast<Eigen::Index>(row),
              static_cast<Eigen::Index>(g.node(it, iu, iv, ip))) =
                ru * yvals[iv * g.phi.size() + ip];
          }
        }
      }
    }
  });
  return l;
}

Eigen::MatrixXcd overlap_rows(const std::vector<IrrepLabel>& labels,
                              const std::vector<FockIndex>& states, int level,
                              const QuadratureSpec& spec) {
  Grid g = make_grid(spec, level);
  Eigen::VectorXd w = node_weights(g);
  Eigen::MatrixXd f = fock_grid(g, states);
  Eigen::MatrixXcd l = label_grid(g, labels);
  Eigen::MatrixXd fw = w.asDiagonal() * f.transpose();  // nodes x states
  return l * fw.cast<std::complex<double>>();
}

}  // namespace

std::complex<double> overlap_fock_irrep(const FockIndex& idx, const IrrepLabel& label,
                                        const QuadratureSpec& spec) {
  validate_label(label);
  int level = std::max(idx.level(), label.n);
  return overlap_rows({label}, {idx}, level, spec)(0, 0);
}

Eigen::MatrixXcd level_overlap_matrix(int n, const QuadratureSpec& spec) {
  return overlap_rows(irrep_labels(n), states_at_level(n), n, spec);
}

Decomposition decompose_fock(const FockIndex& idx, const QuadratureSpec& spec,
                             double prune) {
  if (prune < 0.0) throw std::invalid_argument("prune threshold must be >= 0");
  int n = idx.level();
  std::vector<IrrepLabel> labels = irrep_labels(n);
  Eigen::MatrixXcd a = overlap_rows(labels, {idx}, n, spec);
  Decomposition out;
  out.source = idx;
  for (std::size_t row = 0; row < labels.size(); ++row) {
    std::complex<double> coeff = a(static_cast<Eigen::Index>(row), 0);
    out.sum_sq += std::norm(coeff);
    if (std::abs(coeff) > prune) {
      out.terms.push_back({labels[row], coeff});
    }
  }
  return out;
}

double casimir_check(int n, const QuadratureSpec& spec, double hbar) {
  std::vector<IrrepLabel> labels = irrep_labels(n);
  Eigen::MatrixXcd a = level_overlap_matrix(n, spec);
  BasisPtr basis = make_basis(n);
  Eigen::MatrixXcd block = casimir_matrix(basis, hbar).level_block(n);
  Eigen::MatrixXcd transformed = a * block * a.adjoint();
  for (std::size_t row = 0; row < labels.size(); ++row) {
    double c = labels[row].c;
    transformed(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(row)) -=
        hbar * hbar * (c * c - 1.0);
  }
  return transformed.size() > 0 ? transformed.cwiseAbs().maxCoeff() : 0.0;
}

Eigen::MatrixXcd pseudo_metric_irrep(int n, const QuadratureSpec& spec) {
  Eigen::MatrixXcd a = level_overlap_matrix(n, spec);
  BasisPtr basis = make_basis(n);
  Eigen::MatrixXcd p4 = parity4_matrix(basis).level_block(n);
  return a * p4 * a.adjoint();
}

double pseudo_metric_irrep_deviation(int n, const QuadratureSpec& spec) {
  std::vector<IrrepLabel> labels = irrep_labels(n);
  Eigen::MatrixXcd g = pseudo_metric_irrep(n, spec);
  for (std::size_t row = 0; row < labels.size(); ++row) {
    double expected = (n - labels[row].j) % 2 == 0 ? 1.0 : -1.0;
    g(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(row)) -= expected;
  }
  return g.size() > 0 ? g.cwiseAbs().maxCoeff() : 0.0;
}

AngularCheck angular_momentum_check(int n, const QuadratureSpec& spec, double hbar) {
  std::vector<IrrepLabel> labels = irrep_labels(n);
  Eigen::MatrixXcd a = level_overlap_matrix(n, spec);
  BasisPtr basis = make_basis(n);
  Eigen::MatrixXcd j12 = rotation_generator(basis, 1, 2, hbar).level_block(n);
  Eigen::MatrixXcd jsq = Eigen::MatrixXcd::Zero(j12.rows(), j12.cols());
  for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    Eigen::MatrixXcd g = rotation_generator(basis, i, j, hbar).level_block(n);
    jsq += g * g;
  }
  AngularCheck out;
  for (std::size_t row = 0; row < labels.size(); ++row) {
    // The irrep state's Fock coefficients are conj(A) rows.
    Eigen::VectorXcd v = a.row(static_cast<Eigen::Index>(row)).conjugate().transpose();
    double m = labels[row].m;
    double j = labels[row].j;
    out.max_j12_deviation = std::max(
        out.max_j12_deviation, (j12 * v - hbar * m * v).cwiseAbs().maxCoeff());
    out.max_jsq_deviation = std::max(
        out.max_jsq_deviation,
        (jsq * v - hbar * hbar * j * (j + 1.0) * v).cwiseAbs().maxCoeff());
  }
  return out;
}

}  // namespace covfock
