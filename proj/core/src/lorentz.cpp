#include "covfock/lorentz.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "covfock/parallel.hpp"

namespace covfock {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_spatial_axis(int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("spatial axis must be 1..3");
}

/// exp(M) by scaling and squaring with a truncated Taylor series.
Eigen::MatrixXcd expm_scaling_squaring(const Eigen::MatrixXcd& m) {
  double norm = m.cwiseAbs().sum();
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.03125 && squarings < 60) {
    scale *= 0.5;
    ++squarings;
  }
  Eigen::MatrixXcd a = scale * m;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  Eigen::MatrixXcd term = out;
  for (int k = 1; k <= 24; ++k) {
    term = (term * a) / static_cast<double>(k);
    out += term;
  }
  for (int s = 0; s < squarings; ++s) out = out * out;
  return out;
}

Eigen::MatrixXcd expm_block(const Eigen::MatrixXcd& block, Complex factor) {
  if (block.rows() <= 500) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(block);
    if (es.info() == Eigen::Success) {
      Eigen::VectorXcd phases = (factor * es.eigenvalues().array()).exp().matrix();
      return es.eigenvectors() * phases.asDiagonal() *
             es.eigenvectors().inverse();
    }
  }
  return expm_scaling_squaring(factor * block);
}

}  // namespace

std::vector<GeneratorLabel> all_generator_labels() {
  using Kind = GeneratorLabel::Kind;
  return {
      {Kind::Rotation, 1, 2}, {Kind::Rotation, 1, 3}, {Kind::Rotation, 2, 3},
      {Kind::Boost, 1, 0},    {Kind::Boost, 2, 0},    {Kind::Boost, 3, 0},
  };
}

std::string to_string(const GeneratorLabel& label) {
  if (label.kind == GeneratorLabel::Kind::Rotation) {
    return "J" + std::to_string(label.i) + std::to_string(label.j);
  }
  return "J0" + std::to_string(label.i);
}

OperatorMatrix rotation_generator(const BasisPtr& basis, int i, int j, double hbar) {
  check_spatial_axis(i);
  check_spatial_axis(j);
  if (i == j) throw std::invalid_argument("rotation axes must differ");
  OperatorMatrix m = ladder_matrix(basis, i, LadderKind::Raising, hbar) *
                         ladder_matrix(basis, j, LadderKind::Lowering, hbar) -
                     ladder_matrix(basis, j, LadderKind::Raising, hbar) *
                         ladder_matrix(basis, i, LadderKind::Lowering, hbar);
  m *= Complex(0.0, -0.5);  // 1/(2i)
  return m;
}

OperatorMatrix boost_generator(const BasisPtr& basis, int i, double hbar) {
  check_spatial_axis(i);
  OperatorMatrix m = ladder_matrix(basis, 4, LadderKind::Raising, hbar) *
                         ladder_matrix(basis, i, LadderKind::Lowering, hbar) -
                     ladder_matrix(basis, i, LadderKind::Raising, hbar) *
                         ladder_matrix(basis, 4, LadderKind::Lowering, hbar);
  m *= Complex(0.5);
  return m;
}

OperatorMatrix generator_matrix(const BasisPtr& basis, const GeneratorLabel& label,
                                double hbar) {
  if (label.kind == GeneratorLabel::Kind::Rotation) {
    return rotation_generator(basis, label.i, label.j, hbar);
  }
  return boost_generator(basis, label.i, hbar);
}

OperatorMatrix lorentz_generator(const BasisPtr& basis, int mu, int nu, double hbar) {
  if (mu < 0 || mu > 3 || nu < 0 || nu > 3) {
    throw std::invalid_argument("Minkowski index must be 0..3");
  }
  if (mu == nu) return OperatorMatrix(basis);
  if (mu > nu) {
    OperatorMatrix m = lorentz_generator(basis, nu, mu, hbar);
    m *= Complex(-1.0);
    return m;
  }
  if (mu == 0) return boost_generator(basis, nu, hbar);
  return rotation_generator(basis, mu, nu, hbar);
}

OperatorMatrix minkowski_position(const BasisPtr& basis, int mu, double hbar) {
  if (mu == 0) {
    OperatorMatrix m = position_matrix(basis, 4, hbar);
    m *= kI;
    return m;
  }
  check_spatial_axis(mu);
  return position_matrix(basis, mu, hbar);
}

OperatorMatrix minkowski_momentum(const BasisPtr& basis, int mu, double hbar) {
  if (mu == 0) {
    OperatorMatrix m = momentum_matrix(basis, 4, hbar);
    m *= kI;
    return m;
  }
  check_spatial_axis(mu);
  return momentum_matrix(basis, mu, hbar);
}

OperatorMatrix finite_transform(const OperatorMatrix& generator, double alpha,
                                double hbar) {
  if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be > 0");
  if (!generator.is_level_preserving()) {
    throw std::invalid_argument("finite_transform requires a level-preserving generator");
  }
  const BasisPtr& basis = generator.basis();
  Complex factor = kI * (alpha / hbar);
  int n_levels = basis->n_max() + 1;
  std::vector<Eigen::MatrixXcd> blocks(static_cast<std::size_t>(n_levels));
  parallel_for(static_cast<std::size_t>(n_levels), [&](std::size_t level) {
    blocks[level] = expm_block(generator.level_block(static_cast<int>(level)), factor);
  });
  OperatorMatrix out(basis);
  for (int level = 0; level < n_levels; ++level) {
    out.mutable_block(level, level) = blocks[static_cast<std::size_t>(level)];
  }
  return out;
}

FiniteTransform make_transform(const BasisPtr& basis, const GeneratorLabel& label,
                               double alpha, double hbar) {
  return FiniteTransform{label, alpha,
                         finite_transform(generator_matrix(basis, label, hbar), alpha, hbar)};
}

Eigen::Matrix4cd phase_rotated_level1(const OperatorMatrix& transform) {
  const BasisPtr& basis = transform.basis();
  if (basis->n_max() < 1) {
    throw std::invalid_argument("phase_rotated_level1 needs a basis with level 1");
  }
  Eigen::MatrixXcd b = transform.level_block(1);
  // Level-1 order is (1,0,0;0), (0,1,0;0), (0,0,1;0), (0,0,0;1): n4 = 0 for
  // the first three entries and 1 for the last, so D = diag(1, 1, 1, i).
  Eigen::Vector4cd d{1.0, 1.0, 1.0, kI};
  Eigen::Matrix4cd rephased;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      rephased(r, c) = b(r, c) * d(c) / d(r);
    }
  }
  // Reorder to (t, x1, x2, x3).
  constexpr std::array<int, 4> perm = {3, 0, 1, 2};
  Eigen::Matrix4cd out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      out(r, c) = rephased(perm[static_cast<std::size_t>(r)],
                           perm[static_cast<std::size_t>(c)]);
    }
  }
  return out;
}

OperatorMatrix casimir_matrix(const BasisPtr& basis, double hbar) {
  OperatorMatrix c(basis);
  bool first = true;
  for (int i = 1; i <= 2; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      OperatorMatrix g = rotation_generator(basis, i, j, hbar);
      if (first) {
        c = g * g;
        first = false;
      } else {
        c += g * g;
      }
    }
  }
  for (int i = 1; i <= 3; ++i) {
    OperatorMatrix g = boost_generator(basis, i, hbar);
    c -= g * g;
  }
  return c;
}

namespace {

struct Relation {
  std::string name;
  OperatorMatrix deviation;
  bool interior_only = false;
};

}  // namespace

std::vector<AlgebraCheck> verify_algebra(const BasisPtr& basis, double hbar) {
  const Complex ih = kI * hbar;
  auto eta = [](int mu, int nu) {
    return mu == nu ? kEta[static_cast<std::size_t>(mu)] : 0.0;
  };

  std::vector<std::pair<int, int>> pairs;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) pairs.emplace_back(mu, nu);

  std::vector<OperatorMatrix> j(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    j[k] = lorentz_generator(basis, pairs[k].first, pairs[k].second, hbar);
  });
  auto j_at = [&](int mu, int nu) -> OperatorMatrix {
    if (mu == nu) return OperatorMatrix(basis);
    bool flip = mu > nu;
    if (flip) std::swap(mu, nu);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (pairs[k] == std::pair<int, int>{mu, nu}) {
        OperatorMatrix out = j[k];
        if (flip) out *= Complex(-1.0);
        return out;
      }
    }
    throw std::logic_error("generator pair not found");
  };

  std::vector<OperatorMatrix> x(4), p(4);
  for (int mu = 0; mu < 4; ++mu) {
    x[static_cast<std::size_t>(mu)] = minkowski_position(basis, mu, hbar);
    p[static_cast<std::size_t>(mu)] = minkowski_momentum(basis, mu, hbar);
  }

  std::vector<Relation> relations;

  // [J_{mu nu}, J_{rho sigma}] =
  //   i hbar (eta_{nu sigma} J_{mu rho} + eta_{mu rho} J_{nu sigma}
  //           - eta_{mu sigma} J_{nu rho} - eta_{nu rho} J_{mu sigma})
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a; b < pairs.size(); ++b) {
      auto [mu, nu] = pairs[a];
      auto [rho, sigma] = pairs[b];
      OperatorMatrix rhs(basis);
      rhs += eta(nu, sigma) * j_at(mu, rho);
      rhs += eta(mu, rho) * j_at(nu, sigma);
      rhs -= eta(mu, sigma) * j_at(nu, rho);
      rhs -= eta(nu, rho) * j_at(mu, sigma);
      rhs *= ih;
      relations.push_back({"[J" + std::to_string(mu) + std::to_string(nu) + ",J" +
                               std::to_string(rho) + std::to_string(sigma) + "]",
                           commutator(j[a], j[b]) - rhs, false});
    }
  }

  // [J_{mu nu}, X_rho] = i hbar (eta_{mu rho} X_nu - eta_{nu rho} X_mu),
  // and the same pattern for P.
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    auto [mu, nu] = pairs[a];
    for (int rho = 0; rho < 4; ++rho) {
      OperatorMatrix rhs_x(basis);
      rhs_x += eta(mu, rho) * x[static_cast<std::size_t>(nu)];
      rhs_x -= eta(nu, rho) * x[static_cast<std::size_t>(mu)];
      rhs_x *= ih;
      relations.push_back({"[J" + std::to_string(mu) + std::to_string(nu) + ",X" +
                               std::to_string(rho) + "]",
                           commutator(j[a], x[static_cast<std::size_t>(rho)]) - rhs_x,
                           false});
      OperatorMatrix rhs_p(basis);
      rhs_p += eta(mu, rho) * p[static_cast<std::size_t>(nu)];
      rhs_p -= eta(nu, rho) * p[static_cast<std::size_t>(mu)];
      rhs_p *= ih;
      relations.push_back({"[J" + std::to_string(mu) + std::to_string(nu) + ",P" +
                               std::to_string(rho) + "]",
                           commutator(j[a], p[static_cast<std::size_t>(rho)]) - rhs_p,
                           false});
    }
  }

  // [X_mu, P_nu] = i hbar eta_{mu nu}; the top level is a truncation
  // artifact, so measure on interior levels.
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      OperatorMatrix rhs = OperatorMatrix::identity(basis);
      rhs *= ih * eta(mu, nu);
      relations.push_back({"[X" + std::to_string(mu) + ",P" + std::to_string(nu) + "]",
                           commutator(x[static_cast<std::size_t>(mu)],
                                      p[static_cast<std::size_t>(nu)]) -
                               rhs,
                           true});
    }
  }

  // [a_a, adag_b] = 2 hbar delta_ab, interior levels.
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      OperatorMatrix rhs = OperatorMatrix::identity(basis);
      rhs *= Complex(a == b ? 2.0 * hbar : 0.0);
      relations.push_back(
          {"[a" + std::to_string(a) + ",adag" + std::to_string(b) + "]",
           commutator(ladder_matrix(basis, a, LadderKind::Lowering, hbar),
                      ladder_matrix(basis, b, LadderKind::Raising, hbar)) -
               rhs,
           true});
    }
  }

  // N + 2 = (1/2 hbar) sum_a (X_a^2 + P_a^2), interior levels.
  {
    OperatorMatrix sum(basis);
    for (int a = 1; a <= 4; ++a) {
      OperatorMatrix xa = position_matrix(basis, a, hbar);
      OperatorMatrix pa = momentum_matrix(basis, a, hbar);
      sum += xa * xa;
      sum += pa * pa;
    }
    sum *= Complex(1.0 / (2.0 * hbar));
    OperatorMatrix lhs = total_number_matrix(basis, hbar);
    OperatorMatrix two = OperatorMatrix::identity(basis);
    two *= Complex(2.0);
    lhs += two;
    relations.push_back({"N+2=(X^2+P^2)/2hbar", lhs - sum, true});
  }

  int interior = basis->n_max() - 1;
  std::vector<AlgebraCheck> out;
  out.reserve(relations.size());
  for (const auto& rel : relations) {
    double dev = rel.interior_only ? rel.deviation.max_abs_within_levels(interior)
                                   : rel.deviation.max_abs();
    out.push_back({rel.name, dev});
  }
  return out;
}

}  // namespace covfock
