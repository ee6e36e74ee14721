#include "covfock/verify.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "covfock/fixture.hpp"
#include "covfock/jsonio.hpp"
#include "covfock/lorentz.hpp"
#include "covfock/metric.hpp"
#include "covfock/parallel.hpp"
#include "covfock/version.hpp"
#include "covfock/wavefunctions.hpp"

namespace covfock {

namespace {

/// Collects records for one suite, applying the global tolerance override.
class Checker {
 public:
  Checker(const RunConfig& cfg, std::string suite)
      : suite_(std::move(suite)), override_(cfg.tol) {}

  void add(std::string name, double value, double tolerance,
           Comparison cmp = Comparison::Below) {
    CheckRecord rec;
    rec.suite = suite_;
    rec.name = std::move(name);
    rec.value = value;
    rec.tolerance = override_ ? *override_ : tolerance;
    rec.comparison = cmp;
    rec.pass = cmp == Comparison::Below ? value < rec.tolerance : value > rec.tolerance;
    records_.push_back(std::move(rec));
  }

  std::vector<CheckRecord> take() { return std::move(records_); }

 private:
  std::string suite_;
  std::optional<double> override_;
  std::vector<CheckRecord> records_;
};

}  // namespace

void validate_config(const RunConfig& cfg) {
  if (cfg.n_max < 0 || cfg.n_max > kDefaultLevelCap) {
    throw std::invalid_argument("n_max must be in [0, " +
                                std::to_string(kDefaultLevelCap) + "]");
  }
  if (!(cfg.hbar > 0.0)) {
    throw std::invalid_argument("hbar must be positive");
  }
  if (cfg.q_hermite < cfg.n_max + 1) {
    throw std::invalid_argument(
        "q_hermite must be at least n_max+1 for exact overlaps (got " +
        std::to_string(cfg.q_hermite) + ", need " + std::to_string(cfg.n_max + 1) +
        ")");
  }
  validate_quadrature(cfg.quad, cfg.n_max);
  if (cfg.tol && !(*cfg.tol > 0.0)) {
    throw std::invalid_argument("tol must be positive");
  }
  if (cfg.format != "json" && cfg.format != "csv") {
    throw std::invalid_argument("format must be json or csv");
  }
}

std::vector<CheckRecord> run_algebra_suite(const RunConfig& cfg) {
  Checker out(cfg, "algebra");
  auto basis = make_basis(cfg.n_max);
  for (const auto& check : verify_algebra(basis, cfg.hbar)) {
    out.add(check.relation, check.max_deviation, 1e-12);
  }
  return out.take();
}

std::vector<CheckRecord> run_boost_pattern_suite(const RunConfig& cfg) {
  Checker out(cfg, "boost_pattern");
  auto basis = make_basis(cfg.n_max);
  const double hbar = cfg.hbar;
  for (int axis = 1; axis <= 3; ++axis) {
    OperatorMatrix expected(basis);
    for (std::size_t col = 0; col < basis->size(); ++col) {
      const FockIndex& src = basis->state_at(col);
      const int level = src.level();
      const std::size_t base = basis->level_offset(level);
      auto put = [&](const FockIndex& dst, double amp) {
        auto& block = expected.mutable_block(level, level);
        block(static_cast<Eigen::Index>(basis->index_of(dst) - base),
              static_cast<Eigen::Index>(col - base)) = amp;
      };
      const int ni = src.occupation(axis);
      const int n4 = src.n4;
      if (ni > 0) {
        FockIndex dst = src.with_occupation(axis, ni - 1).with_occupation(4, n4 + 1);
        put(dst, hbar * std::sqrt(double(ni) * double(n4 + 1)));
      }
      if (n4 > 0) {
        FockIndex dst = src.with_occupation(axis, ni + 1).with_occupation(4, n4 - 1);
        put(dst, -hbar * std::sqrt(double(n4) * double(ni + 1)));
      }
    }
    OperatorMatrix built = boost_generator(basis, axis, hbar);
    out.add("elements_J0" + std::to_string(axis), (built - expected).max_abs(), 1e-13);
  }
  return out.take();
}

std::vector<CheckRecord> run_finite_boost_suite(const RunConfig& cfg) {
  Checker out(cfg, "finite_boost");
  if (cfg.n_max < 1) return out.take();
  auto basis = make_basis(cfg.n_max);
  const OperatorMatrix gen = boost_generator(basis, 3, cfg.hbar);
  const Complex iu(0.0, 1.0);
  const std::vector<std::pair<std::string, double>> alphas = {
      {"0.1", 0.1}, {"0.5", 0.5}, {"1.0", 1.0}};
  for (const auto& [tag, alpha] : alphas) {
    const OperatorMatrix lam = finite_transform(gen, alpha, cfg.hbar);
    const double ch = std::cosh(alpha);
    const double sh = std::sinh(alpha);

    Eigen::Matrix4cd level1 = Eigen::Matrix4cd::Identity();
    level1(2, 2) = ch;
    level1(3, 3) = ch;
    level1(2, 3) = -iu * sh;
    level1(3, 2) = iu * sh;
    const Eigen::Matrix4cd block = lam.level_block(1);
    out.add("level1_alpha=" + tag, (block - level1).cwiseAbs().maxCoeff(), 1e-12);

    Eigen::Matrix4cd mink = Eigen::Matrix4cd::Identity();
    mink(0, 0) = ch;
    mink(3, 3) = ch;
    mink(0, 3) = sh;
    mink(3, 0) = sh;
    const Eigen::Matrix4cd rotated = phase_rotated_level1(lam);
    out.add("minkowski_alpha=" + tag, (rotated - mink).cwiseAbs().maxCoeff(), 1e-12);

    Eigen::Matrix4cd eta = Eigen::Matrix4cd::Identity();
    eta(0, 0) = -1.0;
    const Eigen::Matrix4cd gram = rotated.transpose() * eta * rotated - eta;
    out.add("eta_invariance_alpha=" + tag, gram.cwiseAbs().maxCoeff(), 1e-12);
  }
  return out.take();
}

std::vector<CheckRecord> run_metric_suite(const RunConfig& cfg) {
  Checker out(cfg, "metric");
  auto basis = make_basis(cfg.n_max);
  const double hbar = cfg.hbar;

  for (const auto& label : all_generator_labels()) {
    out.add("pseudo_hermitian_" + to_string(label),
            pseudo_hermiticity_deviation(generator_matrix(basis, label, hbar)), 1e-12);
  }
  for (int mu = 0; mu < 4; ++mu) {
    out.add("pseudo_hermitian_X" + std::to_string(mu),
            pseudo_hermiticity_deviation(minkowski_position(basis, mu, hbar)), 1e-12);
  }

  if (cfg.n_max < 1) return out.take();

  const OperatorMatrix boost = boost_generator(basis, 3, hbar);
  const OperatorMatrix rot = rotation_generator(basis, 1, 2, hbar);
  const double two_pi = 2.0 * std::numbers::pi;
  const std::vector<std::pair<std::string, double>> thetas = {{"0.4", 0.4},
                                                              {"2pi", two_pi}};
  for (const auto& [tag, theta] : thetas) {
    const auto report = invariance_check(finite_transform(rot, theta, hbar));
    out.add("rot12_pseudo_invariance_theta=" + tag, report.pseudo_metric_deviation,
            1e-10);
    out.add("rot12_unitary_theta=" + tag, report.unitary_deviation, 1e-12);
  }

  const StateVector space = StateVector::basis_state(basis, FockIndex{0, 0, 1, 0});
  const StateVector time = StateVector::basis_state(basis, FockIndex{0, 0, 0, 1});
  const std::vector<std::pair<std::string, double>> alphas = {{"0.3", 0.3},
                                                              {"0.9", 0.9}};
  for (const auto& [tag, alpha] : alphas) {
    const OperatorMatrix lam = finite_transform(boost, alpha, hbar);
    out.add("boost3_pseudo_invariance_alpha=" + tag,
            invariance_check(lam).pseudo_metric_deviation, 1e-10);

    const StateVector bs = lam.apply(space);
    const StateVector bt = lam.apply(time);
    out.add("boost3_pseudo_spacelike_alpha=" + tag,
            std::abs(pseudo_inner(bs, bs) - Complex(1.0, 0.0)), 1e-12);
    out.add("boost3_pseudo_timelike_alpha=" + tag,
            std::abs(pseudo_inner(bt, bt) + Complex(1.0, 0.0)), 1e-12);
    const double grown = std::cosh(alpha) * std::cosh(alpha) +
                         std::sinh(alpha) * std::sinh(alpha);
    out.add("boost3_unitary_spacelike_alpha=" + tag,
            std::abs(unitary_inner(bs, bs) - Complex(grown, 0.0)), 1e-12);
  }
  out.add("boost3_nonunitary_witness_alpha=0.3",
          invariance_check(finite_transform(boost, 0.3, hbar)).unitary_deviation, 0.1,
          Comparison::Above);
  return out.take();
}

std::vector<CheckRecord> run_overlap_suite(const RunConfig& cfg) {
  Checker out(cfg, "overlap");
  auto basis = make_basis(cfg.n_max);
  const std::size_t n = basis->size();
  std::vector<double> plain(n, 0.0);
  std::vector<double> flipped(n, 0.0);
  parallel_for(n, [&](std::size_t i) {
    const FockIndex& a = basis->state_at(i);
    double worst_plain = 0.0;
    double worst_flip = 0.0;
    for (std::size_t j = i; j < n; ++j) {
      const FockIndex& b = basis->state_at(j);
      const double same = i == j ? 1.0 : 0.0;
      worst_plain = std::max(
          worst_plain, std::abs(overlap_cartesian(a, b, false, cfg.q_hermite) - same));
      const double parity = i == j ? (b.n4 % 2 == 0 ? 1.0 : -1.0) : 0.0;
      worst_flip = std::max(
          worst_flip, std::abs(overlap_cartesian(a, b, true, cfg.q_hermite) - parity));
    }
    plain[i] = worst_plain;
    flipped[i] = worst_flip;
  });
  out.add("kronecker_pairs", *std::max_element(plain.begin(), plain.end()), 1e-11);
  out.add("parity_kronecker_pairs", *std::max_element(flipped.begin(), flipped.end()),
          1e-11);
  return out.take();
}

std::vector<CheckRecord> run_ode_suite(const RunConfig& cfg) {
  Checker out(cfg, "ode");
  constexpr int kPoints = 50;
  for (int c = 1; c <= 7; ++c) {
    for (int j = 0; j < c; ++j) {
      double worst = 0.0;
      for (int k = 0; k < kPoints; ++k) {
        const double u = -1.0 + 2.0 * (k + 1) / (kPoints + 1.0);
        worst = std::max(worst, ode_residual_U(c, j, u));
      }
      out.add("U_c" + std::to_string(c) + "_j" + std::to_string(j), worst, 1e-9);
    }
  }
  for (int n = 0; n <= 6; ++n) {
    for (int c = n + 1; c >= 1; c -= 2) {
      double worst = 0.0;
      for (int k = 0; k < kPoints; ++k) {
        const double r = 6.0 * (k + 1) / kPoints;
        worst = std::max(worst, ode_residual_R(n, c, r));
      }
      out.add("R_n" + std::to_string(n) + "_c" + std::to_string(c), worst, 1e-9);
    }
  }
  return out.take();
}

std::vector<CheckRecord> run_fixture_suite(const RunConfig& cfg) {
  Checker out(cfg, "fixture");
  if (cfg.fixture_path.empty()) {
    throw std::invalid_argument("fixture path not set");
  }
  for (const auto& entry : load_fixture(cfg.fixture_path)) {
    const Decomposition dec = decompose_fock(entry.fock, cfg.quad, 0.0);
    double worst = 0.0;
    for (const auto& term : dec.terms) {
      Complex expected(0.0, 0.0);
      for (const auto& ft : entry.terms) {
        if (ft.label == term.label) {
          expected = ft.coeff.value();
          break;
        }
      }
      worst = std::max(worst, std::abs(term.coefficient - expected));
    }
    // Fixture terms whose computed coefficient was pruned to exactly zero.
    for (const auto& ft : entry.terms) {
      bool found = false;
      for (const auto& term : dec.terms) {
        found = found || term.label == ft.label;
      }
      if (!found) worst = std::max(worst, std::abs(ft.coeff.value()));
    }
    const std::string tag = to_string(entry.fock);
    out.add("coeffs_" + tag, worst, 1e-8);
    out.add("norm_" + tag, std::abs(dec.sum_sq - 1.0), 1e-9);
  }
  return out.take();
}

std::vector<CheckRecord> run_casimir_suite(const RunConfig& cfg) {
  Checker out(cfg, "casimir");
  auto basis = make_basis(cfg.n_max);
  const OperatorMatrix casimir = casimir_matrix(basis, cfg.hbar);
  const double h2 = cfg.hbar * cfg.hbar;
  for (int n = 0; n <= std::min(cfg.n_max, 6); ++n) {
    std::vector<double> expected;
    for (int c = n % 2 == 0 ? 1 : 2; c <= n + 1; c += 2) {
      expected.insert(expected.end(), static_cast<std::size_t>(c) * c,
                      h2 * (double(c) * c - 1.0));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(casimir.level_block(n));
    const Eigen::VectorXd spectrum = es.eigenvalues();
    double worst = 0.0;
    if (expected.size() != static_cast<std::size_t>(spectrum.size())) {
      worst = std::numeric_limits<double>::infinity();
    } else {
      for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
        worst = std::max(
            worst, std::abs(spectrum[i] - expected[static_cast<std::size_t>(i)]));
      }
    }
    out.add("spectrum_level" + std::to_string(n), worst, 1e-9);
  }
  for (const auto& label : all_generator_labels()) {
    const OperatorMatrix gen = generator_matrix(basis, label, cfg.hbar);
    out.add("commutes_" + to_string(label), commutator(casimir, gen).max_abs(), 1e-10);
  }
  return out.take();
}

std::vector<CheckRecord> run_irrep_metric_suite(const RunConfig& cfg) {
  Checker out(cfg, "irrep_metric");
  for (int n = 0; n <= std::min(cfg.n_max, 4); ++n) {
    const Eigen::MatrixXcd a = level_overlap_matrix(n, cfg.quad);
    const Eigen::MatrixXcd gram =
        a * a.adjoint() - Eigen::MatrixXcd::Identity(a.rows(), a.rows());
    const std::string tag = std::to_string(n);
    out.add("unitarity_level" + tag, gram.cwiseAbs().maxCoeff(), 1e-9);
    out.add("pseudo_metric_level" + tag, pseudo_metric_irrep_deviation(n, cfg.quad),
            1e-8);
    out.add("casimir_diag_level" + tag, casimir_check(n, cfg.quad, cfg.hbar), 1e-9);
    const AngularCheck angular = angular_momentum_check(n, cfg.quad, cfg.hbar);
    out.add("j12_action_level" + tag, angular.max_j12_deviation, 1e-9);
    out.add("jsq_action_level" + tag, angular.max_jsq_deviation, 1e-9);
  }
  return out.take();
}

Report run_verify(const RunConfig& cfg) {
  validate_config(cfg);
  Report report;
  report.command = "verify";
  report.config = cfg;
  auto append = [&](std::vector<CheckRecord> records) {
    for (auto& rec : records) {
      report.pass = report.pass && rec.pass;
      report.checks.push_back(std::move(rec));
    }
  };
  append(run_algebra_suite(cfg));
  append(run_boost_pattern_suite(cfg));
  append(run_finite_boost_suite(cfg));
  append(run_metric_suite(cfg));
  append(run_overlap_suite(cfg));
  append(run_ode_suite(cfg));
  append(run_fixture_suite(cfg));
  append(run_casimir_suite(cfg));
  append(run_irrep_metric_suite(cfg));
  return report;
}

void write_config(JsonWriter& w, const RunConfig& cfg) {
  w.key("config").begin_object();
  w.key("n_max").value(cfg.n_max);
  w.key("hbar").value(cfg.hbar);
  w.key("q_hermite").value(cfg.q_hermite);
  w.key("q_radial").value(cfg.quad.q_radial);
  w.key("q_u").value(cfg.quad.q_u);
  w.key("q_theta").value(cfg.quad.q_theta);
  w.key("q_phi").value(cfg.quad.q_phi);
  w.key("tol");
  if (cfg.tol) {
    w.value(*cfg.tol);
  } else {
    w.null();
  }
  w.key("format").value(cfg.format);
  w.key("out").value(cfg.out);
  w.key("fixture").value(cfg.fixture_path);
  w.end_object();
}

std::string report_to_json(const Report& report) {
  JsonWriter w;
  w.begin_object();
  w.key("tool").value("covfock");
  w.key("version").value(kVersion);
  w.key("command").value(report.command);
  write_config(w, report.config);
  w.key("checks").begin_array();
  std::size_t failed = 0;
  for (const auto& rec : report.checks) {
    if (!rec.pass) ++failed;
    w.begin_object();
    w.key("suite").value(rec.suite);
    w.key("name").value(rec.name);
    w.key("value").value(rec.value);
    w.key("tolerance").value(rec.tolerance);
    w.key("comparison").value(rec.comparison == Comparison::Below ? "below" : "above");
    w.key("pass").value(rec.pass);
    w.end_object();
  }
  w.end_array();
  w.key("summary").begin_object();
  w.key("total").value(report.checks.size());
  w.key("failed").value(failed);
  w.key("pass").value(report.pass);
  w.end_object();
  w.end_object();
  return w.take();
}

std::string report_to_csv(const Report& report) {
  std::string text = "suite,name,value,tolerance,comparison,pass\n";
  for (const auto& rec : report.checks) {
    text += csv_field(rec.suite);
    text += ',';
    text += csv_field(rec.name);
    text += ',';
    text += format_double(rec.value);
    text += ',';
    text += format_double(rec.tolerance);
    text += ',';
    text += rec.comparison == Comparison::Below ? "below" : "above";
    text += ',';
    text += rec.pass ? "true" : "false";
    text += '\n';
  }
  return text;
}

}  // namespace covfock
