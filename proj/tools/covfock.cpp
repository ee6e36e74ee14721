// covfock: covariant oscillator toolbox.
//
// Subcommands: verify (invariant suites), boost (finite boost blocks),
// decompose (Fock state in the hyperspherical basis), sample (wavefunction
// values on a 1D slice).  All output is deterministic for a fixed config;
// exit codes: 0 pass, 1 check failure, 2 usage/config error.

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "covfock/basis.hpp"
#include "covfock/coordinates.hpp"
#include "covfock/decompose.hpp"
#include "covfock/irrep_label.hpp"
#include "covfock/jsonio.hpp"
#include "covfock/lorentz.hpp"
#include "covfock/verify.hpp"
#include "covfock/version.hpp"
#include "covfock/wavefunctions.hpp"

#ifndef COVFOCK_FIXTURE_DEFAULT
#define COVFOCK_FIXTURE_DEFAULT ""
#endif

namespace {

using covfock::Complex;
using covfock::JsonWriter;
using covfock::RunConfig;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::string error_record(const std::string& message) {
  JsonWriter w;
  w.begin_object();
  w.key("error").begin_object();
  w.key("message").value(message);
  w.key("exit_code").value(kExitUsage);
  w.end_object();
  w.end_object();
  return w.take();
}

int fail_usage(const std::string& message) {
  std::cout << error_record(message);
  return kExitUsage;
}

/// Writes to cfg.out, "-" meaning stdout.
bool write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) return false;
  file << text;
  return static_cast<bool>(file);
}

/// Common flags shared by every subcommand; --tol presence is tracked so
/// that "unset" and "set to default" stay distinguishable.
struct CommonFlags {
  RunConfig cfg;
  double tol_value = 0.0;
  CLI::Option* tol_opt = nullptr;

  void attach(CLI::App* sub) {
    cfg.fixture_path = COVFOCK_FIXTURE_DEFAULT;
    if (const char* env = std::getenv("COVFOCK_FIXTURE")) cfg.fixture_path = env;
    sub->add_option("--n-max", cfg.n_max, "Basis truncation level")
        ->capture_default_str();
    sub->add_option("--hbar", cfg.hbar, "Planck constant")->capture_default_str();
    sub->add_option("--q-hermite", cfg.q_hermite, "Gauss-Hermite order per axis")
        ->capture_default_str();
    sub->add_option("--q-radial", cfg.quad.q_radial, "Radial Gauss-Laguerre order")
        ->capture_default_str();
    sub->add_option("--q-u", cfg.quad.q_u, "u-direction Gauss-Chebyshev order")
        ->capture_default_str();
    sub->add_option("--q-theta", cfg.quad.q_theta, "Polar Gauss-Legendre order")
        ->capture_default_str();
    sub->add_option("--q-phi", cfg.quad.q_phi, "Azimuthal trapezoid order")
        ->capture_default_str();
    tol_opt = sub->add_option("--tol", tol_value,
                              "Override every check tolerance with this bound");
    sub->add_option("--format", cfg.format, "Report format: json or csv")
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "Output path, - for stdout")
        ->capture_default_str();
    sub->add_option("--fixture", cfg.fixture_path,
                    "Golden decomposition table (also env COVFOCK_FIXTURE)");
  }

  void finalize() {
    if (tol_opt != nullptr && tol_opt->count() > 0) cfg.tol = tol_value;
  }
};

void write_header(JsonWriter& w, const std::string& command, const RunConfig& cfg) {
  w.key("tool").value("covfock");
  w.key("version").value(covfock::kVersion);
  w.key("command").value(command);
  covfock::write_config(w, cfg);
}

int run_verify_command(const RunConfig& cfg) {
  const covfock::Report report = covfock::run_verify(cfg);
  const std::string text = cfg.format == "csv" ? covfock::report_to_csv(report)
                                               : covfock::report_to_json(report);
  if (!write_output(cfg, text)) {
    return fail_usage("cannot write output file: " + cfg.out);
  }
  return report.pass ? kExitPass : kExitCheckFailure;
}

int check_format(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "csv") {
    return fail_usage("format must be json or csv");
  }
  return kExitPass;
}

int run_boost_command(const RunConfig& cfg, int axis, double alpha, int level) {
  if (int rc = check_format(cfg); rc != kExitPass) return rc;
  if (axis < 1 || axis > 3) {
    return fail_usage("boost axis must be 1, 2, or 3");
  }
  if (level < 0 || level > cfg.n_max) {
    return fail_usage("boost level must be in [0, n_max]");
  }
  if (!std::isfinite(alpha)) {
    return fail_usage("alpha must be finite");
  }
  auto basis = covfock::make_basis(cfg.n_max);
  const covfock::OperatorMatrix lam =
      covfock::finite_transform(covfock::boost_generator(basis, axis, cfg.hbar),
                                alpha, cfg.hbar);
  const Eigen::MatrixXcd block = lam.level_block(level);
  const bool rephase = level == 1;
  Eigen::Matrix4cd mink;
  if (rephase) mink = covfock::phase_rotated_level1(lam);

  std::string text;
  if (cfg.format == "csv") {
    text = "section,row,col,re,im\n";
    auto rows = [&text](const char* section, const Eigen::MatrixXcd& m) {
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          text += section;
          text += ',' + std::to_string(r) + ',' + std::to_string(c) + ',';
          text += covfock::format_double(m(r, c).real()) + ',';
          text += covfock::format_double(m(r, c).imag()) + '\n';
        }
      }
    };
    rows("fock", block);
    if (rephase) rows("minkowski", mink);
  } else {
    JsonWriter w;
    w.begin_object();
    write_header(w, "boost", cfg);
    w.key("axis").value(axis);
    w.key("alpha").value(alpha);
    w.key("level").value(level);
    auto matrix = [&w](const Eigen::MatrixXcd& m) {
      w.begin_array();
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        w.begin_array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          w.begin_array();
          w.value(m(r, c).real());
          w.value(m(r, c).imag());
          w.end_array();
        }
        w.end_array();
      }
      w.end_array();
    };
    w.key("fock_block");
    matrix(block);
    if (rephase) {
      w.key("minkowski_block");
      matrix(mink);
    }
    w.end_object();
    text = w.take();
  }
  if (!write_output(cfg, text)) {
    return fail_usage("cannot write output file: " + cfg.out);
  }
  return kExitPass;
}

int run_decompose_command(const RunConfig& cfg, const std::string& state) {
  if (int rc = check_format(cfg); rc != kExitPass) return rc;
  const covfock::FockIndex idx = covfock::parse_fock_index(state);
  if (idx.level() > cfg.n_max) {
    return fail_usage("state level exceeds n_max");
  }
  const covfock::Decomposition dec = covfock::decompose_fock(idx, cfg.quad);

  std::string text;
  if (cfg.format == "csv") {
    text = "c,j,m,re,im,abs_sq\n";
    for (const auto& term : dec.terms) {
      text += std::to_string(term.label.c) + ',' + std::to_string(term.label.j) +
              ',' + std::to_string(term.label.m) + ',';
      text += covfock::format_double(term.coefficient.real()) + ',';
      text += covfock::format_double(term.coefficient.imag()) + ',';
      text += covfock::format_double(std::norm(term.coefficient)) + '\n';
    }
  } else {
    JsonWriter w;
    w.begin_object();
    write_header(w, "decompose", cfg);
    w.key("state").value(covfock::to_string(idx));
    w.key("level").value(idx.level());
    w.key("sum_sq").value(dec.sum_sq);
    w.key("terms").begin_array();
    for (const auto& term : dec.terms) {
      w.begin_object();
      w.key("c").value(term.label.c);
      w.key("j").value(term.label.j);
      w.key("m").value(term.label.m);
      w.key("re").value(term.coefficient.real());
      w.key("im").value(term.coefficient.imag());
      w.key("abs_sq").value(std::norm(term.coefficient));
      w.end_object();
    }
    w.end_array();
    w.end_object();
    text = w.take();
  }
  if (!write_output(cfg, text)) {
    return fail_usage("cannot write output file: " + cfg.out);
  }
  return kExitPass;
}

struct CoeffTerm {
  covfock::FockIndex fock;
  Complex coeff;
};

std::vector<CoeffTerm> load_coeff_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coefficient file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("coefficient file is not valid JSON: " +
                                std::string(e.what()));
  }
  if (!doc.is_array() || doc.empty()) {
    throw std::invalid_argument("coefficient file must be a non-empty JSON array");
  }
  std::vector<CoeffTerm> terms;
  for (const auto& item : doc) {
    if (!item.contains("fock") || !item["fock"].is_array() ||
        item["fock"].size() != 4) {
      throw std::invalid_argument("each coefficient entry needs fock: [n1,n2,n3,n4]");
    }
    CoeffTerm term;
    term.fock = covfock::FockIndex{item["fock"][0].get<int>(),
                                   item["fock"][1].get<int>(),
                                   item["fock"][2].get<int>(),
                                   item["fock"][3].get<int>()};
    for (int axis = 1; axis <= 4; ++axis) {
      if (term.fock.occupation(axis) < 0) {
        throw std::invalid_argument("occupation numbers must be non-negative");
      }
    }
    term.coeff = Complex(item.value("re", 0.0), item.value("im", 0.0));
    terms.push_back(term);
  }
  return terms;
}

struct GridFlags {
  std::string axis;
  double min = -4.0;
  double max = 4.0;
  int count = 81;
  std::vector<double> fix;  // the other three coordinates, canonical order
};

int run_sample_command(const RunConfig& cfg, const std::string& state,
                       const std::string& label_text, const std::string& coeff_path,
                       const GridFlags& grid) {
  if (int rc = check_format(cfg); rc != kExitPass) return rc;
  const int modes = int(!state.empty()) + int(!label_text.empty()) +
                    int(!coeff_path.empty());
  if (modes != 1) {
    return fail_usage("sample needs exactly one of --state, --label, --coeffs");
  }
  if (grid.count < 1) {
    return fail_usage("count must be at least 1");
  }
  if (!(grid.min <= grid.max)) {
    return fail_usage("min must not exceed max");
  }
  if (grid.fix.size() != 3) {
    return fail_usage("fix needs exactly three values");
  }

  const bool hyper = !label_text.empty();
  const std::vector<std::string> names =
      hyper ? std::vector<std::string>{"r", "u", "theta", "phi"}
            : std::vector<std::string>{"x1", "x2", "x3", "x4"};
  int varying = -1;
  for (int i = 0; i < 4; ++i) {
    if (grid.axis == names[i]) varying = i;
  }
  if (varying < 0) {
    return fail_usage("axis must be one of " + names[0] + ", " + names[1] + ", " +
                      names[2] + ", " + names[3]);
  }

  covfock::IrrepLabel label;
  covfock::FockIndex fock;
  std::vector<CoeffTerm> coeffs;
  std::string mode;
  std::string source;
  if (hyper) {
    label = covfock::parse_irrep_label(label_text);
    covfock::validate_label(label);
    mode = "label";
    source = covfock::to_string(label);
  } else if (!state.empty()) {
    fock = covfock::parse_fock_index(state);
    mode = "fock";
    source = covfock::to_string(fock);
  } else {
    coeffs = load_coeff_file(coeff_path);
    mode = "coeffs";
    source = coeff_path;
  }

  const double step = grid.count > 1 ? (grid.max - grid.min) / (grid.count - 1) : 0.0;
  std::vector<std::array<double, 4>> points(static_cast<std::size_t>(grid.count));
  for (int k = 0; k < grid.count; ++k) {
    std::array<double, 4> coord{};
    int fixed = 0;
    for (int i = 0; i < 4; ++i) {
      coord[static_cast<std::size_t>(i)] =
          i == varying ? grid.min + step * k : grid.fix[static_cast<std::size_t>(fixed++)];
    }
    points[static_cast<std::size_t>(k)] = coord;
  }
  if (hyper) {
    for (const auto& p : points) {
      if (p[0] < 0.0) return fail_usage("r must be non-negative");
      if (std::abs(p[1]) > 1.0) return fail_usage("u must lie in [-1, 1]");
    }
  }

  const bool complex_out = hyper || mode == "coeffs";
  std::vector<Complex> values(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& p = points[k];
    if (hyper) {
      values[k] = covfock::irrep_wavefunction(
          label, covfock::HyperPoint{p[0], p[1], p[2], p[3]});
    } else {
      const covfock::CartesianPoint cart{p[0], p[1], p[2], p[3]};
      if (mode == "fock") {
        values[k] = covfock::fock_wavefunction(fock, cart, cfg.hbar);
      } else {
        Complex acc(0.0, 0.0);
        for (const auto& term : coeffs) {
          acc += term.coeff * covfock::fock_wavefunction(term.fock, cart, cfg.hbar);
        }
        values[k] = acc;
      }
    }
  }

  std::string text;
  if (cfg.format == "csv") {
    text = names[0] + ',' + names[1] + ',' + names[2] + ',' + names[3];
    text += complex_out ? ",re,im\n" : ",value\n";
    for (std::size_t k = 0; k < points.size(); ++k) {
      for (const double c : points[k]) text += covfock::format_double(c) + ',';
      text += covfock::format_double(values[k].real());
      if (complex_out) text += ',' + covfock::format_double(values[k].imag());
      text += '\n';
    }
  } else {
    JsonWriter w;
    w.begin_object();
    write_header(w, "sample", cfg);
    w.key("mode").value(mode);
    w.key("state").value(source);
    w.key("axis").value(grid.axis);
    w.key("count").value(grid.count);
    w.key("points").begin_array();
    for (std::size_t k = 0; k < points.size(); ++k) {
      w.begin_object();
      for (int i = 0; i < 4; ++i) {
        w.key(names[static_cast<std::size_t>(i)])
            .value(points[k][static_cast<std::size_t>(i)]);
      }
      if (complex_out) {
        w.key("re").value(values[k].real());
        w.key("im").value(values[k].imag());
      } else {
        w.key("value").value(values[k].real());
      }
      w.end_object();
    }
    w.end_array();
    w.end_object();
    text = w.take();
  }
  if (!write_output(cfg, text)) {
    return fail_usage("cannot write output file: " + cfg.out);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covariant oscillator toolbox"};
  app.set_version_flag("--version", covfock::kVersion);
  app.require_subcommand(1);

  CommonFlags verify_flags;
  CLI::App* verify = app.add_subcommand("verify", "Run every invariant suite");
  verify_flags.attach(verify);

  CommonFlags boost_flags;
  int boost_axis = 3;
  double boost_alpha = 0.5;
  int boost_level = 1;
  CLI::App* boost = app.add_subcommand("boost", "Finite boost level block");
  boost_flags.attach(boost);
  boost->add_option("--axis", boost_axis, "Boosted spatial axis (1..3)")
      ->capture_default_str();
  boost->add_option("--alpha", boost_alpha, "Rapidity")->capture_default_str();
  boost->add_option("--level", boost_level, "Level block to emit")
      ->capture_default_str();

  CommonFlags decompose_flags;
  std::string decompose_state;
  CLI::App* decompose =
      app.add_subcommand("decompose", "Expand a Fock state over irrep labels");
  decompose_flags.attach(decompose);
  decompose->add_option("--state", decompose_state, "Fock index n1,n2,n3;n4")
      ->required();

  CommonFlags sample_flags;
  std::string sample_state;
  std::string sample_label;
  std::string sample_coeffs;
  GridFlags grid;
  grid.fix = {0.0, 0.0, 0.0};
  CLI::App* sample =
      app.add_subcommand("sample", "Evaluate a wavefunction on a 1D slice");
  sample_flags.attach(sample);
  sample->add_option("--state", sample_state, "Fock index n1,n2,n3;n4");
  sample->add_option("--label", sample_label, "Irrep label n;c;j,m");
  sample->add_option("--coeffs", sample_coeffs,
                     "JSON file of {fock: [n1,n2,n3,n4], re, im} terms");
  sample->add_option("--axis", grid.axis,
                     "Varying coordinate: x1..x4 (Cartesian) or r,u,theta,phi")
      ->required();
  sample->add_option("--min", grid.min, "Slice start")->capture_default_str();
  sample->add_option("--max", grid.max, "Slice end")->capture_default_str();
  sample->add_option("--count", grid.count, "Number of points")
      ->capture_default_str();
  sample->add_option("--fix", grid.fix,
                     "Fixed values of the other three coordinates, in order")
      ->delimiter(',')
      ->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    std::cout << error_record(e.what());
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      verify_flags.finalize();
      covfock::validate_config(verify_flags.cfg);
      return run_verify_command(verify_flags.cfg);
    }
    if (boost->parsed()) {
      boost_flags.finalize();
      return run_boost_command(boost_flags.cfg, boost_axis, boost_alpha,
                               boost_level);
    }
    if (decompose->parsed()) {
      decompose_flags.finalize();
      return run_decompose_command(decompose_flags.cfg, decompose_state);
    }
    if (sample->parsed()) {
      sample_flags.finalize();
      return run_sample_command(sample_flags.cfg, sample_state, sample_label,
                                sample_coeffs, grid);
    }
  } catch (const std::exception& e) {
    return fail_usage(e.what());
  }
  return fail_usage("no subcommand given");
}
