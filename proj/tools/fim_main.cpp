// fim: Fisher information matrices of ARMA models, redundancy detection,
// singularity certificates, and asymptotic parameter covariances.
//
// Coefficients follow the Box-Jenkins convention everywhere:
//   --phi 0.8 -0.15   means   phi(B) = 1 - 0.8B + 0.15B^2.
//
// Exit codes: 0 success, 1 parse error, 2 invalid (nonstationary) model,
// 3 redundant/singular, 4 no certificate exists, 5 verification failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fim/errors.hpp"
#include "fim/inference.hpp"
#include "fim/json_io.hpp"
#include "fim/montecarlo.hpp"
#include "fim/redundancy.hpp"

namespace {

using nlohmann::json;

constexpr const char *kSignConventionHelp =
    "Coefficients use the Box-Jenkins sign convention: `--phi 0.8 -0.15` means "
    "phi(B) = 1 - 0.8B + 0.15B^2 (note the subtraction). Example: "
    "`fim compute --phi 0.5 --theta 0.4`.";

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt(const std::complex<double> &z) {
  return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

struct ModelOptions {
  std::vector<double> phi;
  std::vector<double> theta;
  std::string model_file;
  double margin = fim::kDefaultStationarityMargin;
  double tol_reconstruct = fim::kDefaultReconstructTol;

  void attach(CLI::App *cmd) {
    auto *phi_opt = cmd->add_option("--phi", phi, "AR coefficients phi_1..phi_p (Box-Jenkins)")
                        ->expected(-1);
    auto *theta_opt =
        cmd->add_option("--theta", theta, "MA coefficients theta_1..theta_q (Box-Jenkins)")
            ->expected(-1);
    cmd->add_option("--model", model_file, "JSON file with {\"phi\": [...], \"theta\": [...]}")
        ->excludes(phi_opt)
        ->excludes(theta_opt);
    cmd->add_option("--margin", margin, "stationarity/invertibility margin, roots must satisfy |G| < 1 - margin")
        ->capture_default_str();
    cmd->add_option("--tol-reconstruct", tol_reconstruct,
                    "relative tolerance for the root-product reconstruction check")
        ->capture_default_str();
  }

  fim::ArmaModel build() const {
    if (!model_file.empty()) {
      std::ifstream in(model_file);
      if (!in) throw fim::ArgumentError("cannot open model file: " + model_file);
      json j;
      try {
        in >> j;
      } catch (const json::exception &e) {
        throw fim::ArgumentError("invalid JSON in " + model_file + ": " + e.what());
      }
      std::vector<double> file_phi, file_theta;
      if (j.contains("phi")) file_phi = j.at("phi").get<std::vector<double>>();
      if (j.contains("theta")) file_theta = j.at("theta").get<std::vector<double>>();
      return fim::ArmaModel(fim::Polynomial(file_phi), fim::Polynomial(file_theta), margin,
                            tol_reconstruct);
    }
    return fim::ArmaModel(fim::Polynomial(phi), fim::Polynomial(theta), margin, tol_reconstruct);
  }
};

std::vector<std::string> parameter_names(int p, int q) {
  std::vector<std::string> names;
  for (int i = 1; i <= p; ++i) names.push_back("phi" + std::to_string(i));
  for (int j = 1; j <= q; ++j) names.push_back("theta" + std::to_string(j));
  return names;
}

void print_matrix_text(const fim::Matrix &m, const std::vector<std::string> &names) {
  std::printf("%14s", "");
  for (const std::string &n : names) std::printf(" %14s", n.c_str());
  std::printf("\n");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::printf("%14s", names[i].c_str());
    for (std::size_t j = 0; j < m.cols(); ++j) std::printf(" %14s", fmt(m(i, j)).c_str());
    std::printf("\n");
  }
}

void print_matrix_csv(const fim::Matrix &m, const std::vector<std::string> &names,
                      std::ostream &out) {
  for (std::size_t j = 0; j < names.size(); ++j)
    out << names[j] << (j + 1 < names.size() ? "," : "\n");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out << fmt(m(i, j)) << (j + 1 < m.cols() ? "," : "\n");
}

void print_report_text(const fim::RedundancyReport &report) {
  std::printf("verdict: %s\n",
              report.verdict == fim::Verdict::redundant ? "redundant" : "not redundant");
  std::printf("root pairing tolerance: %s\n", fmt(report.tol_root).c_str());
  if (report.paired_roots.empty()) {
    std::printf("paired roots: none (p = 0 or q = 0)\n");
  } else {
    std::printf("paired roots (min-total-gap assignment):\n");
    for (const fim::RootPair &pair : report.paired_roots)
      std::printf("  phi %s  ~  theta %s   gap %s%s\n", fmt(pair.phi_root).c_str(),
                  fmt(pair.theta_root).c_str(), fmt(pair.gap).c_str(),
                  pair.gap <= report.tol_root ? "   [common root]" : "");
  }
  std::printf("resultant magnitude: %s\n", fmt(report.resultant_magnitude).c_str());
  if (report.near_redundant)
    std::printf("warning: nearly redundant (smallest gap %s); covariances will be "
                "numerically explosive\n",
                fmt(report.min_gap()).c_str());
}

// ---------------------------------------------------------------- compute --

struct ComputeOptions {
  ModelOptions model;
  double tol = fim::kDefaultEntryTol;
  double singular_threshold = fim::kSingularityThreshold;
  bool as_json = false;
  bool as_csv = false;
};

int run_compute(const ComputeOptions &opt) {
  const fim::ArmaModel model = opt.model.build();
  const fim::InformationMatrix info = fim::information_matrix(model, opt.tol);

  if (info.order() == 0) {
    if (opt.as_json) {
      json j{{"order", 0},       {"p", 0},           {"q", 0},
             {"entries", json::array()},             {"eigenvalues", json::array()},
             {"determinant", 1.0},                   {"condition_number", 1.0},
             {"singularity_margin", 1.0},            {"note", "p = q = 0: trivially nonsingular"}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::printf("information matrix of order 0 (p = 0, q = 0): trivially nonsingular\n");
    }
    return 0;
  }

  const fim::SpectralDiagnostics diag = fim::diagnostics(info);
  const bool singular = diag.singular(opt.singular_threshold);

  if (opt.as_json) {
    json j = fim::information_to_json(info, diag);
    if (singular)
      j["warning"] = "singularity margin below threshold: the model appears redundant "
                     "(common AR/MA roots); run `fim check`";
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  const std::vector<std::string> names = parameter_names(info.p(), info.q());
  if (opt.as_csv) {
    print_matrix_csv(info.entries(), names, std::cout);
  } else {
    std::printf("information matrix, order %d (p = %d, q = %d)\n", info.order(), info.p(),
                info.q());
    print_matrix_text(info.entries(), names);
    std::printf("eigenvalues:");
    for (double ev : diag.eigenvalues) std::printf(" %s", fmt(ev).c_str());
    std::printf("\ndeterminant: %s\n", fmt(diag.determinant).c_str());
    std::printf("condition number: %s\n", fmt(diag.condition_number).c_str());
    std::printf("singularity margin: %s\n", fmt(diag.singularity_margin).c_str());
  }
  if (singular)
    std::printf("warning: singularity margin %s is below %s: the model appears redundant "
                "(common AR/MA roots); run `fim check`\n",
                fmt(diag.singularity_margin).c_str(), fmt(opt.singular_threshold).c_str());
  return 0;
}

// -------------------------------------------------------------- covariance --

struct CovarianceOptions {
  ModelOptions model;
  std::int64_t n = 0;
  double tol = fim::kDefaultEntryTol;
  bool as_json = false;
  bool as_csv = false;
};

int run_covariance(const CovarianceOptions &opt) {
  const fim::ArmaModel model = opt.model.build();
  fim::AsymptoticCovariance cov;
  try {
    cov = fim::asymptotic_covariance(model, opt.n, opt.tol);
  } catch (const fim::SingularityError &e) {
    if (opt.as_json) {
      json j{{"error", e.what()}};
      if (e.report()) j["redundancy_report"] = fim::report_to_json(*e.report());
      std::cout << j.dump(2) << "\n";
    } else {
      std::fprintf(stderr, "error: %s\n", e.what());
      if (e.report()) print_report_text(*e.report());
    }
    return 3;
  }

  if (opt.as_json) {
    std::cout << fim::covariance_to_json(cov).dump(2) << "\n";
    return 0;
  }
  const std::vector<std::string> names = parameter_names(model.p(), model.q());
  if (opt.as_csv) {
    print_matrix_csv(cov.matrix, names, std::cout);
    return 0;
  }
  if (cov.matrix.empty()) {
    std::printf("no parameters to estimate (p = q = 0)\n");
    return 0;
  }
  std::printf("asymptotic covariance for series length n = %lld\n",
              static_cast<long long>(cov.n));
  print_matrix_text(cov.matrix, names);
  std::printf("standard errors:\n");
  for (std::size_t i = 0; i < names.size(); ++i)
    std::printf("  %-8s %s\n", names[i].c_str(), fmt(cov.standard_errors[i]).c_str());
  std::printf("correlations:\n");
  print_matrix_text(cov.correlations, names);
  return 0;
}

// ------------------------------------------------------------------- check --

struct CheckOptions {
  ModelOptions model;
  double tol_root = fim::kDefaultRootTol;
  bool as_json = false;
};

int run_check(const CheckOptions &opt) {
  const fim::ArmaModel model = opt.model.build();
  const fim::RedundancyReport report = fim::detect_common_roots(model, opt.tol_root);
  if (opt.as_json)
    std::cout << fim::report_to_json(report).dump(2) << "\n";
  else
    print_report_text(report);
  return report.verdict == fim::Verdict::redundant ? 3 : 0;
}

// ----------------------------------------------------------------- certify --

struct CertifyOptions {
  ModelOptions model;
  double tol_root = fim::kDefaultRootTol;
  double tol = fim::kDefaultEntryTol;
  bool as_json = false;
};

int run_certify(const CertifyOptions &opt) {
  const fim::ArmaModel model = opt.model.build();
  const fim::RedundancyReport report = fim::detect_common_roots(model, opt.tol_root);
  if (report.verdict == fim::Verdict::not_redundant) {
    std::fprintf(stderr, "no null certificate exists: the model is not redundant, so its "
                         "information matrix is nonsingular\n");
    return 4;
  }
  const fim::RootPair &best = report.paired_roots.front();
  const std::complex<double> g = 0.5 * (best.phi_root + best.theta_root);
  const fim::InformationMatrix info = fim::information_matrix(model, opt.tol);
  const fim::NullCertificate cert = fim::null_certificate(model, g, info, opt.tol_root);

  if (opt.as_json) {
    json j = fim::certificate_to_json(cert);
    j["common_root"] = json::array({g.real(), g.imag()});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::printf("null certificate for common inverse root %s\n", fmt(g).c_str());
  std::printf("alpha (scale %s): 1", fmt(cert.alpha.scale).c_str());
  for (int k = 1; k <= cert.alpha.poly.degree(); ++k)
    std::printf(" %c %s B^%d", cert.alpha.poly.coeff(k) >= 0 ? '-' : '+',
                fmt(std::abs(cert.alpha.poly.coeff(k))).c_str(), k);
  std::printf("\nbeta  (scale %s): 1", fmt(cert.beta.scale).c_str());
  for (int k = 1; k <= cert.beta.poly.degree(); ++k)
    std::printf(" %c %s B^%d", cert.beta.poly.coeff(k) >= 0 ? '-' : '+',
                fmt(std::abs(cert.beta.poly.coeff(k))).c_str(), k);
  std::printf("\nz:");
  for (double v : cert.z) std::printf(" %s", fmt(v).c_str());
  std::printf("\nresidual ||Iz||/||z||: %s\n", fmt(cert.residual).c_str());
  return 0;
}

// ------------------------------------------------------------------ reduce --

struct ReduceOptions {
  ModelOptions model;
  double tol_root = fim::kDefaultRootTol;
};

int run_reduce(const ReduceOptions &opt) {
  const fim::ArmaModel model = opt.model.build();
  const fim::ArmaModel reduced = fim::reduce_model(model, opt.tol_root);
  std::cout << fim::model_to_json(reduced).dump() << "\n";
  return 0;
}

// ------------------------------------------------------------------ verify --

struct VerifyOptions {
  ModelOptions model;
  fim::SimulationConfig cfg{.n = 1000000, .burn_in = -1, .seed = 1, .sigma = 1.0};
  double se_multiplier = 4.0;
  double tol = fim::kDefaultEntryTol;
  bool as_json = false;
};

int run_verify(const VerifyOptions &opt) {
  const fim::ArmaModel model = opt.model.build();
  fim::SimulationConfig cfg = opt.cfg;
  if (cfg.burn_in < 0) cfg.burn_in = fim::default_burn_in(model);
  const fim::McComparison cmp = fim::mc_compare(model, cfg, opt.se_multiplier, opt.tol);

  if (opt.as_json) {
    json j = fim::comparison_to_json(cmp);
    j["seed"] = cfg.seed;
    j["burn_in"] = cfg.burn_in;
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("Monte Carlo check: %lld effective samples, burn-in %lld, seed %llu, "
                "generator %s\n",
                static_cast<long long>(cmp.n_effective), static_cast<long long>(cfg.burn_in),
                static_cast<unsigned long long>(cfg.seed), cmp.generator.c_str());
    const std::vector<std::string> names = parameter_names(model.p(), model.q());
    if (!names.empty()) {
      std::printf("analytic:\n");
      print_matrix_text(cmp.analytic, names);
      std::printf("sample:\n");
      print_matrix_text(cmp.sample, names);
      std::printf("per-entry deviation in batch-SE units:\n");
      print_matrix_text(cmp.deviation_se, names);
    }
    std::printf("max deviation: %s SE (tolerance %s)\n", fmt(cmp.max_deviation_se).c_str(),
                fmt(cmp.tol_se_multiplier).c_str());
    std::printf("%s\n", cmp.pass ? "PASS" : "FAIL");
  }
  return cmp.pass ? 0 : 5;
}

// ---------------------------------------------------------------- simulate --

struct SimulateOptions {
  ModelOptions model;
  fim::SimulationConfig cfg{.n = 1000, .burn_in = -1, .seed = 1, .sigma = 1.0};
  std::string out_file;
};

int run_simulate(const SimulateOptions &opt) {
  const fim::ArmaModel model = opt.model.build();
  fim::SimulationConfig cfg = opt.cfg;
  if (cfg.burn_in < 0) cfg.burn_in = fim::default_burn_in(model);
  const std::vector<double> z = fim::simulate_arma(model, cfg);

  std::ofstream file;
  std::ostream *out = &std::cout;
  if (!opt.out_file.empty()) {
    file.open(opt.out_file);
    if (!file) throw fim::ArgumentError("cannot open output file: " + opt.out_file);
    out = &file;
  }
  *out << "z\n";
  for (double v : z) *out << fmt(v) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Fisher information matrices of ARMA models: computation, inversion to "
               "asymptotic covariances, redundancy detection, and singularity "
               "certificates.\n\n" +
               std::string(kSignConventionHelp)};
  app.require_subcommand(1);

  ComputeOptions compute_opt;
  auto *compute = app.add_subcommand(
      "compute", "Information matrix I(phi, theta) with spectral diagnostics");
  compute_opt.model.attach(compute);
  compute->add_option("--tol", compute_opt.tol, "series truncation tolerance for matrix entries")
      ->capture_default_str();
  compute->add_option("--singular-threshold", compute_opt.singular_threshold,
                      "singularity margin below which the matrix is classified singular")
      ->capture_default_str();
  auto *cj = compute->add_flag("--json", compute_opt.as_json, "machine-readable JSON output");
  compute->add_flag("--csv", compute_opt.as_csv, "CSV matrix output")->excludes(cj);

  CovarianceOptions cov_opt;
  auto *covariance = app.add_subcommand(
      "covariance", "Asymptotic parameter covariance: inverse information matrix / n");
  cov_opt.model.attach(covariance);
  covariance->add_option("--n", cov_opt.n, "observed series length")->required();
  covariance->add_option("--tol", cov_opt.tol, "series truncation tolerance")
      ->capture_default_str();
  auto *vj = covariance->add_flag("--json", cov_opt.as_json, "machine-readable JSON output");
  covariance->add_flag("--csv", cov_opt.as_csv, "CSV matrix output")->excludes(vj);

  CheckOptions check_opt;
  auto *check = app.add_subcommand("check", "Detect model redundancy (common AR/MA roots)");
  check_opt.model.attach(check);
  check->add_option("--tol-root", check_opt.tol_root, "gap below which roots count as common")
      ->capture_default_str();
  check->add_flag("--json", check_opt.as_json, "machine-readable JSON output");

  CertifyOptions certify_opt;
  auto *certify = app.add_subcommand(
      "certify", "Emit the null-space certificate z with Iz = 0 for a redundant model");
  certify_opt.model.attach(certify);
  certify->add_option("--tol-root", certify_opt.tol_root, "gap below which roots count as common")
      ->capture_default_str();
  certify->add_option("--tol", certify_opt.tol, "series truncation tolerance")
      ->capture_default_str();
  certify->add_flag("--json", certify_opt.as_json, "machine-readable JSON output");

  ReduceOptions reduce_opt;
  auto *reduce = app.add_subcommand(
      "reduce", "Cancel common AR/MA factors and print the minimal model JSON");
  reduce_opt.model.attach(reduce);
  reduce->add_option("--tol-root", reduce_opt.tol_root, "gap below which roots count as common")
      ->capture_default_str();

  VerifyOptions verify_opt;
  auto *verify = app.add_subcommand(
      "verify", "Cross-check the analytic matrix against the simulation oracle");
  verify_opt.model.attach(verify);
  verify->add_option("--n", verify_opt.cfg.n, "post-burn-in sample count")
      ->capture_default_str();
  verify->add_option("--burn-in", verify_opt.cfg.burn_in,
                     "warmup steps to discard (default: auto from root moduli)");
  verify->add_option("--seed", verify_opt.cfg.seed, "64-bit generator seed")
      ->capture_default_str();
  verify->add_option("--sigma", verify_opt.cfg.sigma, "innovation standard deviation")
      ->capture_default_str();
  verify->add_option("--se-mult", verify_opt.se_multiplier,
                     "pass threshold in batch-SE units")
      ->capture_default_str();
  verify->add_option("--tol", verify_opt.tol, "series truncation tolerance")
      ->capture_default_str();
  verify->add_flag("--json", verify_opt.as_json, "machine-readable JSON output");

  SimulateOptions sim_opt;
  auto *simulate = app.add_subcommand("simulate", "Simulate an ARMA series and export CSV");
  sim_opt.model.attach(simulate);
  simulate->add_option("--n", sim_opt.cfg.n, "series length")->capture_default_str();
  simulate->add_option("--burn-in", sim_opt.cfg.burn_in,
                       "warmup steps to discard (default: auto from root moduli)");
  simulate->add_option("--seed", sim_opt.cfg.seed, "64-bit generator seed")
      ->capture_default_str();
  simulate->add_option("--sigma", sim_opt.cfg.sigma, "innovation standard deviation")
      ->capture_default_str();
  simulate->add_option("--out", sim_opt.out_file, "output CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
    if (compute->parsed()) return run_compute(compute_opt);
    if (covariance->parsed()) return run_covariance(cov_opt);
    if (check->parsed()) return run_check(check_opt);
    if (certify->parsed()) return run_certify(certify_opt);
    if (reduce->parsed()) return run_reduce(reduce_opt);
    if (verify->parsed()) return run_verify(verify_opt);
    if (simulate->parsed()) return run_simulate(sim_opt);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // help/version exit 0, real parse errors exit 1
  } catch (const fim::SingularityError &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const fim::StationarityError &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const fim::NumericalError &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const fim::Error &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
