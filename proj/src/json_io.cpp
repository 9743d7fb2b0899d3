#include "fim/json_io.hpp"

#include "fim/errors.hpp"

namespace fim {

using nlohmann::json;

namespace {

json complex_to_json(const std::complex<double> &z) { return json::array({z.real(), z.imag()}); }

}  // namespace

json model_to_json(const ArmaModel &model) {
  return json{{"phi", model.phi().coeffs()}, {"theta", model.theta().coeffs()}};
}

ArmaModel model_from_json(const json &j, double margin) {
  if (!j.is_object()) throw ArgumentError("model JSON must be an object with phi/theta arrays");
  std::vector<double> phi, theta;
  if (j.contains("phi")) phi = j.at("phi").get<std::vector<double>>();
  if (j.contains("theta")) theta = j.at("theta").get<std::vector<double>>();
  return ArmaModel(Polynomial(phi), Polynomial(theta), margin);
}

json matrix_to_json(const Matrix &m) {
  return json{{"order", m.rows()}, {"entries", m.data()}};
}

json information_to_json(const InformationMatrix &info, const SpectralDiagnostics &diag) {
  return json{{"order", info.order()},
              {"p", info.p()},
              {"q", info.q()},
              {"entries", info.entries().data()},
              {"eigenvalues", diag.eigenvalues},
              {"determinant", diag.determinant},
              {"condition_number", diag.condition_number},
              {"singularity_margin", diag.singularity_margin}};
}

json covariance_to_json(const AsymptoticCovariance &cov) {
  return json{{"n", cov.n},
              {"order", cov.matrix.rows()},
              {"covariance", cov.matrix.data()},
              {"standard_errors", cov.standard_errors},
              {"correlations", cov.correlations.data()}};
}

json report_to_json(const RedundancyReport &report) {
  json pairs = json::array();
  for (const RootPair &pair : report.paired_roots)
    pairs.push_back(json{{"phi_root", complex_to_json(pair.phi_root)},
                         {"theta_root", complex_to_json(pair.theta_root)},
                         {"gap", pair.gap}});
  return json{{"verdict", report.verdict == Verdict::redundant ? "redundant" : "not_redundant"},
              {"paired_roots", pairs},
              {"resultant_magnitude", report.resultant_magnitude},
              {"tol_root", report.tol_root},
              {"near_redundant", report.near_redundant}};
}

json certificate_to_json(const NullCertificate &cert) {
  return json{{"alpha", {{"scale", cert.alpha.scale}, {"coeffs", cert.alpha.poly.coeffs()}}},
              {"beta", {{"scale", cert.beta.scale}, {"coeffs", cert.beta.poly.coeffs()}}},
              {"z", cert.z},
              {"residual", cert.residual},
              {"tol_root", cert.tol_root}};
}

json comparison_to_json(const McComparison &cmp) {
  return json{{"order", cmp.analytic.rows()},
              {"analytic", cmp.analytic.data()},
              {"sample", cmp.sample.data()},
              {"standard_errors", cmp.standard_errors.data()},
              {"deviation_se", cmp.deviation_se.data()},
              {"max_deviation_se", cmp.max_deviation_se},
              {"tol_se_multiplier", cmp.tol_se_multiplier},
              {"n_effective", cmp.n_effective},
              {"pass", cmp.pass},
              {"generator", cmp.generator}};
}

}  // namespace fim
