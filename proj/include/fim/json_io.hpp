#ifndef FIM_JSON_IO_HPP
#define FIM_JSON_IO_HPP

#include <json.hpp>

#include "fim/inference.hpp"
#include "fim/model.hpp"
#include "fim/montecarlo.hpp"
#include "fim/redundancy.hpp"

namespace fim {

/// JSON shapes used at the CLI boundary.  Polynomials serialize as arrays of
/// Box-Jenkins coefficients c_1..c_d ("phi"/"theta"); matrices as row-major
/// arrays with an "order" field; complex numbers as [re, im] pairs.

nlohmann::json model_to_json(const ArmaModel &model);
ArmaModel model_from_json(const nlohmann::json &j, double margin = kDefaultStationarityMargin);

nlohmann::json matrix_to_json(const Matrix &m);

nlohmann::json information_to_json(const InformationMatrix &info, const SpectralDiagnostics &diag);
nlohmann::json covariance_to_json(const AsymptoticCovariance &cov);
nlohmann::json report_to_json(const RedundancyReport &report);
nlohmann::json certificate_to_json(const NullCertificate &cert);
nlohmann::json comparison_to_json(const McComparison &cmp);

}  // namespace fim

#endif  // FIM_JSON_IO_HPP
