#ifndef FIM_INFERENCE_HPP
#define FIM_INFERENCE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fim/errors.hpp"
#include "fim/fisher.hpp"
#include "fim/redundancy.hpp"

namespace fim {

/// The inference module refuses to invert below this singularity margin;
/// stricter than the fisher classification threshold because inversion error
/// amplifies near the noise floor.
inline constexpr double kInversionThreshold = 1e-8;

/// Thrown when a covariance is requested for a (near-)singular information
/// matrix.  Carries the redundancy report when the model is available: the
/// usual cause is a common AR/MA root.
class SingularityError : public Error {
 public:
  SingularityError(const std::string &what, std::optional<RedundancyReport> report = std::nullopt)
      : Error(what), report_(std::move(report)) {}

  const std::optional<RedundancyReport> &report() const { return report_; }

 private:
  std::optional<RedundancyReport> report_;
};

/// Asymptotic sampling covariance of the estimated ARMA coefficients for a
/// series of length n: inverse information matrix divided by n, with
/// standard errors and correlations derived from it.
struct AsymptoticCovariance {
  std::int64_t n = 0;
  Matrix matrix;                       // I^-1 / n, parameter order as in InformationMatrix
  std::vector<double> standard_errors;  // sqrt of the diagonal
  Matrix correlations;                 // unit diagonal
};

/// Symmetric inverse with ||I * I^-1 - identity||_max <= 1e-9 on accepted
/// inputs.  Cholesky first, fully pivoted solve as fallback; below
/// kInversionThreshold the SingularityError is thrown instead of any raw
/// numerical error.
Matrix invert_information(const InformationMatrix &info);

/// Computes the information matrix, refuses near-singular models with a
/// SingularityError carrying the full RedundancyReport, and otherwise
/// returns I^-1/n with standard errors and correlations.
AsymptoticCovariance asymptotic_covariance(const ArmaModel &model, std::int64_t n,
                                           double tol = kDefaultEntryTol);

}  // namespace fim

#endif  // FIM_INFERENCE_HPP
