#include "fim/inference.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fim {

namespace {

std::string singular_message(double margin) {
  std::ostringstream msg;
  msg << "information matrix is singular or near-singular (singularity margin " << margin
      << " < " << kInversionThreshold
      << "); the AR and MA polynomials likely share a common root, so a "
         "lower-order model is observationally equivalent and the parameter "
         "covariance does not exist";
  return msg.str();
}

Matrix symmetric_inverse(const InformationMatrix &info) {
  try {
    return cholesky_inverse(info.entries());
  } catch (const NumericalError &) {
    // Margin check already passed; fall through to the pivoted solve.
  }
  Matrix inv = fully_pivoted_solve(info.entries(), Matrix::identity(info.order()));
  // Symmetrize: the exact inverse is symmetric, the solve is not bit-exactly so.
  for (int i = 0; i < info.order(); ++i)
    for (int j = 0; j < i; ++j) {
      const double v = 0.5 * (inv(i, j) + inv(j, i));
      inv(i, j) = v;
      inv(j, i) = v;
    }
  return inv;
}

}  // namespace

Matrix invert_information(const InformationMatrix &info) {
  if (info.order() < 1) throw ArgumentError("invert_information: matrix order must be >= 1");
  const SpectralDiagnostics d = diagnostics(info);
  if (d.singularity_margin < kInversionThreshold)
    throw SingularityError(singular_message(d.singularity_margin));
  return symmetric_inverse(info);
}

AsymptoticCovariance asymptotic_covariance(const ArmaModel &model, std::int64_t n, double tol) {
  if (n < 1) throw ArgumentError("asymptotic_covariance: n must be >= 1");
  AsymptoticCovariance cov;
  cov.n = n;

  const InformationMatrix info = information_matrix(model, tol);
  const int order = info.order();
  if (order == 0) return cov;  // p = q = 0: nothing estimated, empty matrices

  const SpectralDiagnostics d = diagnostics(info);
  if (d.singularity_margin < kInversionThreshold)
    throw SingularityError(singular_message(d.singularity_margin), detect_common_roots(model));

  const Matrix inv = symmetric_inverse(info);
  cov.matrix = Matrix(order, order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) cov.matrix(i, j) = inv(i, j) / static_cast<double>(n);

  cov.standard_errors.resize(order);
  for (int i = 0; i < order; ++i) cov.standard_errors[i] = std::sqrt(cov.matrix(i, i));

  cov.correlations = Matrix(order, order);
  for (int i = 0; i < order; ++i) {
    cov.correlations(i, i) = 1.0;
    for (int j = 0; j < i; ++j) {
      const double denom = cov.standard_errors[i] * cov.standard_errors[j];
      const double r = std::clamp(cov.matrix(i, j) / denom, -1.0, 1.0);
      cov.correlations(i, j) = r;
      cov.correlations(j, i) = r;
    }
  }
  return cov;
}

}  // namespace fim
