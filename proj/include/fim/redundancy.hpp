#ifndef FIM_REDUNDANCY_HPP
#define FIM_REDUNDANCY_HPP

#include <complex>
#include <utility>
#include <vector>

#include "fim/fisher.hpp"
#include "fim/model.hpp"

namespace fim {

/// Default absolute gap below which a phi-root and a theta-root count as
/// common (inverse roots live in the unit disk, so absolute == relative).
inline constexpr double kDefaultRootTol = 1e-6;
/// Gaps in (tol_root, kNearRedundantBand] trigger the near-redundancy warning.
inline constexpr double kNearRedundantBand = 1e-3;

enum class Verdict { redundant, not_redundant };

/// One matched (phi-root, theta-root) pair of the min-total-gap assignment.
struct RootPair {
  std::complex<double> phi_root;
  std::complex<double> theta_root;
  double gap = 0.0;  // |phi_root - theta_root|
};

/// Result of common-root detection.  The verdict is decided by root pairing
/// alone; the resultant magnitude is corroborating evidence, not a second
/// decision path.
struct RedundancyReport {
  Verdict verdict = Verdict::not_redundant;
  /// min(p, q) pairs from the optimal assignment, sorted by ascending gap.
  std::vector<RootPair> paired_roots;
  double resultant_magnitude = 1.0;
  double tol_root = kDefaultRootTol;
  /// Set when the model is not redundant but the smallest gap is within
  /// kNearRedundantBand: inverse covariances will be numerically explosive.
  bool near_redundant = false;

  double min_gap() const;
};

/// Matches the two inverse-root multisets by minimum total gap (Hungarian
/// assignment) and fills the report.  p = 0 or q = 0 is never redundant.
RedundancyReport detect_common_roots(const ArmaModel &model, double tol_root = kDefaultRootTol);

/// The cancelling polynomials of a redundant model: alpha = phi / (1 - gB),
/// beta = theta / (1 - gB) (conjugate factors removed jointly for non-real
/// g), so that alpha * theta = beta * phi.  g must be a common inverse root
/// of both polynomials within tol_root or PreconditionError is thrown.
std::pair<ScaledPolynomial, ScaledPolynomial> construct_cancelling_polynomials(
    const ArmaModel &model, std::complex<double> g, double tol_root = kDefaultRootTol);

/// A nonzero vector z with I z = 0, witnessing singularity of a redundant
/// model's information matrix.  z stacks the power-series coefficients of
/// alpha (padded to length p) and beta (padded to length q) in the matrix's
/// (v-lags, u-lags) index order; alpha_0 = beta_0 = 1 by construction.
struct NullCertificate {
  ScaledPolynomial alpha;
  ScaledPolynomial beta;
  std::vector<double> z;
  double residual = 0.0;  // ||I z||_2 / ||z||_2
  double tol_root = kDefaultRootTol;
};

/// Builds the certificate for a common inverse root g and evaluates its
/// residual against the supplied information matrix (must belong to the
/// same model).
NullCertificate null_certificate(const ArmaModel &model, std::complex<double> g,
                                 const InformationMatrix &info,
                                 double tol_root = kDefaultRootTol);

/// Deflates matched common roots (conjugate pairs jointly, representative
/// root = midpoint of the matched pair) from both polynomials, recomputing
/// roots after each deflation, until the model is no longer redundant.
/// Non-redundant inputs come back unchanged.
ArmaModel reduce_model(const ArmaModel &model, double tol_root = kDefaultRootTol);

}  // namespace fim

#endif  // FIM_REDUNDANCY_HPP
