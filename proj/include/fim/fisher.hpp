#ifndef FIM_FISHER_HPP
#define FIM_FISHER_HPP

#include <vector>

#include "fim/exec.hpp"
#include "fim/linalg.hpp"
#include "fim/model.hpp"

namespace fim {

/// Default tolerance for truncated-series matrix entries.
inline constexpr double kDefaultEntryTol = 1e-12;
/// singularity_margin below this classifies the matrix as singular.
inline constexpr double kSingularityThreshold = 1e-10;

/// MA-infinity weights of 1/p(B): psi_0 = 1 and p(B) * sum psi_k B^k = 1.
struct WeightSequence {
  std::vector<double> values;  // psi_0 .. psi_n
  /// Geometric estimate of |sum_{k>n} psi_k|, from the max inverse-root
  /// modulus rho:  rho^(n+1) * max_k |psi_k| / (1 - rho).
  double truncation_error_bound = 0.0;
};

/// psi_k for k = 0..n via the convolution recursion
/// psi_k = sum_{j=1..min(k,d)} c_j psi_{k-j}.  Requires p stationary.
WeightSequence psi_weights(const Polynomial &p, int n);

/// Exact autocovariances gamma(0..max_lag), unit innovation variance, of the
/// AR process p(B) x_t = a_t, solved from the (d+1)-dimensional Yule-Walker
/// system and extended by gamma(k) = sum_j c_j gamma(k-j) for k > d.
/// The noise sign does not matter, so these also cover p(B) x_t = -a_t.
std::vector<double> ar_autocovariance(const Polynomial &p, int max_lag);

/// E[v_t u_{t+m}] / sigma^2 for the derivative processes phi(B) v_t = -a_t
/// and theta(B) u_t = a_t:
///   -sum_{k >= max(0,-m)} psi_k pi_{k+m}
/// with psi expanding 1/phi and pi expanding 1/theta.  The series is
/// truncated adaptively (N = 64, doubled) until the geometric tail bound and
/// the change between doublings are both below tol; throws NumericalError if
/// N reaches 2^20 without converging.
double cross_covariance(const Polynomial &phi, const Polynomial &theta, int m,
                        double tol = kDefaultEntryTol);

/// The (p+q)-square Fisher information matrix of an ARMA model, independent
/// of the innovation variance.  Row/column order is
/// (v_{t-1}, ..., v_{t-p}, u_{t-1}, ..., u_{t-q}); this ordering is part of
/// the public contract.
class InformationMatrix {
 public:
  InformationMatrix() = default;
  InformationMatrix(int p, int q, Matrix entries)
      : p_(p), q_(q), entries_(std::move(entries)) {}

  int p() const { return p_; }
  int q() const { return q_; }
  int order() const { return p_ + q_; }
  const Matrix &entries() const { return entries_; }

 private:
  int p_ = 0;
  int q_ = 0;
  Matrix entries_;
};

/// Assembles the information matrix:
///   - v-block (i, j) = gamma_v(|i-j|) from the Yule-Walker solve for phi,
///   - u-block likewise for theta,
///   - cross entry (i, p+j) = cross_covariance(phi, theta, i-j, tol),
/// with symmetry enforced by construction.  p = q = 0 yields the empty
/// order-0 matrix (trivially nonsingular).  Entries are pure per-entry
/// functions, so the parallel and serial paths are bit-identical.
InformationMatrix information_matrix(const ArmaModel &model, double tol = kDefaultEntryTol,
                                     Exec exec = Exec::parallel);

/// Spectral summary of an information matrix.
struct SpectralDiagnostics {
  std::vector<double> eigenvalues;  // ascending
  double determinant = 1.0;
  double condition_number = 1.0;  // lambda_max / lambda_min, +inf when singular
  double singularity_margin = 1.0;  // lambda_min / lambda_max

  bool singular(double threshold = kSingularityThreshold) const {
    return singularity_margin < threshold;
  }
};

/// Full symmetric eigendecomposition of the matrix (order >= 1).
SpectralDiagnostics diagnostics(const InformationMatrix &info);

}  // namespace fim

#endif  // FIM_FISHER_HPP
