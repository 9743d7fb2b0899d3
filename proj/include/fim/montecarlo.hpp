#ifndef FIM_MONTECARLO_HPP
#define FIM_MONTECARLO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fim/exec.hpp"
#include "fim/fisher.hpp"
#include "fim/model.hpp"

namespace fim {

/// Name and version of the deterministic generator, recorded in every output
/// so results can be reproduced across builds.
inline constexpr const char *kGeneratorName = "splitmix64-boxmuller-v1";

/// Number of equal batches used for batch-means standard errors.
inline constexpr int kMomentBatches = 32;

/// SplitMix64: the standard splittable 64-bit generator (finalizer constants
/// from the public domain reference implementation).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Derives an independent stream seed, e.g. for per-replication streams.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 s(seed ^ (0x5851f42d4c957f2dULL * (stream + 1)));
    return s.next();
  }

  /// Uniform double in (0, 1].
  double uniform_pos() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Standard-normal draws via the Box-Muller transform over SplitMix64,
/// entirely specified here so that identical seeds give identical streams.
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed) : rng_(seed) {}

  double next();

 private:
  SplitMix64 rng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

struct SimulationConfig {
  std::int64_t n = 0;        // post-burn-in sample count
  std::int64_t burn_in = 0;  // discarded warmup steps
  std::uint64_t seed = 0;
  double sigma = 1.0;  // innovation standard deviation
};

/// Burn-in heuristic ceil(10 (p+q+1) / (1 - rho)), rho = max inverse-root
/// modulus: geometric forgetting of the zero initial conditions.
std::int64_t default_burn_in(const ArmaModel &model);

/// Sample moment matrix of the stacked lag vector A_t with batch-means
/// standard errors.  The estimate is already normalized by sigma^2: the
/// recursions are run on unit-variance innovations, so the sigma scaling
/// cancels identically and the output is bit-independent of sigma.
struct MomentEstimate {
  Matrix matrix;           // mean of A_t A_t' / sigma^2
  Matrix standard_errors;  // per-entry batch-means SE
  std::int64_t n_effective = 0;
  std::vector<Matrix> batch_means;  // kMomentBatches per-batch entry means
  std::string generator = kGeneratorName;
};

/// Simulates phi(B) v_t = -a_t and theta(B) u_t = a_t from shared noise and
/// zero initial conditions, then averages A_t A_t' over the first
/// 32*floor(n/32) post-burn-in points.  Requires n >= max(p+q+1, 32).
/// The accumulation kernel is batched; serial and parallel execution are
/// bit-identical.
MomentEstimate simulate_derivative_processes(const ArmaModel &model, const SimulationConfig &cfg,
                                             Exec exec = Exec::parallel);

/// Simulates z_t = phi_1 z_{t-1} + ... + a_t - theta_1 a_{t-1} - ..., with
/// a_t of standard deviation sigma, zero initial conditions, burn-in
/// discarded.
std::vector<double> simulate_arma(const ArmaModel &model, const SimulationConfig &cfg);

/// Per-entry comparison of the analytic information matrix against the
/// simulation oracle, in batch-SE units.
struct McComparison {
  Matrix analytic;
  Matrix sample;
  Matrix standard_errors;
  Matrix deviation_se;  // |analytic - sample| / SE
  double max_deviation_se = 0.0;
  double tol_se_multiplier = 4.0;
  std::int64_t n_effective = 0;
  bool pass = true;
  std::string generator = kGeneratorName;
};

McComparison mc_compare(const ArmaModel &model, const SimulationConfig &cfg,
                        double tol_se_multiplier = 4.0, double entry_tol = kDefaultEntryTol,
                        Exec exec = Exec::parallel);

namespace kernels {

/// Sums of A_t A_t' over kMomentBatches contiguous equal batches of the
/// row-major series (n_used rows, dim columns).  Batch-local sums run in
/// time order and batches are independent, so the OpenMP variant is
/// bit-identical to this serial reference.
std::vector<Matrix> moment_batch_sums_serial(const std::vector<double> &series,
                                             std::int64_t n_used, int dim);
std::vector<Matrix> moment_batch_sums_parallel(const std::vector<double> &series,
                                               std::int64_t n_used, int dim);

}  // namespace kernels

}  // namespace fim

#endif  // FIM_MONTECARLO_HPP
