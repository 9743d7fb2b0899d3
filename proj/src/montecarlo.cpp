#include "fim/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fim/errors.hpp"

namespace fim {

double GaussianRng::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = rng_.uniform_pos();
  const double u2 = rng_.uniform_pos();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

std::int64_t default_burn_in(const ArmaModel &model) {
  const double rho = model.max_root_modulus();
  return static_cast<std::int64_t>(
      std::ceil(10.0 * (model.p() + model.q() + 1) / (1.0 - rho)));
}

namespace {

void validate_config(const ArmaModel &model, const SimulationConfig &cfg, bool for_moments) {
  if (cfg.n < 1) throw ArgumentError("SimulationConfig: n must be positive");
  if (cfg.burn_in < 0) throw ArgumentError("SimulationConfig: burn_in must be nonnegative");
  if (!(cfg.sigma > 0.0)) throw ArgumentError("SimulationConfig: sigma must be positive");
  if (for_moments) {
    if (cfg.n < model.p() + model.q() + 1)
      throw ArgumentError("SimulationConfig: n must be at least p + q + 1");
    if (cfg.n < kMomentBatches)
      throw ArgumentError("SimulationConfig: n must allow 32 equal batches (n >= 32)");
  }
}

}  // namespace

std::vector<Matrix> kernels::moment_batch_sums_serial(const std::vector<double> &series,
                                                      std::int64_t n_used, int dim) {
  const std::int64_t m = n_used / kMomentBatches;
  std::vector<Matrix> sums(kMomentBatches, Matrix(dim, dim));
  for (int b = 0; b < kMomentBatches; ++b) {
    Matrix &s = sums[b];
    for (std::int64_t t = b * m; t < (b + 1) * m; ++t) {
      const double *row = series.data() + static_cast<std::size_t>(t) * dim;
      for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) s(i, j) += row[i] * row[j];
    }
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < i; ++j) s(i, j) = s(j, i);
  }
  return sums;
}

std::vector<Matrix> kernels::moment_batch_sums_parallel(const std::vector<double> &series,
                                                        std::int64_t n_used, int dim) {
  const std::int64_t m = n_used / kMomentBatches;
  std::vector<Matrix> sums(kMomentBatches, Matrix(dim, dim));
#pragma omp parallel for schedule(static)
  for (int b = 0; b < kMomentBatches; ++b) {
    Matrix &s = sums[b];
    for (std::int64_t t = b * m; t < (b + 1) * m; ++t) {
      const double *row = series.data() + static_cast<std::size_t>(t) * dim;
      for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) s(i, j) += row[i] * row[j];
    }
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < i; ++j) s(i, j) = s(j, i);
  }
  return sums;
}

MomentEstimate simulate_derivative_processes(const ArmaModel &model, const SimulationConfig &cfg,
                                             Exec exec) {
  validate_config(model, cfg, true);
  const int p = model.p();
  const int q = model.q();
  const int dim = p + q;

  MomentEstimate est;
  const std::int64_t m = cfg.n / kMomentBatches;
  est.n_effective = m * kMomentBatches;
  if (dim == 0) return est;

  // Unit-variance innovations: A_t scales linearly in sigma and the moment
  // matrix is divided by sigma^2, so running at sigma = 1 gives the
  // normalized estimate exactly, independent of cfg.sigma.
  GaussianRng rng(cfg.seed);
  std::vector<double> v_hist(p, 0.0);
  std::vector<double> u_hist(q, 0.0);
  std::vector<double> series(static_cast<std::size_t>(est.n_effective) * dim);

  for (std::int64_t t = 0; t < cfg.burn_in + est.n_effective; ++t) {
    if (t >= cfg.burn_in) {
      double *row = series.data() + static_cast<std::size_t>(t - cfg.burn_in) * dim;
      for (int i = 0; i < p; ++i) row[i] = v_hist[i];
      for (int j = 0; j < q; ++j) row[p + j] = u_hist[j];
    }
    const double e = rng.next();
    double v_t = -e;
    for (int i = 0; i < p; ++i) v_t += model.phi().coeff(i + 1) * v_hist[i];
    double u_t = e;
    for (int j = 0; j < q; ++j) u_t += model.theta().coeff(j + 1) * u_hist[j];
    if (p > 0) {
      std::rotate(v_hist.rbegin(), v_hist.rbegin() + 1, v_hist.rend());
      v_hist[0] = v_t;
    }
    if (q > 0) {
      std::rotate(u_hist.rbegin(), u_hist.rbegin() + 1, u_hist.rend());
      u_hist[0] = u_t;
    }
  }

  const std::vector<Matrix> sums = exec == Exec::parallel
                                       ? kernels::moment_batch_sums_parallel(series, est.n_effective, dim)
                                       : kernels::moment_batch_sums_serial(series, est.n_effective, dim);

  // Deterministic ordered reduction over batches.
  Matrix total(dim, dim);
  for (const Matrix &s : sums)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) total(i, j) += s(i, j);

  est.matrix = Matrix(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      est.matrix(i, j) = total(i, j) / static_cast<double>(est.n_effective);

  est.batch_means.assign(kMomentBatches, Matrix(dim, dim));
  for (int b = 0; b < kMomentBatches; ++b)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        est.batch_means[b](i, j) = sums[b](i, j) / static_cast<double>(m);

  est.standard_errors = Matrix(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      double mean = 0.0;
      for (int b = 0; b < kMomentBatches; ++b) mean += est.batch_means[b](i, j);
      mean /= kMomentBatches;
      double var = 0.0;
      for (int b = 0; b < kMomentBatches; ++b) {
        const double dev = est.batch_means[b](i, j) - mean;
        var += dev * dev;
      }
      var /= (kMomentBatches - 1);
      est.standard_errors(i, j) = std::sqrt(var / kMomentBatches);
    }
  return est;
}

std::vector<double> simulate_arma(const ArmaModel &model, const SimulationConfig &cfg) {
  validate_config(model, cfg, false);
  const int p = model.p();
  const int q = model.q();
  GaussianRng rng(cfg.seed);

  std::vector<double> z_hist(p, 0.0);
  std::vector<double> a_hist(q, 0.0);
  std::vector<double> out;
  out.reserve(cfg.n);
  for (std::int64_t t = 0; t < cfg.burn_in + cfg.n; ++t) {
    const double a_t = cfg.sigma * rng.next();
    double z_t = a_t;
    for (int i = 0; i < p; ++i) z_t += model.phi().coeff(i + 1) * z_hist[i];
    for (int j = 0; j < q; ++j) z_t -= model.theta().coeff(j + 1) * a_hist[j];
    if (p > 0) {
      std::rotate(z_hist.rbegin(), z_hist.rbegin() + 1, z_hist.rend());
      z_hist[0] = z_t;
    }
    if (q > 0) {
      std::rotate(a_hist.rbegin(), a_hist.rbegin() + 1, a_hist.rend());
      a_hist[0] = a_t;
    }
    if (t >= cfg.burn_in) out.push_back(z_t);
  }
  return out;
}

McComparison mc_compare(const ArmaModel &model, const SimulationConfig &cfg,
                        double tol_se_multiplier, double entry_tol, Exec exec) {
  if (!(tol_se_multiplier > 0.0))
    throw ArgumentError("mc_compare: tol_se_multiplier must be positive");
  McComparison cmp;
  cmp.tol_se_multiplier = tol_se_multiplier;

  const InformationMatrix info = information_matrix(model, entry_tol, exec);
  const MomentEstimate est = simulate_derivative_processes(model, cfg, exec);
  cmp.analytic = info.entries();
  cmp.sample = est.matrix;
  cmp.standard_errors = est.standard_errors;
  cmp.n_effective = est.n_effective;

  const int dim = info.order();
  cmp.deviation_se = Matrix(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const double diff = std::abs(cmp.analytic(i, j) - cmp.sample(i, j));
      const double se = cmp.standard_errors(i, j);
      const double dev = se > 0.0 ? diff / se
                                  : (diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
      cmp.deviation_se(i, j) = dev;
      cmp.max_deviation_se = std::max(cmp.max_deviation_se, dev);
    }
  cmp.pass = cmp.max_deviation_se <= tol_se_multiplier;
  return cmp;
}

}  // namespace fim
