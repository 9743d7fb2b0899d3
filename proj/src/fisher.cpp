#include "fim/fisher.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

#include "fim/errors.hpp"

namespace fim {

namespace {

constexpr int kSeriesStart = 64;
constexpr int kSeriesCap = 1 << 20;

double max_modulus_checked(const Polynomial &p, const char *op) {
  if (p.degree() == 0) return 0.0;
  const InverseRootSet roots = inverse_roots(p);
  const double rho = roots.max_modulus();
  if (!(rho < 1.0)) {
    std::ostringstream msg;
    msg << op << ": polynomial is nonstationary (max inverse-root modulus " << rho << ")";
    throw StationarityError(msg.str());
  }
  return rho;
}

// psi recursion without the stationarity recheck; callers own validation.
std::vector<double> psi_values(const Polynomial &p, int n) {
  const int d = p.degree();
  std::vector<double> psi(n + 1, 0.0);
  psi[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 1; j <= std::min(k, d); ++j) s += p.coeff(j) * psi[k - j];
    psi[k] = s;
  }
  return psi;
}

double geometric_tail(const std::vector<double> &psi, double rho) {
  if (rho == 0.0) return 0.0;
  double maxpsi = 0.0;
  for (double v : psi) maxpsi = std::max(maxpsi, std::abs(v));
  const int n = static_cast<int>(psi.size()) - 1;
  return std::pow(rho, n + 1) * maxpsi / (1.0 - rho);
}

}  // namespace

WeightSequence psi_weights(const Polynomial &p, int n) {
  if (n < 0) throw ArgumentError("psi_weights: n must be nonnegative");
  const double rho = max_modulus_checked(p, "psi_weights");
  WeightSequence w;
  w.values = psi_values(p, n);
  w.truncation_error_bound = geometric_tail(w.values, rho);
  return w;
}

std::vector<double> ar_autocovariance(const Polynomial &p, int max_lag) {
  if (max_lag < 0) throw ArgumentError("ar_autocovariance: max_lag must be nonnegative");
  max_modulus_checked(p, "ar_autocovariance");
  const int d = p.degree();

  // Yule-Walker system for gamma(0..d):
  //   gamma(k) - sum_{j=1..d} c_j gamma(|k-j|) = (k == 0 ? 1 : 0).
  Matrix a(d + 1, d + 1);
  std::vector<double> rhs(d + 1, 0.0);
  rhs[0] = 1.0;
  for (int k = 0; k <= d; ++k) {
    a(k, k) += 1.0;
    for (int j = 1; j <= d; ++j) a(k, std::abs(k - j)) -= p.coeff(j);
  }
  std::vector<double> gamma;
  try {
    gamma = lu_solve(std::move(a), std::move(rhs));
  } catch (const NumericalError &) {
    throw NumericalError("ar_autocovariance: singular Yule-Walker system");
  }

  gamma.resize(std::max(max_lag, d) + 1, 0.0);
  for (int k = d + 1; k <= max_lag; ++k) {
    double s = 0.0;
    for (int j = 1; j <= d; ++j) s += p.coeff(j) * gamma[k - j];
    gamma[k] = s;
  }
  gamma.resize(max_lag + 1);
  return gamma;
}

double cross_covariance(const Polynomial &phi, const Polynomial &theta, int m, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("cross_covariance: tol must be positive");
  const double rho_phi = max_modulus_checked(phi, "cross_covariance");
  const double rho_theta = max_modulus_checked(theta, "cross_covariance");
  const double rho = std::max(rho_phi, rho_theta);

  // Both expansions are finite immediately: white noise against white noise.
  if (rho == 0.0) return m == 0 ? -1.0 : 0.0;

  double prev = std::numeric_limits<double>::quiet_NaN();
  for (int n = kSeriesStart; n <= kSeriesCap; n *= 2) {
    const std::vector<double> psi = psi_values(phi, n + std::abs(m));
    const std::vector<double> pi = psi_values(theta, n + std::abs(m));
    double sum = 0.0;
    for (int k = std::max(0, -m); k <= n; ++k) sum += psi[k] * pi[k + m];

    double maxpsi = 0.0, maxpi = 0.0;
    for (double v : psi) maxpsi = std::max(maxpsi, std::abs(v));
    for (double v : pi) maxpi = std::max(maxpi, std::abs(v));
    const double tail = std::pow(rho, n) * maxpsi * maxpi / (1.0 - rho);
    if (tail < tol && std::abs(sum - prev) < tol) return -sum;
    prev = sum;
  }
  std::ostringstream msg;
  msg << "cross_covariance: series did not converge to tol " << tol << " within " << kSeriesCap
      << " terms (max inverse-root modulus " << rho << ")";
  throw NumericalError(msg.str());
}

InformationMatrix information_matrix(const ArmaModel &model, double tol, Exec exec) {
  if (!(tol > 0.0)) throw ArgumentError("information_matrix: tol must be positive");
  const int p = model.p();
  const int q = model.q();
  const int order = p + q;
  if (order == 0) return InformationMatrix(0, 0, Matrix());

  const std::vector<double> gamma_v =
      p > 0 ? ar_autocovariance(model.phi(), p - 1) : std::vector<double>{};
  const std::vector<double> gamma_u =
      q > 0 ? ar_autocovariance(model.theta(), q - 1) : std::vector<double>{};

  // Cross entries depend only on m = i - j, which ranges over 1-q .. p-1.
  // Each value is an independent pure computation: the kernel below is safe
  // to run in parallel and bit-identical to the serial reference.
  std::vector<double> cross;
  if (p > 0 && q > 0) {
    cross.resize(p + q - 1);
    const int m_lo = 1 - q;
    if (exec == Exec::parallel) {
      std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
      for (int idx = 0; idx < static_cast<int>(cross.size()); ++idx) {
        try {
          cross[idx] = cross_covariance(model.phi(), model.theta(), m_lo + idx, tol);
        } catch (...) {
          // Exceptions must not escape the parallel region.
#pragma omp critical
          if (!failure) failure = std::current_exception();
        }
      }
      if (failure) std::rethrow_exception(failure);
    } else {
      for (int idx = 0; idx < static_cast<int>(cross.size()); ++idx)
        cross[idx] = cross_covariance(model.phi(), model.theta(), m_lo + idx, tol);
    }
  }

  Matrix entries(order, order);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) entries(i, j) = gamma_v[std::abs(i - j)];
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) entries(p + i, p + j) = gamma_u[std::abs(i - j)];
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      const double value = cross[(i - j) - (1 - q)];
      entries(i, p + j) = value;
      entries(p + j, i) = value;
    }
  return InformationMatrix(p, q, std::move(entries));
}

SpectralDiagnostics diagnostics(const InformationMatrix &info) {
  if (info.order() < 1) throw ArgumentError("diagnostics: matrix order must be >= 1");
  SpectralDiagnostics d;
  d.eigenvalues = jacobi_eigenvalues(info.entries());
  d.determinant = lu_determinant(info.entries());
  const double lambda_min = d.eigenvalues.front();
  const double lambda_max = d.eigenvalues.back();
  if (lambda_max == 0.0) {
    d.condition_number = std::numeric_limits<double>::infinity();
    d.singularity_margin = 0.0;
  } else {
    d.singularity_margin = lambda_min / lambda_max;
    d.condition_number = lambda_min > 0.0 ? lambda_max / lambda_min
                                          : std::numeric_limits<double>::infinity();
  }
  return d;
}

}  // namespace fim
