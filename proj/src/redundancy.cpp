#include "fim/redundancy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fim/errors.hpp"

namespace fim {

namespace {

using cplx = std::complex<double>;

// Minimum-cost assignment of rows to distinct columns, rows <= cols
// (Hungarian algorithm with potentials).  Returns the column chosen for
// each row.
std::vector<int> min_cost_assignment(const std::vector<std::vector<double>> &cost) {
  const int n = static_cast<int>(cost.size());
  const int m = static_cast<int>(cost[0].size());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<int> match(m + 1, 0), way(m + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> minv(m + 1, inf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      int j1 = -1;
      double delta = inf;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= m; ++j)
    if (match[j] > 0) row_to_col[match[j] - 1] = j - 1;
  return row_to_col;
}

bool lex_less(const cplx &a, const cplx &b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// Nearest distance from g to any member of the multiset.
double nearest_gap(const std::vector<cplx> &roots, cplx g) {
  double best = std::numeric_limits<double>::infinity();
  for (const cplx &r : roots) best = std::min(best, std::abs(r - g));
  return best;
}

}  // namespace

double RedundancyReport::min_gap() const {
  double best = std::numeric_limits<double>::infinity();
  for (const RootPair &pair : paired_roots) best = std::min(best, pair.gap);
  return best;
}

RedundancyReport detect_common_roots(const ArmaModel &model, double tol_root) {
  if (!(tol_root > 0.0)) throw ArgumentError("detect_common_roots: tol_root must be positive");
  RedundancyReport report;
  report.tol_root = tol_root;

  const int p = model.p();
  const int q = model.q();
  if (p + q >= 1) report.resultant_magnitude = std::abs(sylvester_resultant(model.phi(), model.theta()));
  if (p == 0 || q == 0) return report;

  // Sort both multisets so the assignment (and any tie among equal-cost
  // matchings) is deterministic.
  std::vector<cplx> gs = model.phi_roots().roots;
  std::vector<cplx> hs = model.theta_roots().roots;
  std::sort(gs.begin(), gs.end(), lex_less);
  std::sort(hs.begin(), hs.end(), lex_less);

  // Stage 1: extract global-minimum pairs with gap <= tol_root.  These are
  // the common roots; pulling them first matters because a min-total-gap
  // assignment ties between pairing a shared root with itself and pairing
  // it crosswise (for collinear roots both totals are equal), and the tie
  // can land on the crosswise match.  Ties on equal gaps break toward the
  // lexicographically smallest phi-root.
  while (!gs.empty() && !hs.empty()) {
    std::size_t bi = 0, bj = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = 0; j < hs.size(); ++j) {
        const double gap = std::abs(gs[i] - hs[j]);
        if (gap < best || (gap == best && lex_less(gs[i], gs[bi]))) {
          best = gap;
          bi = i;
          bj = j;
        }
      }
    if (!(best <= tol_root)) break;
    report.paired_roots.push_back(RootPair{gs[bi], hs[bj], best});
    gs.erase(gs.begin() + bi);
    hs.erase(hs.begin() + bj);
  }

  // Stage 2: minimum-total-gap assignment (Hungarian) pairs the remaining
  // roots for diagnostics, e.g. near-miss gaps.
  if (!gs.empty() && !hs.empty()) {
    const bool phi_rows = gs.size() <= hs.size();
    const std::vector<cplx> &rows = phi_rows ? gs : hs;
    const std::vector<cplx> &cols = phi_rows ? hs : gs;
    std::vector<std::vector<double>> cost(rows.size(), std::vector<double>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) cost[i][j] = std::abs(rows[i] - cols[j]);

    const std::vector<int> assignment = min_cost_assignment(cost);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      RootPair pair;
      pair.phi_root = phi_rows ? rows[i] : cols[assignment[i]];
      pair.theta_root = phi_rows ? cols[assignment[i]] : rows[i];
      pair.gap = cost[i][assignment[i]];
      report.paired_roots.push_back(pair);
    }
  }
  std::sort(report.paired_roots.begin(), report.paired_roots.end(),
            [](const RootPair &a, const RootPair &b) {
              if (a.gap != b.gap) return a.gap < b.gap;
              return lex_less(a.phi_root, b.phi_root);
            });

  const double smallest = report.min_gap();
  if (smallest <= tol_root)
    report.verdict = Verdict::redundant;
  else if (smallest <= kNearRedundantBand)
    report.near_redundant = true;
  return report;
}

std::pair<ScaledPolynomial, ScaledPolynomial> construct_cancelling_polynomials(
    const ArmaModel &model, std::complex<double> g, double tol_root) {
  const double gap_phi = nearest_gap(model.phi_roots().roots, g);
  const double gap_theta = nearest_gap(model.theta_roots().roots, g);
  if (!(gap_phi <= tol_root && gap_theta <= tol_root)) {
    std::ostringstream msg;
    msg << "construct_cancelling_polynomials: g = (" << g.real() << ", " << g.imag()
        << ") is not a common inverse root within " << tol_root
        << " (distance to phi roots " << gap_phi << ", to theta roots " << gap_theta << ")";
    throw PreconditionError(msg.str());
  }
  // Membership is certified by the root gaps above; the division tolerance
  // only needs to absorb the evaluation noise of a tol_root-close root.
  const double eval_tol = std::max(kDefaultMembershipTol, 64.0 * tol_root);
  ScaledPolynomial alpha{1.0, deflate(model.phi(), g, eval_tol)};
  ScaledPolynomial beta{1.0, deflate(model.theta(), g, eval_tol)};
  return {std::move(alpha), std::move(beta)};
}

NullCertificate null_certificate(const ArmaModel &model, std::complex<double> g,
                                 const InformationMatrix &info, double tol_root) {
  const int p = model.p();
  const int q = model.q();
  if (info.order() != p + q || info.p() != p)
    throw ArgumentError("null_certificate: information matrix does not match the model");

  NullCertificate cert;
  cert.tol_root = tol_root;
  std::tie(cert.alpha, cert.beta) = construct_cancelling_polynomials(model, g, tol_root);

  // z stacks the series coefficients in the matrix's A_t index order; with
  // v defined against -a_t, alpha(B) v_{t-1} + beta(B) u_{t-1} collapses to
  // (-alpha/phi + beta/theta) a_{t-1}, which cancels exactly when
  // alpha*theta = beta*phi, so beta enters without a sign flip.
  cert.z.assign(p + q, 0.0);
  const std::vector<double> alpha_series = cert.alpha.series_coefficients();
  const std::vector<double> beta_series = cert.beta.series_coefficients();
  for (std::size_t k = 0; k < alpha_series.size(); ++k) cert.z[k] = alpha_series[k];
  for (std::size_t k = 0; k < beta_series.size(); ++k) cert.z[p + k] = beta_series[k];

  const std::vector<double> iz = info.entries() * cert.z;
  double num = 0.0, den = 0.0;
  for (double v : iz) num += v * v;
  for (double v : cert.z) den += v * v;
  cert.residual = std::sqrt(num) / std::sqrt(den);
  return cert;
}

ArmaModel reduce_model(const ArmaModel &model, double tol_root) {
  ArmaModel current = model;
  const int max_rounds = std::min(model.p(), model.q()) + 1;
  for (int round = 0; round < max_rounds; ++round) {
    const RedundancyReport report = detect_common_roots(current, tol_root);
    if (report.verdict == Verdict::not_redundant) return current;

    const RootPair &pair = report.paired_roots.front();
    const cplx mid = 0.5 * (pair.phi_root + pair.theta_root);
    const double eval_tol = std::max(kDefaultMembershipTol, 64.0 * tol_root);
    // Real roots come out of the eigensolver with imaginary part exactly 0,
    // so a nonzero midpoint imaginary part means a genuine conjugate pair.
    Polynomial phi_next = deflate(current.phi(), mid, eval_tol);
    Polynomial theta_next = deflate(current.theta(), mid, eval_tol);
    current = ArmaModel(std::move(phi_next), std::move(theta_next), current.margin());
  }
  throw NumericalError("reduce_model: redundancy persisted beyond min(p, q) deflations");
}

}  // namespace fim
