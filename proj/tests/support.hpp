#ifndef FIM_TESTS_SUPPORT_HPP
#define FIM_TESTS_SUPPORT_HPP

// Deterministic generators of stable polynomials and models for property
// tests.  Everything is seeded: a passing suite stays passing.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "fim/model.hpp"
#include "fim/montecarlo.hpp"
#include "fim/polynomial.hpp"

namespace fimtest {

using cplx = std::complex<double>;

/// Random inverse roots inside the disk of the given modulus: real roots and
/// conjugate pairs, pairs kept away from the real axis so the conjugate gap
/// stays usable.
inline std::vector<cplx> random_roots(fim::SplitMix64 &rng, int degree, double max_modulus) {
  std::vector<cplx> roots;
  int remaining = degree;
  while (remaining > 0) {
    if (remaining >= 2 && rng.uniform_pos() < 0.4) {
      const double mod = 0.15 + (max_modulus - 0.15) * rng.uniform_pos();
      const double angle = (0.1 + 0.8 * rng.uniform_pos()) * std::numbers::pi;
      const cplx g = std::polar(mod, angle);
      roots.push_back(g);
      roots.push_back(std::conj(g));
      remaining -= 2;
    } else {
      const double r = max_modulus * (2.0 * rng.uniform_pos() - 1.0);
      roots.emplace_back(r, 0.0);
      remaining -= 1;
    }
  }
  return roots;
}

inline double min_pairwise_gap(const std::vector<cplx> &a, const std::vector<cplx> &b) {
  double best = std::numeric_limits<double>::infinity();
  for (const cplx &x : a)
    for (const cplx &y : b) best = std::min(best, std::abs(x - y));
  return best;
}

inline double min_internal_gap(const std::vector<cplx> &a) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) best = std::min(best, std::abs(a[i] - a[j]));
  return best;
}

/// Random stable polynomial of exactly the requested degree whose roots are
/// pairwise separated by at least min_gap.
inline fim::Polynomial random_stable_polynomial(fim::SplitMix64 &rng, int degree,
                                                double max_modulus = 0.9,
                                                double min_gap = 0.0) {
  for (;;) {
    const std::vector<cplx> roots = random_roots(rng, degree, max_modulus);
    if (min_gap > 0.0 && degree > 1 && min_internal_gap(roots) < min_gap) continue;
    return fim::from_inverse_roots(roots);
  }
}

struct ModelDraw {
  fim::ArmaModel model;
  std::vector<cplx> phi_roots;
  std::vector<cplx> theta_roots;
};

/// Random non-redundant model: all pairwise inverse-root gaps (within each
/// polynomial and across them) at least min_gap.
inline ModelDraw random_nonredundant_model(fim::SplitMix64 &rng, int max_p, int max_q,
                                           double min_gap = 0.05, double max_modulus = 0.9,
                                           bool allow_empty = false) {
  for (;;) {
    const int p = static_cast<int>(rng.next() % (max_p + 1));
    const int q = static_cast<int>(rng.next() % (max_q + 1));
    if (!allow_empty && p + q == 0) continue;
    std::vector<cplx> gs = random_roots(rng, p, max_modulus);
    std::vector<cplx> hs = random_roots(rng, q, max_modulus);
    if (min_internal_gap(gs) < min_gap || min_internal_gap(hs) < min_gap) continue;
    if (min_pairwise_gap(gs, hs) < min_gap) continue;
    return ModelDraw{fim::ArmaModel(fim::from_inverse_roots(gs), fim::from_inverse_roots(hs)),
                     std::move(gs), std::move(hs)};
  }
}

struct RedundantDraw {
  fim::ArmaModel model;
  cplx shared_root;  // one representative; conjugate implied when non-real
};

/// Redundant model built by injecting a shared factor (a real root or a
/// conjugate pair) into both polynomials of a non-redundant base, keeping
/// final orders within 3.
inline RedundantDraw make_redundant_model(fim::SplitMix64 &rng, double max_modulus = 0.9) {
  const bool pair = rng.uniform_pos() < 0.35;
  const int base_cap = pair ? 1 : 2;
  const ModelDraw base =
      random_nonredundant_model(rng, base_cap, base_cap, 0.05, max_modulus, true);

  cplx g;
  fim::Polynomial factor;
  if (pair) {
    const double mod = 0.15 + (max_modulus - 0.15) * rng.uniform_pos();
    const double angle = (0.1 + 0.8 * rng.uniform_pos()) * std::numbers::pi;
    g = std::polar(mod, angle);
    factor = fim::from_inverse_roots({g, std::conj(g)});
  } else {
    double r = max_modulus * (2.0 * rng.uniform_pos() - 1.0);
    if (std::abs(r) < 0.1) r = r < 0 ? -0.1 : 0.1;  // keep the root well away from 0
    g = cplx(r, 0.0);
    factor = fim::from_inverse_roots({g});
  }
  return RedundantDraw{
      fim::ArmaModel(fim::multiply(base.model.phi(), factor),
                     fim::multiply(base.model.theta(), factor)),
      g};
}

}  // namespace fimtest

#endif  // FIM_TESTS_SUPPORT_HPP
