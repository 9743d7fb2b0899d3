#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fim/errors.hpp"
#include "fim/redundancy.hpp"
#include "support.hpp"

using namespace fim;
using fimtest::cplx;

namespace {

// Max |coefficient| of alpha*theta - beta*phi over the series coefficients.
double cancellation_residual(const ScaledPolynomial &alpha, const ScaledPolynomial &beta,
                             const ArmaModel &model) {
  const Polynomial left = multiply(alpha.poly, model.theta());
  const Polynomial right = multiply(beta.poly, model.phi());
  std::vector<double> ls = left.series_coefficients();
  std::vector<double> rs = right.series_coefficients();
  for (double &c : ls) c *= alpha.scale;
  for (double &c : rs) c *= beta.scale;
  ls.resize(std::max(ls.size(), rs.size()), 0.0);
  rs.resize(ls.size(), 0.0);
  double dev = 0.0;
  for (std::size_t k = 0; k < ls.size(); ++k) dev = std::max(dev, std::abs(ls[k] - rs[k]));
  return dev;
}

}  // namespace

TEST_CASE("detect_common_roots on the worked examples") {
  const ArmaModel redundant(Polynomial({0.8, -0.15}), Polynomial({0.5}));
  const RedundancyReport r1 = detect_common_roots(redundant);
  CHECK(r1.verdict == Verdict::redundant);
  REQUIRE(r1.paired_roots.size() == 1);
  CHECK(r1.paired_roots[0].phi_root.real() == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(r1.paired_roots[0].theta_root.real() == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(r1.paired_roots[0].gap <= 1e-9);
  CHECK(r1.resultant_magnitude < 1e-10);

  const ArmaModel distinct(Polynomial({0.5}), Polynomial({0.4}));
  const RedundancyReport r2 = detect_common_roots(distinct);
  CHECK(r2.verdict == Verdict::not_redundant);
  REQUIRE(r2.paired_roots.size() == 1);
  CHECK(r2.paired_roots[0].gap == doctest::Approx(0.1).epsilon(1e-10));
  CHECK(r2.resultant_magnitude == doctest::Approx(0.1).epsilon(1e-10));

  const ArmaModel pure_ar(Polynomial({0.5}), Polynomial());
  const RedundancyReport r3 = detect_common_roots(pure_ar);
  CHECK(r3.verdict == Verdict::not_redundant);
  CHECK(r3.paired_roots.empty());

  CHECK_THROWS_AS(detect_common_roots(distinct, 0.0), ArgumentError);
}

TEST_CASE("near-redundant models carry a warning") {
  const ArmaModel close(Polynomial({0.5}), Polynomial({0.4999}));
  const RedundancyReport r = detect_common_roots(close);
  CHECK(r.verdict == Verdict::not_redundant);
  CHECK(r.near_redundant);

  const ArmaModel far(Polynomial({0.5}), Polynomial({0.4}));
  CHECK_FALSE(detect_common_roots(far).near_redundant);
}

TEST_CASE("construct_cancelling_polynomials on the worked examples") {
  const ArmaModel model(Polynomial({0.8, -0.15}), Polynomial({0.5}));
  const auto [alpha, beta] = construct_cancelling_polynomials(model, 0.5);
  REQUIRE(alpha.poly.degree() == 1);
  CHECK(alpha.poly.coeff(1) == doctest::Approx(0.3).epsilon(1e-10));
  CHECK(beta.poly.degree() == 0);
  CHECK(cancellation_residual(alpha, beta, model) <= 1e-9);

  const ArmaModel trivial(Polynomial({0.5}), Polynomial({0.5}));
  const auto [a2, b2] = construct_cancelling_polynomials(trivial, 0.5);
  CHECK(a2.poly.degree() == 0);
  CHECK(b2.poly.degree() == 0);

  const ArmaModel distinct(Polynomial({0.5}), Polynomial({0.4}));
  CHECK_THROWS_AS(construct_cancelling_polynomials(distinct, 0.5), PreconditionError);
}

TEST_CASE("null certificate on the worked examples") {
  const ArmaModel model(Polynomial({0.8, -0.15}), Polynomial({0.5}));
  const InformationMatrix info = information_matrix(model);
  const NullCertificate cert = null_certificate(model, 0.5, info);
  REQUIRE(cert.z.size() == 3);
  CHECK(cert.z[0] == doctest::Approx(1.0));
  CHECK(cert.z[1] == doctest::Approx(-0.3).epsilon(1e-10));
  CHECK(cert.z[2] == doctest::Approx(1.0));
  CHECK(cert.residual <= 1e-9);

  const ArmaModel trivial(Polynomial({0.5}), Polynomial({0.5}));
  const NullCertificate c2 = null_certificate(trivial, 0.5, information_matrix(trivial));
  REQUIRE(c2.z.size() == 2);
  CHECK(c2.z[0] == doctest::Approx(1.0));
  CHECK(c2.z[1] == doctest::Approx(1.0));
  CHECK(c2.residual <= 1e-12);

  const ArmaModel distinct(Polynomial({0.5}), Polynomial({0.4}));
  CHECK_THROWS_AS(null_certificate(distinct, 0.5, information_matrix(distinct)),
                  PreconditionError);
  // Mismatched matrix is rejected before any deflation.
  CHECK_THROWS_AS(null_certificate(model, 0.5, information_matrix(distinct)), ArgumentError);
}

TEST_CASE("reduce_model on the worked examples") {
  const ArmaModel model(Polynomial({0.8, -0.15}), Polynomial({0.5}));
  const ArmaModel reduced = reduce_model(model);
  REQUIRE(reduced.p() == 1);
  CHECK(reduced.phi().coeff(1) == doctest::Approx(0.3).epsilon(1e-10));
  CHECK(reduced.q() == 0);

  const ArmaModel distinct(Polynomial({0.5}), Polynomial({0.4}));
  const ArmaModel unchanged = reduce_model(distinct);
  CHECK(unchanged.phi() == distinct.phi());
  CHECK(unchanged.theta() == distinct.theta());

  const ArmaModel trivial(Polynomial({0.5}), Polynomial({0.5}));
  const ArmaModel white = reduce_model(trivial);
  CHECK(white.p() == 0);
  CHECK(white.q() == 0);
}

TEST_CASE("complex conjugate shared pairs are handled jointly") {
  const cplx g(0.45, 0.35);
  const Polynomial factor = from_inverse_roots({g, std::conj(g)});
  const ArmaModel model(multiply(Polynomial({0.5}), factor), multiply(Polynomial({-0.3}), factor));

  const RedundancyReport report = detect_common_roots(model);
  CHECK(report.verdict == Verdict::redundant);

  const InformationMatrix info = information_matrix(model);
  const NullCertificate cert = null_certificate(model, g, info);
  CHECK(cert.alpha.poly.degree() == 1);  // degree p-2 = 1: padded z
  CHECK(cert.z.size() == 6);
  CHECK(cert.z[2] == 0.0);
  CHECK(cert.residual <= 1e-8);
  CHECK(cancellation_residual(cert.alpha, cert.beta, model) <= 1e-9);

  const ArmaModel reduced = reduce_model(model);
  CHECK(reduced.p() == 1);
  CHECK(reduced.q() == 1);
  CHECK(reduced.phi().coeff(1) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(reduced.theta().coeff(1) == doctest::Approx(-0.3).epsilon(1e-9));
}

TEST_CASE("property: redundancy verdict matches singularity") {
  SplitMix64 rng(31001);
  for (int rep = 0; rep < 50; ++rep) {
    const fimtest::ModelDraw draw = fimtest::random_nonredundant_model(rng, 3, 3);
    const RedundancyReport report = detect_common_roots(draw.model);
    const SpectralDiagnostics diag = diagnostics(information_matrix(draw.model));
    CHECK(report.verdict == Verdict::not_redundant);
    CHECK(diag.singularity_margin >= 1e-8);
  }
  for (int rep = 0; rep < 50; ++rep) {
    const fimtest::RedundantDraw draw = fimtest::make_redundant_model(rng);
    const RedundancyReport report = detect_common_roots(draw.model);
    const SpectralDiagnostics diag = diagnostics(information_matrix(draw.model));
    CHECK(report.verdict == Verdict::redundant);
    CHECK(diag.singularity_margin < 1e-8);
  }
}

TEST_CASE("property: certificates of constructed redundancies are valid") {
  SplitMix64 rng(31002);
  for (int rep = 0; rep < 50; ++rep) {
    const fimtest::RedundantDraw draw = fimtest::make_redundant_model(rng);
    const InformationMatrix info = information_matrix(draw.model);
    const NullCertificate cert = null_certificate(draw.model, draw.shared_root, info);
    CHECK(cert.residual <= 1e-8);
    CHECK(cancellation_residual(cert.alpha, cert.beta, draw.model) <= 1e-9);
  }
}

TEST_CASE("property: reduction is sound") {
  SplitMix64 rng(31003);
  for (int rep = 0; rep < 40; ++rep) {
    const fimtest::RedundantDraw draw = fimtest::make_redundant_model(rng);
    const ArmaModel reduced = reduce_model(draw.model);
    CHECK(reduced.p() < draw.model.p());
    CHECK(reduced.q() < draw.model.q());
    CHECK(detect_common_roots(reduced).verdict == Verdict::not_redundant);
    if (reduced.p() + reduced.q() >= 1) {
      const SpectralDiagnostics diag = diagnostics(information_matrix(reduced));
      CHECK(diag.singularity_margin >= 1e-8);
    }
  }
}

TEST_CASE("continuity of degeneracy: lambda_min shrinks with the root gap") {
  double prev = 1e300;
  for (const double delta : {0.1, 0.01, 0.001, 0.0001}) {
    const ArmaModel model(Polynomial({0.5}), Polynomial({0.5 - delta}));
    const SpectralDiagnostics diag = diagnostics(information_matrix(model));
    CHECK(diag.eigenvalues.front() < prev);
    prev = diag.eigenvalues.front();
  }
  CHECK(prev <= 1e-6);
}
