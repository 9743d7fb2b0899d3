#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fim/errors.hpp"
#include "fim/inference.hpp"
#include "support.hpp"

using namespace fim;

namespace {

double identity_residual(const Matrix &a, const Matrix &inv) {
  const Matrix prod = a * inv;
  double dev = 0.0;
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j)
      dev = std::max(dev, std::abs(prod(i, j) - (i == j ? 1.0 : 0.0)));
  return dev;
}

}  // namespace

TEST_CASE("invert_information on fixed matrices") {
  Matrix s(1, 1);
  s(0, 0) = 4.0 / 3.0;
  const Matrix sinv = invert_information(InformationMatrix(1, 0, s));
  CHECK(sinv(0, 0) == doctest::Approx(0.75).epsilon(1e-14));

  const Matrix id = invert_information(InformationMatrix(1, 1, Matrix::identity(2)));
  CHECK(id(0, 0) == doctest::Approx(1.0));
  CHECK(id(0, 1) == doctest::Approx(0.0));

  // ARMA(1,1) closed form, checked against the adjugate inverse.
  Matrix m(2, 2);
  m(0, 0) = 4.0 / 3.0;
  m(0, 1) = m(1, 0) = -1.25;
  m(1, 1) = 25.0 / 21.0;
  const Matrix inv = invert_information(InformationMatrix(1, 1, m));
  const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  CHECK(inv(0, 0) == doctest::Approx(m(1, 1) / det).epsilon(1e-12));
  CHECK(inv(0, 1) == doctest::Approx(-m(0, 1) / det).epsilon(1e-12));
  CHECK(inv(1, 1) == doctest::Approx(m(0, 0) / det).epsilon(1e-12));
  CHECK(identity_residual(m, inv) <= 1e-9);

  // Singular matrix refused with the domain error, not a numerical one.
  Matrix sing(2, 2);
  sing(0, 0) = sing(1, 1) = 4.0 / 3.0;
  sing(0, 1) = sing(1, 0) = -4.0 / 3.0;
  CHECK_THROWS_AS(invert_information(InformationMatrix(1, 1, sing)), SingularityError);
}

TEST_CASE("asymptotic covariance of AR(1)") {
  const ArmaModel model(Polynomial({0.5}), Polynomial());
  const AsymptoticCovariance cov = asymptotic_covariance(model, 100);
  CHECK(cov.matrix(0, 0) == doctest::Approx(0.0075).epsilon(1e-10));
  CHECK(cov.standard_errors[0] == doctest::Approx(std::sqrt(0.0075)).epsilon(1e-10));
  CHECK(cov.correlations(0, 0) == 1.0);
}

TEST_CASE("asymptotic covariance at n = 1 is the plain inverse") {
  const ArmaModel model(Polynomial({0.5}), Polynomial({0.4}));
  const AsymptoticCovariance cov = asymptotic_covariance(model, 1);
  const InformationMatrix info = information_matrix(model);
  CHECK(identity_residual(info.entries(), cov.matrix) <= 1e-9);
}

TEST_CASE("redundant models produce the singularity error with a report") {
  const ArmaModel model(Polynomial({0.5}), Polynomial({0.5}));
  try {
    asymptotic_covariance(model, 100);
    FAIL("expected SingularityError");
  } catch (const SingularityError &e) {
    REQUIRE(e.report().has_value());
    CHECK(e.report()->verdict == Verdict::redundant);
    CHECK(std::string(e.what()).find("common root") != std::string::npos);
  }
}

TEST_CASE("argument validation") {
  const ArmaModel model(Polynomial({0.5}), Polynomial());
  CHECK_THROWS_AS(asymptotic_covariance(model, 0), ArgumentError);
  CHECK_THROWS_AS(invert_information(InformationMatrix(0, 0, Matrix())), ArgumentError);
}

TEST_CASE("empty model yields the empty covariance") {
  const ArmaModel empty{Polynomial(), Polynomial()};
  const AsymptoticCovariance cov = asymptotic_covariance(empty, 10);
  CHECK(cov.matrix.empty());
  CHECK(cov.standard_errors.empty());
}

TEST_CASE("property: inverse residual within 1e-9 on random models") {
  SplitMix64 rng(41001);
  for (int rep = 0; rep < 50; ++rep) {
    const fimtest::ModelDraw draw = fimtest::random_nonredundant_model(rng, 3, 3);
    const InformationMatrix info = information_matrix(draw.model);
    const AsymptoticCovariance cov = asymptotic_covariance(draw.model, 37);
    Matrix scaled = cov.matrix;
    for (double &v : scaled.data()) v *= 37.0;
    CHECK(identity_residual(info.entries(), scaled) <= 1e-9);
    for (std::size_t i = 0; i < cov.correlations.rows(); ++i) {
      CHECK(cov.correlations(i, i) == 1.0);
      for (std::size_t j = 0; j < i; ++j) {
        CHECK(cov.correlations(i, j) >= -1.0);
        CHECK(cov.correlations(i, j) <= 1.0);
      }
    }
  }
}

TEST_CASE("property: quadrupling n scales every entry by exactly one quarter") {
  SplitMix64 rng(41002);
  for (int rep = 0; rep < 20; ++rep) {
    const fimtest::ModelDraw draw = fimtest::random_nonredundant_model(rng, 3, 3);
    const AsymptoticCovariance c1 = asymptotic_covariance(draw.model, 123);
    const AsymptoticCovariance c4 = asymptotic_covariance(draw.model, 4 * 123);
    for (std::size_t k = 0; k < c1.matrix.data().size(); ++k)
      CHECK(c4.matrix.data()[k] == c1.matrix.data()[k] / 4.0);  // bit-exact
  }
}

TEST_CASE("blow-up monotonicity along the near-redundant family") {
  double prev_max_se = 0.0;
  for (const double delta : {0.1, 0.01, 0.001}) {
    const ArmaModel model(Polynomial({0.5}), Polynomial({0.5 - delta}));
    const AsymptoticCovariance cov = asymptotic_covariance(model, 100);
    const double max_se = std::max(cov.standard_errors[0], cov.standard_errors[1]);
    CHECK(max_se > prev_max_se);
    prev_max_se = max_se;
  }
  // delta = 1e-4 is below the inversion threshold: refused, with the report
  // flagging the near-match.
  const ArmaModel nearsing(Polynomial({0.5}), Polynomial({0.4999}));
  CHECK_THROWS_AS(asymptotic_covariance(nearsing, 100), SingularityError);
}
