#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fim/fisher.hpp"
#include "fim/montecarlo.hpp"
#include "support.hpp"

using namespace fim;

// The parallel kernels must be bit-identical to their serial references:
// per-entry work is a pure function and the final reductions run in a fixed
// order, so thread count and scheduling cannot change a single bit.

TEST_CASE("moment batch sums: serial and parallel agree bitwise") {
  SplitMix64 rng(71001);
  for (int rep = 0; rep < 5; ++rep) {
    const int dim = 1 + static_cast<int>(rng.next() % 6);
    const std::int64_t n = 32 * (100 + static_cast<std::int64_t>(rng.next() % 500));
    std::vector<double> series(static_cast<std::size_t>(n) * dim);
    GaussianRng noise(rng.next());
    for (double &v : series) v = noise.next();

    const std::vector<Matrix> serial = kernels::moment_batch_sums_serial(series, n, dim);
    const std::vector<Matrix> parallel = kernels::moment_batch_sums_parallel(series, n, dim);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t b = 0; b < serial.size(); ++b) CHECK(serial[b] == parallel[b]);
  }
}

TEST_CASE("simulate_derivative_processes: execution policy cannot change results") {
  const ArmaModel model(Polynomial({0.6, -0.05}), Polynomial({0.3}));
  const SimulationConfig cfg{.n = 65536, .burn_in = 200, .seed = 17, .sigma = 1.0};
  const MomentEstimate serial = simulate_derivative_processes(model, cfg, Exec::serial);
  const MomentEstimate parallel = simulate_derivative_processes(model, cfg, Exec::parallel);
  CHECK(serial.matrix == parallel.matrix);
  CHECK(serial.standard_errors == parallel.standard_errors);
  for (int b = 0; b < kMomentBatches; ++b) CHECK(serial.batch_means[b] == parallel.batch_means[b]);
}

TEST_CASE("information matrix assembly: execution policy cannot change results") {
  SplitMix64 rng(71002);
  for (int rep = 0; rep < 25; ++rep) {
    const fimtest::ModelDraw draw = fimtest::random_nonredundant_model(rng, 3, 3);
    const InformationMatrix serial = information_matrix(draw.model, kDefaultEntryTol, Exec::serial);
    const InformationMatrix parallel =
        information_matrix(draw.model, kDefaultEntryTol, Exec::parallel);
    CHECK(serial.entries() == parallel.entries());
  }
}
