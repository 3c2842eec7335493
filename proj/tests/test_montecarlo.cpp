#include <doctest.h>

#include <cmath>
#include <vector>

#include "descents/moments.hpp"
#include "descents/montecarlo.hpp"

using namespace descents;

TEST_CASE("single path samples") {
  const auto always_up = [] { return true; };
  const auto always_down = [] { return false; };

  CHECK(sample_y_path(1.0, 0, always_up) == 1.0);
  CHECK(sample_y_path(1.0, 1, always_up) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(sample_y_path(1.0, 1, always_down) ==
        doctest::Approx(1.0 + std::exp(-2.0)).epsilon(1e-15));

  // three up-steps at nu = 2: 1 + e^{-1} + e^{-2} + e^{-3}
  CHECK(sample_y_path(2.0, 3, always_up) ==
        doctest::Approx(1 + std::exp(-1.0) + std::exp(-2.0) + std::exp(-3.0)).epsilon(1e-15));

  SplitMix64 rng = sample_stream(7, 0);
  for (int i = 0; i < 200; ++i) {
    CHECK(sample_y(1.0, 40, rng) >= 1.0);
  }
}

TEST_CASE("truncation bound") {
  const double mu1 = random_walk_mu(1.0, 1);
  CHECK(truncation_bound(1.0, 1, 10) ==
        doctest::Approx(std::pow(mu1, 11) / (1 - mu1)).epsilon(1e-12));
  CHECK(truncation_bound(1.0, 1, 50) < 1e-12);

  double previous = truncation_bound(1.0, 2, 0);
  for (int truncation = 1; truncation <= 30; ++truncation) {
    const double bound = truncation_bound(1.0, 2, truncation);
    CHECK(bound < previous);
    previous = bound;
  }

  CHECK_THROWS_AS(truncation_bound(0.3, 1, 10), std::domain_error);
}

TEST_CASE("per-sample substreams do not collide") {
  // neighbouring samples share no obvious structure
  SplitMix64 a = sample_stream(42, 0);
  SplitMix64 b = sample_stream(42, 1);
  int equal = 0;
  for (int i = 0; i < 64; ++i) {
    if (a.next() == b.next()) ++equal;
  }
  CHECK(equal == 0);
}

TEST_CASE("moment estimation") {
  SUBCASE("deterministic given the seed") {
    SimulationConfig config;
    config.nu = 1.0;
    config.p_max = 2;
    config.samples = 20000;
    config.seed = 42;
    const SimulationReport first = estimate_moments(config);
    const SimulationReport second = estimate_moments(config);
    REQUIRE(first.moments.size() == second.moments.size());
    for (std::size_t i = 0; i < first.moments.size(); ++i) {
      CHECK(first.moments[i].mean == second.moments[i].mean);
      CHECK(first.moments[i].std_error == second.moments[i].std_error);
    }
    CHECK(first.truncation_used == second.truncation_used);
  }

  SUBCASE("strong drift concentrates near 1") {
    SimulationConfig config;
    config.nu = 10.0;
    config.p_max = 1;
    config.samples = 10000;
    config.seed = 11;
    const SimulationReport report = estimate_moments(config);
    const MomentEstimate& est = report.moments.front();
    const double exact = 1.0 / (1.0 - random_walk_mu(10.0, 1));
    CHECK(est.exact == doctest::Approx(exact).epsilon(1e-12));
    CHECK(std::abs(est.mean - est.exact) <= 4 * est.std_error);
    CHECK_FALSE(est.variance_warning);
  }

  SUBCASE("z-scores within four standard errors at moderate drift") {
    SimulationConfig config;
    config.nu = 1.0;
    config.p_max = 3;
    config.samples = 100000;
    config.seed = 42;
    const SimulationReport report = estimate_moments(config);
    CHECK(report.truncation_auto);
    const std::vector<double> exact = walk_moment_sequence(config.nu, 2 * config.p_max);
    for (const MomentEstimate& est : report.moments) {
      CHECK(std::abs(est.z_score) < 4.0);
      // bias target used by the auto-selection: a tenth of the anticipated
      // standard error sqrt((e_{2p} - e_p^2)/N)
      const double variance = exact[2 * est.p - 1] - est.exact * est.exact;
      const double anticipated = std::sqrt(variance / static_cast<double>(config.samples));
      CHECK(est.truncation_bound < 0.1 * anticipated);
      CHECK_FALSE(est.variance_warning);
    }
  }

  SUBCASE("single sample flags missing standard error") {
    SimulationConfig config;
    config.samples = 1;
    config.p_max = 1;
    config.seed = 3;
    const SimulationReport report = estimate_moments(config);
    CHECK(report.insufficient_samples);
    CHECK(std::isnan(report.moments.front().std_error));
  }

  SUBCASE("drift below the finiteness threshold is rejected") {
    SimulationConfig config;
    config.nu = 0.4;  // below ln cosh 1
    config.p_max = 1;
    CHECK_THROWS_AS(estimate_moments(config), std::domain_error);
  }

  SUBCASE("variance warning between the p and 2p thresholds") {
    SimulationConfig config;
    config.nu = 0.5;  // mu_1 < 1 but mu_2 >= 1
    config.p_max = 1;
    config.samples = 1000;
    config.truncation = 30;
    const SimulationReport report = estimate_moments(config);
    CHECK(report.moments.front().variance_warning);
  }

  SUBCASE("explicit truncation is honoured") {
    SimulationConfig config;
    config.p_max = 1;
    config.samples = 10;
    config.truncation = 17;
    const SimulationReport report = estimate_moments(config);
    CHECK(report.truncation_used == 17);
    CHECK_FALSE(report.truncation_auto);
  }
}
