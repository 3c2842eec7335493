#include "descents/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "descents/moments.hpp"

namespace descents {

SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t sample_index) {
  SplitMix64 mixer(seed + sample_index * 0x9E3779B97F4A7C15ULL);
  return SplitMix64(mixer.next());
}

double sample_y(double nu, int truncation, SplitMix64& rng) {
  int used = 64;
  std::uint64_t word = 0;
  return sample_y_path(nu, truncation, [&] {
    if (used == 64) {
      word = rng.next();
      used = 0;
    }
    return ((word >> used++) & 1) != 0;
  });
}

double truncation_bound(double nu, int p, int truncation) {
  if (p < 1) throw std::invalid_argument("truncation_bound: p must be positive");
  if (truncation < 0) throw std::invalid_argument("truncation_bound: negative truncation");
  const double mu = random_walk_mu(nu, p);
  if (mu >= 1.0) {
    throw std::domain_error("truncation_bound: mu_" + std::to_string(p) +
                            " >= 1, pth moment infinite");
  }
  const double root = std::pow(mu, 1.0 / p);
  return std::pow(mu, (truncation + 1.0) / p) / (1.0 - root);
}

namespace {

// Anticipated standard error of the p-th empirical moment, from the exact
// moments when the variance is finite, otherwise a scale stand-in e_p/sqrt(N)
// (the warning flag marks those estimates as unreliable anyway).
std::vector<double> anticipated_std_errors(double nu, int p_max, std::int64_t samples) {
  const std::vector<double> e = walk_moment_sequence(nu, p_max);
  std::vector<double> result(p_max + 1, 0.0);
  for (int p = 1; p <= p_max; ++p) {
    double variance;
    if (random_walk_mu(nu, 2 * p) < 1.0) {
      const double e2p = walk_moment_sequence(nu, 2 * p)[2 * p - 1];
      variance = e2p - e[p - 1] * e[p - 1];
    } else {
      variance = e[p - 1] * e[p - 1];
    }
    if (variance < 0) variance = 0;
    result[p] = std::sqrt(variance / static_cast<double>(samples));
  }
  return result;
}

}  // namespace

int auto_truncation(double nu, int p_max, std::int64_t samples) {
  const std::vector<double> target = anticipated_std_errors(nu, p_max, samples);
  int truncation = 1;
  constexpr int kCap = 1 << 20;
  for (int p = 1; p <= p_max; ++p) {
    while (truncation < kCap && truncation_bound(nu, p, truncation) >= 0.1 * target[p]) {
      ++truncation;
    }
  }
  if (truncation >= kCap) {
    throw std::domain_error("auto_truncation: bias target unreachable");
  }
  return truncation;
}

SimulationReport estimate_moments(const SimulationConfig& config) {
  if (config.samples < 1) throw std::invalid_argument("estimate_moments: need at least 1 sample");
  if (config.p_max < 1) throw std::invalid_argument("estimate_moments: p_max must be positive");
  if (config.truncation < 0) throw std::invalid_argument("estimate_moments: negative truncation");

  std::string offending;
  for (int k = 1; k <= config.p_max; ++k) {
    if (random_walk_mu(config.nu, k) >= 1.0) {
      if (!offending.empty()) offending += ", ";
      offending += std::to_string(k);
    }
  }
  if (!offending.empty()) {
    throw std::domain_error("estimate_moments: mu_k >= 1 for k = " + offending +
                            "; increase nu above the finiteness threshold");
  }

  SimulationReport report;
  report.config = config;
  report.truncation_auto = config.truncation == 0;
  report.truncation_used = report.truncation_auto
                               ? auto_truncation(config.nu, config.p_max, config.samples)
                               : config.truncation;
  report.insufficient_samples = config.samples < 2;

  // Accumulate powers 1..2*p_max in sample-index order; the extra powers
  // feed the standard errors.
  const int top_power = 2 * config.p_max;
  std::vector<double> sums(top_power + 1, 0.0);
  for (std::int64_t i = 0; i < config.samples; ++i) {
    SplitMix64 rng = sample_stream(config.seed, static_cast<std::uint64_t>(i));
    const double y = sample_y(config.nu, report.truncation_used, rng);
    double power = 1.0;
    for (int q = 1; q <= top_power; ++q) {
      power *= y;
      sums[q] += power;
    }
  }

  const double n = static_cast<double>(config.samples);
  const std::vector<double> exact = walk_moment_sequence(config.nu, config.p_max);
  for (int p = 1; p <= config.p_max; ++p) {
    MomentEstimate est;
    est.p = p;
    est.mean = sums[p] / n;
    est.variance_warning = random_walk_mu(config.nu, 2 * p) >= 1.0;
    est.exact = exact[p - 1];
    est.truncation_bound = truncation_bound(config.nu, p, report.truncation_used);
    if (report.insufficient_samples) {
      est.std_error = std::numeric_limits<double>::quiet_NaN();
      est.z_score = std::numeric_limits<double>::quiet_NaN();
    } else {
      const double second = sums[2 * p] / n;
      double variance = (second - est.mean * est.mean) * n / (n - 1.0);
      if (variance < 0) variance = 0;
      est.std_error = std::sqrt(variance / n);
      est.z_score = (est.mean - est.exact) / est.std_error;
    }
    report.moments.push_back(est);
  }
  return report;
}

}  // namespace descents
