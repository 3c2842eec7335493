#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace descents {

// Deterministic 64-bit generator used for the walk steps. Per-sample
// substreams are derived with one extra mixing step so that results do not
// depend on how samples are scheduled.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t sample_index);

struct SimulationConfig {
  double nu = 1.0;
  int p_max = 3;
  std::int64_t samples = 1'000'000;
  int truncation = 0;  // series length K; 0 selects it from the bias bound
  std::uint64_t seed = 42;
};

struct MomentEstimate {
  int p = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double exact = 0.0;
  double z_score = 0.0;
  double truncation_bound = 0.0;
  // mu_{2p} >= 1: the estimator is consistent but its error bar is not.
  bool variance_warning = false;
};

struct SimulationReport {
  SimulationConfig config;
  int truncation_used = 0;
  bool truncation_auto = false;
  bool insufficient_samples = false;  // fewer than 2 samples, no std error
  std::vector<MomentEstimate> moments;
};

// One draw of the truncated series sum_{k=0}^{K} exp(S_k - k nu). Always >= 1.
template <typename StepFn>
double sample_y_path(double nu, int truncation, StepFn&& step_is_up) {
  const double up = std::exp(1.0 - nu);
  const double down = std::exp(-1.0 - nu);
  double term = 1.0;
  double total = 1.0;
  for (int k = 1; k <= truncation; ++k) {
    term *= step_is_up() ? up : down;
    total += term;
  }
  return total;
}

double sample_y(double nu, int truncation, SplitMix64& rng);

// Upper bound on the L^p distance between the full series and its K-term
// truncation: mu_p^{(K+1)/p} / (1 - mu_p^{1/p}). Throws std::domain_error
// when mu_p >= 1.
double truncation_bound(double nu, int p, int truncation);

// Smallest K whose truncation bound is below a tenth of the anticipated
// standard error for every p <= p_max.
int auto_truncation(double nu, int p_max, std::int64_t samples);

// Draws `samples` independent truncated series, estimates the first p_max
// moments and compares them against the exact recursion. Deterministic for
// a fixed (seed, samples, truncation, nu).
SimulationReport estimate_moments(const SimulationConfig& config);

}  // namespace descents
