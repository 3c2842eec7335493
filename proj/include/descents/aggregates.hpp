#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "descents/power_series.hpp"
#include "descents/rational.hpp"
#include "descents/words.hpp"

namespace descents {

// Eulerian number A(p,k): permutations of length p with exactly k-1
// descents, summed from the coefficient row. Requires 1 <= k <= p.
BigInt eulerian(int p, int k);
std::vector<BigInt> eulerian_row(int p);  // k = 1..p

// Mahonian number I(p,k): permutations of length p with major index k
// (equivalently k inversions). Returns 0 outside 0 <= k <= p(p-1)/2.
BigInt mahonian(int p, int k);
std::vector<BigInt> mahonian_row(int p);  // k = 0..p(p-1)/2

// Brute-force inversion counts over all p! permutations; p <= 8.
std::map<int, BigInt> inversion_distribution_oracle(int p, int limit = 8);

// The sequence alpha_n: coefficients arranged by the index
// n = 2^{p-1} + sum j_k 2^{k-1}, which maps positive integers to words
// bijectively (j_1 is the least significant bit of the offset).
BinaryWord alpha_decode(std::uint64_t n);
BigInt alpha(std::uint64_t n);

// e_p with mu_k specialized to x^{2^{k-1}}, as an exact truncated series.
// Requires degree >= 2^{p-1}.
PowerSeries e_p_series(int p, int degree);

struct GenfunReport {
  int p_max = 0;
  int degree = 0;
  bool ok = false;
  int first_mismatch = -1;     // smallest degree where the sides differ
  std::vector<BigRat> lhs;     // index n: alpha_n straight from the table
  std::vector<BigRat> rhs;     // index n: coefficient of the series sum
  std::vector<BigInt> alpha;   // alpha_1..alpha_degree re-extracted from the
                               // per-p series identity, checked integral
};

// Verifies coefficient-wise, to the requested degree, that
//   sum_n alpha_n x^n = sum_p x^{2^{p-1}} (1-x)(1-x^2)...(1-x^{2^{p-1}}) e_p(x).
// Requires degree <= 2^p_max - 1 so the dropped terms cannot contribute.
GenfunReport check_generating_identity(int p_max, int degree);

}  // namespace descents
