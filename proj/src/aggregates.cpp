#include "descents/aggregates.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "descents/counting.hpp"

namespace descents {

namespace {

int major_index(std::uint64_t bits) {
  int sum = 0;
  for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1) {
    sum += std::countr_zero(rest) + 1;
  }
  return sum;
}

}  // namespace

std::vector<BigInt> eulerian_row(int p) {
  if (p < 1) throw std::invalid_argument("eulerian_row: p must be positive");
  const BitsRow row = row_by_bits(p, Algorithm::kPascal);
  std::vector<BigInt> result(p);
  for (std::uint64_t bits = 0; bits < row.size(); ++bits) {
    result[std::popcount(bits)] += row[bits];
  }
  return result;
}

BigInt eulerian(int p, int k) {
  if (k < 1 || k > p) throw std::invalid_argument("eulerian: k must be in [1, p]");
  return eulerian_row(p)[k - 1];
}

std::vector<BigInt> mahonian_row(int p) {
  if (p < 1) throw std::invalid_argument("mahonian_row: p must be positive");
  const BitsRow row = row_by_bits(p, Algorithm::kPascal);
  std::vector<BigInt> result(p * (p - 1) / 2 + 1);
  for (std::uint64_t bits = 0; bits < row.size(); ++bits) {
    result[major_index(bits)] += row[bits];
  }
  return result;
}

BigInt mahonian(int p, int k) {
  if (p < 1) throw std::invalid_argument("mahonian: p must be positive");
  if (k < 0 || k > p * (p - 1) / 2) return 0;
  return mahonian_row(p)[k];
}

std::map<int, BigInt> inversion_distribution_oracle(int p, int limit) {
  if (p < 1) throw std::invalid_argument("inversion oracle: p must be positive");
  if (p > limit) throw std::invalid_argument("inversion oracle: limit exceeded");
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 1);
  std::map<int, BigInt> distribution;
  do {
    int inversions = 0;
    for (int i = 0; i < p; ++i) {
      for (int j = i + 1; j < p; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    distribution[inversions] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return distribution;
}

BinaryWord alpha_decode(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("alpha: index must be positive");
  const int p = std::bit_width(n);  // n = 2^{p-1} + offset with offset < 2^{p-1}
  const std::uint64_t offset = n - (std::uint64_t{1} << (p - 1));
  return BinaryWord(p, offset);
}

BigInt alpha(std::uint64_t n) { return count_splitting(alpha_decode(n)); }

PowerSeries e_p_series(int p, int degree) {
  if (p < 1 || p > 30) throw std::invalid_argument("e_p_series: p must be in [1, 30]");
  if (degree < (1 << (p - 1))) {
    throw std::invalid_argument("e_p_series: truncation degree below 2^{p-1}");
  }
  std::vector<PowerSeries> e;
  e.reserve(p);
  for (int q = 1; q <= p; ++q) {
    PowerSeries sum = PowerSeries::constant(degree, BigRat(1));
    for (int k = 1; k < q; ++k) {
      sum += e[k - 1].shifted(1 << (k - 1)) * BigRat(binomial(q, k));
    }
    PowerSeries denom = PowerSeries::constant(degree, BigRat(1));
    denom -= PowerSeries::monomial(degree, 1 << (q - 1));
    e.push_back(series_recip(denom) * sum);
  }
  return e.back();
}

GenfunReport check_generating_identity(int p_max, int degree) {
  if (p_max < 1) throw std::invalid_argument("check_generating_identity: p_max must be positive");
  if (p_max > 20) throw std::invalid_argument("check_generating_identity: p_max too large");
  if (degree < 1 || degree > (1 << p_max) - 1) {
    throw std::invalid_argument(
        "check_generating_identity: degree must be in [1, 2^p_max - 1] so the "
        "omitted terms cannot reach it");
  }

  GenfunReport report;
  report.p_max = p_max;
  report.degree = degree;
  report.lhs.assign(degree + 1, BigRat(0));
  report.rhs.assign(degree + 1, BigRat(0));
  report.alpha.assign(degree + 1, BigInt(0));

  // Left side: the alpha sequence read straight off the coefficient table.
  CoefficientTable table = CoefficientTable::build(p_max, Algorithm::kPascal);
  for (int n = 1; n <= degree; ++n) {
    const BinaryWord word = alpha_decode(static_cast<std::uint64_t>(n));
    report.lhs[n] = BigRat(table.at(word));
  }

  // Right side: sum over p of x^{2^{p-1}} (1-x)(1-x^2)...(1-x^{2^{p-1}}) e_p(x).
  PowerSeries rhs(degree);
  for (int p = 1; p <= p_max; ++p) {
    if ((1 << (p - 1)) > degree) break;  // starts beyond the truncation
    PowerSeries term = e_p_series(p, degree);
    for (int i = 0; i < p; ++i) {
      PowerSeries factor = PowerSeries::constant(degree, BigRat(1));
      factor -= PowerSeries::monomial(degree, 1 << i);
      term = term * factor;
    }
    term = term.shifted(1 << (p - 1));

    // The p-th summand alone reproduces alpha_n for 2^{p-1} <= n < 2^p and
    // must vanish elsewhere; extract and sanity-check integrality.
    const int lo = 1 << (p - 1);
    const int hi = (1 << p) - 1;
    for (int n = 0; n <= degree; ++n) {
      const BigRat& c = term.coefficient(n);
      if (n >= lo && n <= hi) {
        if (denominator(c) != 1) {
          throw std::logic_error("check_generating_identity: non-integer alpha coefficient");
        }
        report.alpha[n] = numerator(c);
      } else if (c != 0) {
        throw std::logic_error("check_generating_identity: stray series coefficient");
      }
    }
    rhs += term;
  }
  for (int n = 0; n <= degree; ++n) report.rhs[n] = rhs.coefficient(n);

  report.ok = true;
  for (int n = 0; n <= degree; ++n) {
    if (report.lhs[n] != report.rhs[n]) {
      report.ok = false;
      report.first_mismatch = n;
      break;
    }
  }
  return report;
}

}  // namespace descents
