#include "descents/counting.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace descents {

std::string algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kOracle: return "oracle";
    case Algorithm::kSieve: return "sieve";
    case Algorithm::kPrefix: return "prefix";
    case Algorithm::kPascal: return "pascal";
    case Algorithm::kSplitting: return "splitting";
    case Algorithm::kMacMahon: return "macmahon";
  }
  throw std::logic_error("algorithm_name: unknown algorithm");
}

Algorithm parse_algorithm(const std::string& name) {
  for (Algorithm algorithm : kAllAlgorithms) {
    if (algorithm_name(algorithm) == name) return algorithm;
  }
  throw std::invalid_argument("unknown algorithm '" + name +
                              "' (expected oracle|sieve|prefix|pascal|splitting|macmahon)");
}

namespace {

std::uint64_t descent_bits(const std::vector<int>& perm) {
  std::uint64_t bits = 0;
  for (std::size_t i = 1; i < perm.size(); ++i) {
    if (perm[i - 1] > perm[i]) bits |= std::uint64_t{1} << (i - 1);
  }
  return bits;
}

// Counts for every descent set of S_p in one pass over all p! permutations.
std::vector<std::uint64_t> bruteforce_buckets(int p) {
  std::vector<std::uint64_t> buckets(std::uint64_t{1} << (p - 1), 0);
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    ++buckets[descent_bits(perm)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return buckets;
}

void record_lookup(MemoStats* stats, bool hit) {
  if (stats == nullptr) return;
  if (hit) {
    ++stats->hits;
  } else {
    ++stats->misses;
  }
}

std::uint64_t low_mask(int width) {
  return width == 0 ? 0 : (~std::uint64_t{0} >> (64 - width));
}

}  // namespace

BigInt count_bruteforce(const BinaryWord& word, int oracle_limit) {
  if (word.p() > oracle_limit) {
    throw std::invalid_argument("count_bruteforce: oracle limit exceeded");
  }
  return BigInt(bruteforce_buckets(word.p())[word.bits()]);
}

BigInt count_sieve(const BinaryWord& word) {
  const std::vector<int> positions = word.descent_positions();
  const int m = static_cast<int>(positions.size());
  const int p = word.p();
  BigInt total = 0;
  // Every subset of the descent positions contributes a signed multinomial;
  // the empty subset contributes (-1)^m.
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
    std::vector<int> parts;
    int previous = 0;
    for (int i = 0; i < m; ++i) {
      if ((subset >> i) & 1) {
        parts.push_back(positions[i] - previous);
        previous = positions[i];
      }
    }
    const int chosen = static_cast<int>(parts.size());
    parts.push_back(p - previous);
    const BigInt term = multinomial(p, parts);
    if ((m - chosen) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigInt count_prefix_recursion(const BinaryWord& word, MemoStats* stats) {
  const int p = word.p();
  // values[q] is the coefficient of the length-(q-1) prefix; every
  // subproblem of the recursion is a prefix of the original word.
  std::vector<BigInt> values(p + 1);
  values[0] = 1;
  for (int q = 1; q <= p; ++q) {
    record_lookup(stats, false);
    const std::uint64_t prefix_bits = word.bits() & low_mask(q - 1);
    int m = 0;
    for (std::uint64_t rest = prefix_bits; rest != 0; rest &= rest - 1) ++m;
    // sum over s_0 = 0 and the descent positions s_l of the prefix
    BigInt acc = (m % 2 == 0) ? BigInt(1) : BigInt(-1);  // l = 0 term, binom(q,0) = 1
    int l = 0;
    for (std::uint64_t rest = prefix_bits; rest != 0; rest &= rest - 1) {
      const int s = std::countr_zero(rest) + 1;
      ++l;
      record_lookup(stats, true);
      BigInt term = binomial(q, s) * values[s];
      if ((m - l) % 2 != 0) term = -term;
      acc += term;
    }
    values[q] = std::move(acc);
  }
  return values[p];
}

std::vector<BinaryWord> deletion_set(const BinaryWord& word) {
  if (word.p() < 2) {
    throw std::invalid_argument("deletion_set: no digit to delete");
  }
  std::vector<BinaryWord> result;
  const std::uint64_t bits = word.bits();
  const int length = word.length();
  for (int i = 1; i <= length; ++i) {
    // one representative per run: keep only the first digit of each run
    if (i >= 2 && ((bits >> (i - 1)) & 1) == ((bits >> (i - 2)) & 1)) continue;
    const std::uint64_t low = bits & low_mask(i - 1);
    const std::uint64_t high = (bits >> i) << (i - 1);
    result.emplace_back(word.p() - 1, low | high);
  }
  return result;
}

namespace {

BigInt pascal_memoized(const BinaryWord& word, std::map<std::pair<int, std::uint64_t>, BigInt>& memo,
                       MemoStats* stats) {
  if (word.p() == 1) return 1;
  const auto key = std::make_pair(word.p(), word.bits());
  if (const auto it = memo.find(key); it != memo.end()) {
    record_lookup(stats, true);
    return it->second;
  }
  record_lookup(stats, false);
  BigInt total = 0;
  for (const BinaryWord& shorter : deletion_set(word)) {
    total += pascal_memoized(shorter, memo, stats);
  }
  return memo.emplace(key, std::move(total)).first->second;
}

BigInt splitting_memoized(const BinaryWord& whole, int first, int length,
                          std::map<std::pair<int, int>, BigInt>& memo, MemoStats* stats) {
  // Coefficient of the contiguous digits j_first .. j_{first+length-1},
  // interpreted as a word for permutations of length `length`+1.
  const int p = length + 1;
  if (p == 1) return 1;
  const auto key = std::make_pair(first, length);
  if (const auto it = memo.find(key); it != memo.end()) {
    record_lookup(stats, true);
    return it->second;
  }
  record_lookup(stats, false);
  const auto digit = [&](int k) -> int {  // j_k within the subword, virtual ends
    if (k == 0) return 0;
    if (k == p) return 1;
    return whole.bit(first + k - 1);
  };
  BigInt total = 0;
  // The largest entry sits at a position k where a rise meets a descent.
  for (int k = 1; k <= p; ++k) {
    if (digit(k - 1) != 0 || digit(k) != 1) continue;
    BigInt term = binomial(p - 1, k - 1);
    term *= splitting_memoized(whole, first, k - 2 < 0 ? 0 : k - 2, memo, stats);
    term *= splitting_memoized(whole, first + k, length - k < 0 ? 0 : length - k, memo, stats);
    total += term;
  }
  return memo.emplace(key, std::move(total)).first->second;
}

}  // namespace

BigInt count_pascal_recursion(const BinaryWord& word, MemoStats* stats) {
  std::map<std::pair<int, std::uint64_t>, BigInt> memo;
  return pascal_memoized(word, memo, stats);
}

BigInt count_splitting(const BinaryWord& word, MemoStats* stats) {
  std::map<std::pair<int, int>, BigInt> memo;
  return splitting_memoized(word, 1, word.length(), memo, stats);
}

BigInt count_macmahon_det(const BinaryWord& word) {
  std::vector<int> s = word.descent_positions();
  const int m = static_cast<int>(s.size());
  const int p = word.p();
  // boundary positions s_0 = 0 and s_{m+1} = p
  s.insert(s.begin(), 0);
  s.push_back(p);
  std::vector<std::vector<BigRat>> matrix(m + 1, std::vector<BigRat>(m + 1));
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) {
      const int gap = s[j + 1] - s[i];
      matrix[i][j] = gap < 0 ? BigRat(0) : BigRat(BigInt(1), factorial(gap));
    }
  }
  const BigRat value = rational_det(matrix) * BigRat(factorial(p));
  if (denominator(value) != 1) {
    throw std::logic_error("count_macmahon_det: determinant identity violated");
  }
  return numerator(value);
}

BigInt count(const BinaryWord& word, Algorithm algorithm, MemoStats* stats) {
  switch (algorithm) {
    case Algorithm::kOracle: return count_bruteforce(word);
    case Algorithm::kSieve: return count_sieve(word);
    case Algorithm::kPrefix: return count_prefix_recursion(word, stats);
    case Algorithm::kPascal: return count_pascal_recursion(word, stats);
    case Algorithm::kSplitting: return count_splitting(word, stats);
    case Algorithm::kMacMahon: return count_macmahon_det(word);
  }
  throw std::logic_error("count: unknown algorithm");
}

namespace {

// Bottom-up rows for the recursive algorithms. rows[q] holds row q indexed
// by bits; rows[0] is the single coefficient for the empty permutation.
std::vector<BitsRow> ascend_rows(int p, Algorithm algorithm, MemoStats* stats) {
  std::vector<BitsRow> rows(p + 1);
  rows[0] = {BigInt(1)};
  for (int q = 1; q <= p; ++q) {
    const std::uint64_t size = std::uint64_t{1} << (q - 1);
    BitsRow row(size);
    for (std::uint64_t bits = 0; bits < size; ++bits) {
      record_lookup(stats, false);
      switch (algorithm) {
        case Algorithm::kPascal: {
          if (q == 1) {
            row[bits] = 1;
            break;
          }
          BigInt total = 0;
          for (const BinaryWord& shorter : deletion_set(BinaryWord(q, bits))) {
            record_lookup(stats, true);
            total += rows[q - 1][shorter.bits()];
          }
          row[bits] = std::move(total);
          break;
        }
        case Algorithm::kPrefix: {
          int m = 0;
          for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1) ++m;
          BigInt acc = (m % 2 == 0) ? BigInt(1) : BigInt(-1);
          int l = 0;
          for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1) {
            const int s = std::countr_zero(rest) + 1;
            ++l;
            record_lookup(stats, true);
            BigInt term = binomial(q, s) * rows[s][bits & low_mask(s - 1)];
            if ((m - l) % 2 != 0) term = -term;
            acc += term;
          }
          row[bits] = std::move(acc);
          break;
        }
        case Algorithm::kSplitting: {
          const auto digit = [&](int k) -> int {
            if (k == 0) return 0;
            if (k == q) return 1;
            return static_cast<int>((bits >> (k - 1)) & 1);
          };
          BigInt total = 0;
          for (int k = 1; k <= q; ++k) {
            if (digit(k - 1) != 0 || digit(k) != 1) continue;
            record_lookup(stats, true);
            record_lookup(stats, true);
            BigInt term = binomial(q - 1, k - 1);
            term *= rows[k - 1][k < 2 ? 0 : bits & low_mask(k - 2)];
            term *= rows[q - k][bits >> k];
            total += term;
          }
          row[bits] = std::move(total);
          break;
        }
        default:
          throw std::logic_error("ascend_rows: not a row-recursive algorithm");
      }
    }
    rows[q] = std::move(row);
  }
  return rows;
}

}  // namespace

BitsRow row_by_bits(int p, Algorithm algorithm, MemoStats* stats, int oracle_limit,
                    int row_limit) {
  if (p < 1) throw std::invalid_argument("row_by_bits: p must be positive");
  if (algorithm == Algorithm::kOracle) {
    if (p > oracle_limit) throw std::invalid_argument("row_by_bits: oracle limit exceeded");
  } else if (p > row_limit) {
    throw std::invalid_argument("row_by_bits: row limit exceeded");
  }

  switch (algorithm) {
    case Algorithm::kOracle: {
      const auto buckets = bruteforce_buckets(p);
      BitsRow row(buckets.size());
      for (std::size_t i = 0; i < buckets.size(); ++i) row[i] = BigInt(buckets[i]);
      return row;
    }
    case Algorithm::kSieve:
    case Algorithm::kMacMahon: {
      const std::uint64_t size = std::uint64_t{1} << (p - 1);
      BitsRow row(size);
      for (std::uint64_t bits = 0; bits < size; ++bits) {
        const BinaryWord word(p, bits);
        row[bits] = algorithm == Algorithm::kSieve ? count_sieve(word) : count_macmahon_det(word);
      }
      return row;
    }
    case Algorithm::kPascal:
    case Algorithm::kPrefix:
    case Algorithm::kSplitting:
      return ascend_rows(p, algorithm, stats).back();
  }
  throw std::logic_error("row_by_bits: unknown algorithm");
}

std::vector<BigInt> build_row(int p, Algorithm algorithm, MemoStats* stats, int oracle_limit,
                              int row_limit) {
  BitsRow by_bits = row_by_bits(p, algorithm, stats, oracle_limit, row_limit);
  std::vector<BigInt> row(by_bits.size());
  for (std::uint64_t d = 0; d < row.size(); ++d) {
    row[d] = std::move(by_bits[BinaryWord::from_display_index(p, d).bits()]);
  }
  return row;
}

CoefficientTable CoefficientTable::build(int p_max, Algorithm algorithm) {
  CoefficientTable table;
  table.rows_.reserve(p_max);
  for (int p = 1; p <= p_max; ++p) {
    table.rows_.push_back(row_by_bits(p, algorithm));
  }
  return table;
}

const BitsRow& CoefficientTable::row(int p) const {
  if (p < 1 || p > p_max()) throw std::out_of_range("CoefficientTable::row: p out of range");
  return rows_[p - 1];
}

BitsRow& CoefficientTable::mutable_row(int p) {
  if (p < 1 || p > p_max()) throw std::out_of_range("CoefficientTable::row: p out of range");
  return rows_[p - 1];
}

const BigInt& CoefficientTable::at(const BinaryWord& word) const {
  return row(word.p())[word.bits()];
}

}  // namespace descents
