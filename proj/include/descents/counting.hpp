#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "descents/rational.hpp"
#include "descents/words.hpp"

namespace descents {

// The number of permutations of length p whose descent set is exactly the
// one encoded by a BinaryWord. Six independent routes compute it:
//
//   oracle     enumerate all p! permutations and bucket by descent set
//   sieve      inclusion-exclusion over subsets of the descent set
//   prefix     recursion over prefixes of the word
//   pascal     one-row recursion summing over single-digit deletions
//   splitting  conditioning on the position of the largest entry
//   macmahon   p! times MacMahon's determinant of reciprocal factorials
enum class Algorithm { kOracle, kSieve, kPrefix, kPascal, kSplitting, kMacMahon };

inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::kOracle,  Algorithm::kSieve,     Algorithm::kPrefix,
    Algorithm::kPascal,  Algorithm::kSplitting, Algorithm::kMacMahon,
};

std::string algorithm_name(Algorithm algorithm);
Algorithm parse_algorithm(const std::string& name);  // throws std::invalid_argument

inline constexpr int kDefaultOracleLimit = 10;
inline constexpr int kDefaultRowLimit = 20;

// Cache statistics for the memoized recursions.
struct MemoStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
};

// Full enumeration of the symmetric group; errors out above the limit.
BigInt count_bruteforce(const BinaryWord& word, int oracle_limit = kDefaultOracleLimit);

BigInt count_sieve(const BinaryWord& word);
BigInt count_prefix_recursion(const BinaryWord& word, MemoStats* stats = nullptr);
BigInt count_pascal_recursion(const BinaryWord& word, MemoStats* stats = nullptr);
BigInt count_splitting(const BinaryWord& word, MemoStats* stats = nullptr);
BigInt count_macmahon_det(const BinaryWord& word);

BigInt count(const BinaryWord& word, Algorithm algorithm, MemoStats* stats = nullptr);

// All distinct words obtained by deleting exactly one digit; one
// representative per run of equal digits. Requires p >= 2.
std::vector<BinaryWord> deletion_set(const BinaryWord& word);

// A row of 2^{p-1} coefficients indexed by BinaryWord::bits().
using BitsRow = std::vector<BigInt>;

BitsRow row_by_bits(int p, Algorithm algorithm, MemoStats* stats = nullptr,
                    int oracle_limit = kDefaultOracleLimit, int row_limit = kDefaultRowLimit);

// The same row ordered for display: entry d corresponds to the word whose
// label, read with j_1 most significant, is the binary numeral d.
std::vector<BigInt> build_row(int p, Algorithm algorithm, MemoStats* stats = nullptr,
                              int oracle_limit = kDefaultOracleLimit,
                              int row_limit = kDefaultRowLimit);

// Rows 1..p_max of the coefficient triangle, kept in bits order.
class CoefficientTable {
 public:
  static CoefficientTable build(int p_max, Algorithm algorithm);

  int p_max() const { return static_cast<int>(rows_.size()); }
  const BitsRow& row(int p) const;
  BitsRow& mutable_row(int p);
  const BigInt& at(const BinaryWord& word) const;

 private:
  std::vector<BitsRow> rows_;  // rows_[p-1] is row p
};

}  // namespace descents
