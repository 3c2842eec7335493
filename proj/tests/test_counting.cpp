#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "descents/counting.hpp"
#include "descents/words.hpp"

using namespace descents;

namespace {

std::vector<BigInt> to_bigints(std::initializer_list<long long> values) {
  std::vector<BigInt> out;
  for (long long v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("binary words and descent sets") {
  const BinaryWord word = BinaryWord::parse("0110");
  CHECK(word.p() == 5);
  CHECK(word.bits() == 0b0110);  // j_2 = j_3 = 1
  CHECK(word.label() == "0110");
  CHECK(word.descent_positions() == std::vector<int>{2, 3});
  CHECK(word.display_index() == 0b0110);
  CHECK(word.alpha_index() == 16 + 0b0110);

  CHECK(BinaryWord::parse("01").reversed().label() == "10");
  CHECK(BinaryWord::parse("0110").complemented().label() == "1001");
  CHECK(BinaryWord::parse("01101").prefix(2).label() == "01");
  CHECK(BinaryWord::parse("01101").subword(3, 2).label() == "10");

  CHECK(BinaryWord::parse("").p() == 1);
  CHECK_THROWS_AS(BinaryWord::parse("01x"), std::invalid_argument);

  // display order reads the label as a binary numeral, j_1 most significant
  CHECK(BinaryWord::from_display_index(4, 0b011).label() == "011");
  CHECK(BinaryWord::from_display_index(4, 0b100).label() == "100");

  const DescentSet set = DescentSet::from_word(word);
  CHECK(set.p == 5);
  CHECK(set.positions == std::vector<int>{2, 3});
  CHECK(set.to_word() == word);
}

TEST_CASE("descent set of a permutation") {
  const std::vector<int> identity = {1, 2, 3};
  CHECK(descent_set_of_permutation(identity).positions.empty());

  const std::vector<int> reversal = {3, 2, 1};
  CHECK(descent_set_of_permutation(reversal).positions == std::vector<int>{1, 2});

  const std::vector<int> mixed = {2, 4, 1, 3};
  CHECK(descent_set_of_permutation(mixed).positions == std::vector<int>{2});

  const std::vector<int> repeated = {1, 1, 3};
  CHECK_THROWS_AS(descent_set_of_permutation(repeated), std::invalid_argument);
  const std::vector<int> out_of_range = {0, 1, 2};
  CHECK_THROWS_AS(descent_set_of_permutation(out_of_range), std::invalid_argument);
}

TEST_CASE("brute-force oracle") {
  CHECK(count_bruteforce(BinaryWord::parse("01")) == 2);
  CHECK(count_bruteforce(BinaryWord::parse("")) == 1);
  CHECK(count_bruteforce(BinaryWord::parse("0110")) == 11);
  CHECK_THROWS_AS(count_bruteforce(BinaryWord(12)), std::invalid_argument);
}

TEST_CASE("sieve") {
  CHECK(count_sieve(BinaryWord::parse("0110")) == 11);  // 1 - 10 - 10 + 30
  CHECK(count_sieve(BinaryWord::parse("0100")) == 9);
  CHECK(count_sieve(BinaryWord::parse("000000")) == 1);
  CHECK(count_sieve(BinaryWord::parse("")) == 1);
}

TEST_CASE("prefix recursion") {
  CHECK(count_prefix_recursion(BinaryWord::parse("01")) == 2);     // -1 + 3
  CHECK(count_prefix_recursion(BinaryWord::parse("0110")) == 11);  // 1 - 10 + 20
  CHECK(count_prefix_recursion(BinaryWord::parse("11111")) == 1);
  CHECK(count_prefix_recursion(BinaryWord::parse("")) == 1);
}

TEST_CASE("deletion sets") {
  const auto labels = [](const std::vector<BinaryWord>& words) {
    std::set<std::string> out;
    for (const BinaryWord& w : words) out.insert(w.label());
    return out;
  };
  CHECK(labels(deletion_set(BinaryWord::parse("0110"))) ==
        std::set<std::string>{"110", "010", "011"});
  CHECK(labels(deletion_set(BinaryWord::parse("00"))) == std::set<std::string>{"0"});
  CHECK(labels(deletion_set(BinaryWord::parse("01"))) == std::set<std::string>{"0", "1"});
  CHECK_THROWS_AS(deletion_set(BinaryWord::parse("")), std::invalid_argument);
}

TEST_CASE("pascal-style deletion recursion") {
  CHECK(count_pascal_recursion(BinaryWord::parse("0110")) == 11);  // 3 + 5 + 3
  CHECK(count_pascal_recursion(BinaryWord::parse("0")) == 1);
  CHECK(count_pascal_recursion(BinaryWord::parse("0101")) == 16);
}

TEST_CASE("splitting recursion") {
  CHECK(count_splitting(BinaryWord::parse("01")) == 2);  // C(2,1)
  CHECK(count_splitting(BinaryWord::parse("00")) == 1);  // C(2,2)
  CHECK(count_splitting(BinaryWord::parse("0110")) == 11);
}

TEST_CASE("macmahon determinant route") {
  CHECK(count_macmahon_det(BinaryWord::parse("010")) == 5);
  CHECK(count_macmahon_det(BinaryWord::parse("")) == 1);
  CHECK(count_macmahon_det(BinaryWord::parse("11")) == 1);
}

TEST_CASE("rows in display order") {
  CHECK(build_row(3, Algorithm::kPascal) == to_bigints({1, 2, 2, 1}));
  CHECK(build_row(1, Algorithm::kPascal) == to_bigints({1}));
  CHECK(build_row(5, Algorithm::kSplitting) ==
        to_bigints({1, 4, 9, 6, 9, 16, 11, 4, 4, 11, 16, 9, 6, 9, 4, 1}));
  CHECK_THROWS_AS(build_row(11, Algorithm::kOracle), std::invalid_argument);
  CHECK_THROWS_AS(build_row(21, Algorithm::kPascal), std::invalid_argument);
}

TEST_CASE("all algorithms match the oracle up to p = 6") {
  for (int p = 1; p <= 6; ++p) {
    const BitsRow oracle = row_by_bits(p, Algorithm::kOracle);
    for (Algorithm algorithm : kAllAlgorithms) {
      if (algorithm == Algorithm::kOracle) continue;
      const BitsRow row = row_by_bits(p, algorithm);
      REQUIRE(row.size() == oracle.size());
      for (std::uint64_t bits = 0; bits < row.size(); ++bits) {
        CAPTURE(p);
        CAPTURE(bits);
        CAPTURE(algorithm_name(algorithm));
        CHECK(row[bits] == oracle[bits]);
      }
    }
  }
}

TEST_CASE("table structure up to p = 12") {
  BitsRow previous;
  for (int p = 1; p <= 12; ++p) {
    const BitsRow row = row_by_bits(p, Algorithm::kPascal);
    BigInt sum = 0;
    for (std::uint64_t bits = 0; bits < row.size(); ++bits) {
      const BinaryWord word(p, bits);
      CHECK(row[bits] > 0);
      CHECK(row[bits] == row[word.reversed().bits()]);
      CHECK(row[bits] == row[word.complemented().bits()]);
      if (p >= 2) {
        BigInt deleted = 0;
        for (const BinaryWord& v : deletion_set(word)) deleted += previous[v.bits()];
        CHECK(deleted == row[bits]);
      }
      sum += row[bits];
    }
    CHECK(sum == factorial(p));
    CHECK(row.front() == 1);
    CHECK(row.back() == 1);
    previous = row;
  }
}

TEST_CASE("algorithm names round-trip") {
  for (Algorithm algorithm : kAllAlgorithms) {
    CHECK(parse_algorithm(algorithm_name(algorithm)) == algorithm);
  }
  CHECK_THROWS_AS(parse_algorithm("newton"), std::invalid_argument);
}

TEST_CASE("coefficient table") {
  const CoefficientTable table = CoefficientTable::build(5, Algorithm::kPascal);
  CHECK(table.p_max() == 5);
  CHECK(table.at(BinaryWord::parse("0110")) == 11);
  CHECK(table.at(BinaryWord::parse("")) == 1);
  CHECK_THROWS_AS(table.row(6), std::out_of_range);
}
