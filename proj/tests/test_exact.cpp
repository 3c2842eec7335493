#include <doctest.h>

#include <vector>

#include "descents/montecarlo.hpp"
#include "descents/multilinear.hpp"
#include "descents/power_series.hpp"
#include "descents/rational.hpp"

using namespace descents;

namespace {

// Independent determinant oracle: textbook cofactor expansion along the
// first row. Exponential, only for the small matrices used in tests.
BigRat cofactor_det(const std::vector<std::vector<BigRat>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  BigRat total(0);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<BigRat>> minor;
    for (std::size_t row = 1; row < n; ++row) {
      std::vector<BigRat> minor_row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) minor_row.push_back(m[row][j]);
      }
      minor.push_back(std::move(minor_row));
    }
    const BigRat term = m[0][col] * cofactor_det(minor);
    if (col % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigRat q(long long num, long long den = 1) { return make_rational(BigInt(num), BigInt(den)); }

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(make_rational(BigInt(4), BigInt(-6)) == q(-2, 3));
  CHECK(parse_rational("7/21") == q(1, 3));
  CHECK(parse_rational("-3") == q(-3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);

  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(64, 32) == BigInt("1832624140942590534"));

  const std::vector<int> parts = {2, 1, 2};
  CHECK(multinomial(5, parts) == 30);
  const std::vector<int> bad = {2, 2};
  CHECK_THROWS_AS(multinomial(5, bad), std::invalid_argument);
}

TEST_CASE("determinant examples") {
  CHECK(rational_det({{q(1, 2), q(1, 24)}, {q(1), q(1, 2)}}) == q(5, 24));
  CHECK(rational_det({{q(1)}}) == q(1));
  CHECK(rational_det({{q(1), q(0)}, {q(0), q(1)}}) == q(1));
  // singular matrix
  CHECK(rational_det({{q(1), q(2)}, {q(2), q(4)}}) == q(0));
  CHECK_THROWS_AS(rational_det({{q(1), q(2)}}), std::invalid_argument);
}

TEST_CASE("determinant agrees with cofactor expansion on random matrices") {
  SplitMix64 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.next() % 4;
    std::vector<std::vector<BigRat>> m(n, std::vector<BigRat>(n));
    for (auto& row : m) {
      for (auto& entry : row) {
        const long long num = static_cast<long long>(rng.next() % 19) - 9;
        const long long den = 1 + static_cast<long long>(rng.next() % 9);
        entry = q(num, den);
      }
    }
    CHECK(rational_det(m) == cofactor_det(m));
  }
}

TEST_CASE("multilinear polynomial arithmetic") {
  const MultilinearPoly one = MultilinearPoly::constant(2, 1);
  MultilinearPoly one_plus_mu1 = one;
  one_plus_mu1 += MultilinearPoly::variable(2, 1);

  SUBCASE("multiplicative identity") { CHECK(poly_mul(one_plus_mu1, one) == one_plus_mu1); }

  SUBCASE("monomial shift") {
    const MultilinearPoly mu2 = MultilinearPoly::variable(2, 2);
    const MultilinearPoly product = poly_mul(one_plus_mu1, mu2);
    CHECK(product.coefficient(0b10) == 1);
    CHECK(product.coefficient(0b11) == 1);
    CHECK(product.term_count() == 2);
  }

  SUBCASE("hand-distributed product") {
    MultilinearPoly one_minus_mu2 = one;
    one_minus_mu2 -= MultilinearPoly::variable(2, 2);
    const MultilinearPoly product = poly_mul(one_plus_mu1, one_minus_mu2);
    CHECK(product.coefficient(0b00) == 1);
    CHECK(product.coefficient(0b01) == 1);
    CHECK(product.coefficient(0b10) == -1);
    CHECK(product.coefficient(0b11) == -1);
  }

  SUBCASE("squaring a variable is rejected") {
    CHECK_THROWS_AS(poly_mul(one_plus_mu1, one_plus_mu1), std::invalid_argument);
  }

  SUBCASE("zero coefficients are pruned") {
    MultilinearPoly poly = one;
    poly -= one;
    CHECK(poly.is_zero());
    poly.add_term(0b1, BigInt(3));
    poly.add_term(0b1, BigInt(-3));
    CHECK(poly.is_zero());
  }

  SUBCASE("evaluation") {
    const std::vector<BigRat> mu = {q(1, 2), q(1, 3)};
    CHECK(one_plus_mu1.evaluate(mu) == q(3, 2));
  }
}

TEST_CASE("poly_mul is commutative and associative on disjoint supports") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    // three polynomials over disjoint variable blocks {1,2}, {3,4}, {5,6}
    MultilinearPoly parts[3] = {MultilinearPoly(6), MultilinearPoly(6), MultilinearPoly(6)};
    for (int block = 0; block < 3; ++block) {
      for (std::uint64_t mask = 0; mask < 4; ++mask) {
        const long long coeff = static_cast<long long>(rng.next() % 11) - 5;
        parts[block].add_term(mask << (2 * block), BigInt(coeff));
      }
    }
    const auto& [a, b, c] = parts;
    CHECK(poly_mul(a, b) == poly_mul(b, a));
    CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
  }
}

TEST_CASE("power series examples") {
  SUBCASE("geometric series") {
    PowerSeries s = PowerSeries::constant(3, q(1));
    s -= PowerSeries::monomial(3, 1);
    const PowerSeries t = series_recip(s);
    for (int n = 0; n <= 3; ++n) CHECK(t.coefficient(n) == 1);
  }

  SUBCASE("identity") {
    const PowerSeries one = PowerSeries::constant(5, q(1));
    CHECK(series_recip(one) == one);
  }

  SUBCASE("geometric series in x^2") {
    PowerSeries s = PowerSeries::constant(5, q(1));
    s -= PowerSeries::monomial(5, 2);
    const PowerSeries t = series_recip(s);
    for (int n = 0; n <= 5; ++n) CHECK(t.coefficient(n) == (n % 2 == 0 ? 1 : 0));
  }

  SUBCASE("zero constant term is not invertible") {
    CHECK_THROWS_AS(series_recip(PowerSeries::monomial(4, 1)), std::domain_error);
  }

  SUBCASE("mismatched truncation degrees are rejected") {
    PowerSeries a(3);
    const PowerSeries b(4);
    CHECK_THROWS_AS(a += b, std::logic_error);
  }
}

TEST_CASE("series multiplied by its reciprocal is one") {
  SplitMix64 rng(99);
  const PowerSeries one = PowerSeries::constant(12, q(1));
  for (int trial = 0; trial < 40; ++trial) {
    PowerSeries s(12);
    s.set_coefficient(0, q(1 + static_cast<long long>(rng.next() % 5)));
    for (int n = 1; n <= 12; ++n) {
      const long long num = static_cast<long long>(rng.next() % 15) - 7;
      const long long den = 1 + static_cast<long long>(rng.next() % 6);
      s.set_coefficient(n, q(num, den));
    }
    CHECK(s * series_recip(s) == one);
  }
}
