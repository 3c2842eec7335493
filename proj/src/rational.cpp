#include "descents/rational.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace descents {

BigRat make_rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("make_rational: zero denominator");
  }
  if (denominator < 0) {
    return BigRat(BigInt(-numerator), BigInt(-denominator));
  }
  return BigRat(numerator, denominator);
}

namespace {

BigInt parse_integer(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) {
    throw std::invalid_argument("parse_rational: missing digits in '" + text + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("parse_rational: invalid character in '" + text + "'");
    }
  }
  return BigInt(text);
}

}  // namespace

BigRat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return BigRat(parse_integer(text));
  }
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
  }
  return make_rational(num, den);
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return result;
}

BigInt multinomial(int p, std::span<const int> parts) {
  int total = 0;
  BigInt result = 1;
  for (int part : parts) {
    if (part < 0) throw std::invalid_argument("multinomial: negative part");
    total += part;
    result *= binomial(total, part);
  }
  if (total != p) throw std::invalid_argument("multinomial: parts do not sum to p");
  return result;
}

BigRat rational_det(const std::vector<std::vector<BigRat>>& matrix) {
  const std::size_t n = matrix.size();
  for (const auto& row : matrix) {
    if (row.size() != n) throw std::invalid_argument("rational_det: matrix not square");
  }
  if (n == 0) return BigRat(1);

  std::vector<std::vector<BigRat>> a = matrix;
  BigRat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return BigRat(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      const BigRat factor = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) {
        a[row][j] -= factor * a[col][j];
      }
    }
  }
  return det;
}

}  // namespace descents
