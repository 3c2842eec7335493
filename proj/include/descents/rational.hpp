#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <vector>

namespace descents {

// Arbitrary-precision exact scalars. BigRat values are kept in lowest terms
// with a positive denominator by the backend; helpers below preserve that.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Normalized n/d. Throws std::invalid_argument when d == 0.
BigRat make_rational(const BigInt& numerator, const BigInt& denominator);

// Accepts "n" or "n/d" with optional leading '-'. Throws
// std::invalid_argument on malformed input or zero denominator.
BigRat parse_rational(const std::string& text);

BigInt factorial(int n);
BigInt binomial(int n, int k);

// p! / (parts[0]! * parts[1]! * ...) where the parts sum to p.
BigInt multinomial(int p, std::span<const int> parts);

// Exact determinant of a square matrix by Gaussian elimination with
// exact rational pivots. The 1x1 case returns the entry.
BigRat rational_det(const std::vector<std::vector<BigRat>>& matrix);

}  // namespace descents
