#pragma once

#include <vector>

#include "descents/rational.hpp"

namespace descents {

// Formal power series truncated at a fixed degree, with exact rational
// coefficients. Operations are exact up to the truncation degree and drop
// everything above it. Binary operations require matching degrees.
class PowerSeries {
 public:
  explicit PowerSeries(int degree);

  static PowerSeries constant(int degree, const BigRat& value);
  static PowerSeries monomial(int degree, int exponent, const BigRat& coeff = BigRat(1));

  int degree() const { return degree_; }
  const BigRat& coefficient(int n) const;
  void set_coefficient(int n, const BigRat& value);

  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator-=(const PowerSeries& other);
  PowerSeries& operator*=(const BigRat& scalar);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) {
    a += b;
    return a;
  }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) {
    a -= b;
    return a;
  }
  friend PowerSeries operator*(PowerSeries a, const BigRat& s) {
    a *= s;
    return a;
  }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

  // Multiplication by x^n; top coefficients fall off the truncation.
  PowerSeries shifted(int n) const;

  bool operator==(const PowerSeries& other) const = default;

 private:
  int degree_;
  std::vector<BigRat> coeff_;  // coeff_[n] is the coefficient of x^n
};

// Multiplicative inverse up to the truncation degree. Throws
// std::domain_error when the constant term is zero.
PowerSeries series_recip(const PowerSeries& s);

}  // namespace descents
