#include "descents/power_series.hpp"

#include <stdexcept>

namespace descents {

namespace {

void check_same_degree(const PowerSeries& a, const PowerSeries& b) {
  if (a.degree() != b.degree()) {
    throw std::logic_error("PowerSeries: mismatched truncation degrees");
  }
}

}  // namespace

PowerSeries::PowerSeries(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("PowerSeries: negative degree");
  coeff_.assign(degree + 1, BigRat(0));
}

PowerSeries PowerSeries::constant(int degree, const BigRat& value) {
  PowerSeries s(degree);
  s.coeff_[0] = value;
  return s;
}

PowerSeries PowerSeries::monomial(int degree, int exponent, const BigRat& coeff) {
  PowerSeries s(degree);
  if (exponent < 0) throw std::invalid_argument("PowerSeries::monomial: negative exponent");
  if (exponent <= degree) s.coeff_[exponent] = coeff;
  return s;
}

const BigRat& PowerSeries::coefficient(int n) const {
  if (n < 0 || n > degree_) {
    throw std::out_of_range("PowerSeries::coefficient: index out of range");
  }
  return coeff_[n];
}

void PowerSeries::set_coefficient(int n, const BigRat& value) {
  if (n < 0 || n > degree_) {
    throw std::out_of_range("PowerSeries::set_coefficient: index out of range");
  }
  coeff_[n] = value;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  check_same_degree(*this, other);
  for (int n = 0; n <= degree_; ++n) coeff_[n] += other.coeff_[n];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
  check_same_degree(*this, other);
  for (int n = 0; n <= degree_; ++n) coeff_[n] -= other.coeff_[n];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const BigRat& scalar) {
  for (auto& c : coeff_) c *= scalar;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  check_same_degree(a, b);
  PowerSeries result(a.degree_);
  for (int i = 0; i <= a.degree_; ++i) {
    if (a.coeff_[i] == 0) continue;
    for (int j = 0; i + j <= a.degree_; ++j) {
      if (b.coeff_[j] == 0) continue;
      result.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
    }
  }
  return result;
}

PowerSeries PowerSeries::shifted(int n) const {
  if (n < 0) throw std::invalid_argument("PowerSeries::shifted: negative shift");
  PowerSeries result(degree_);
  for (int i = 0; i + n <= degree_; ++i) result.coeff_[i + n] = coeff_[i];
  return result;
}

PowerSeries series_recip(const PowerSeries& s) {
  if (s.coefficient(0) == 0) {
    throw std::domain_error("series_recip: non-invertible series");
  }
  const int degree = s.degree();
  PowerSeries t(degree);
  const BigRat inv_c0 = BigRat(1) / s.coefficient(0);
  t.set_coefficient(0, inv_c0);
  // t_n = -(1/s_0) * sum_{k=1..n} s_k t_{n-k}
  for (int n = 1; n <= degree; ++n) {
    BigRat acc(0);
    for (int k = 1; k <= n; ++k) {
      if (s.coefficient(k) == 0) continue;
      acc += s.coefficient(k) * t.coefficient(n - k);
    }
    t.set_coefficient(n, BigRat(-acc * inv_c0));
  }
  return t;
}

}  // namespace descents
