#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "descents/rational.hpp"

namespace descents {

// Integer-coefficient polynomial in variables mu_1..mu_arity where every
// exponent is 0 or 1. A term is keyed by a bitmask: bit k-1 set means the
// monomial contains mu_k. Zero coefficients are never stored.
class MultilinearPoly {
 public:
  explicit MultilinearPoly(int arity = 0);

  static MultilinearPoly constant(int arity, BigInt value);
  static MultilinearPoly variable(int arity, int k);  // mu_k, 1-based

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<std::uint64_t, BigInt>& terms() const { return terms_; }

  // Coefficient of the monomial with the given variable mask; 0 if absent.
  BigInt coefficient(std::uint64_t mask) const;

  // Adds coeff to the monomial at mask, pruning the term if it cancels.
  void add_term(std::uint64_t mask, const BigInt& coeff);

  MultilinearPoly& operator+=(const MultilinearPoly& other);
  MultilinearPoly& operator-=(const MultilinearPoly& other);
  MultilinearPoly& operator*=(const BigInt& scalar);

  friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) {
    a += b;
    return a;
  }
  friend MultilinearPoly operator-(MultilinearPoly a, const MultilinearPoly& b) {
    a -= b;
    return a;
  }
  friend MultilinearPoly operator*(MultilinearPoly a, const BigInt& s) {
    a *= s;
    return a;
  }

  // mu[k-1] supplies the value of mu_k; mu.size() must cover the arity.
  BigRat evaluate(std::span<const BigRat> mu) const;

  bool operator==(const MultilinearPoly& other) const = default;

 private:
  int arity_;
  std::map<std::uint64_t, BigInt> terms_;
};

// Exact product. Throws std::invalid_argument if any pair of terms shares a
// variable, since that would create a squared variable.
MultilinearPoly poly_mul(const MultilinearPoly& a, const MultilinearPoly& b);

inline MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b) {
  return poly_mul(a, b);
}

}  // namespace descents
