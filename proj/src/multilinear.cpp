#include "descents/multilinear.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace descents {

namespace {

void check_arity(int arity) {
  if (arity < 0 || arity > 63) {
    throw std::invalid_argument("MultilinearPoly: arity must be in [0, 63]");
  }
}

}  // namespace

MultilinearPoly::MultilinearPoly(int arity) : arity_(arity) { check_arity(arity); }

MultilinearPoly MultilinearPoly::constant(int arity, BigInt value) {
  MultilinearPoly poly(arity);
  poly.add_term(0, value);
  return poly;
}

MultilinearPoly MultilinearPoly::variable(int arity, int k) {
  if (k < 1 || k > arity) {
    throw std::invalid_argument("MultilinearPoly::variable: index out of range");
  }
  MultilinearPoly poly(arity);
  poly.add_term(std::uint64_t{1} << (k - 1), 1);
  return poly;
}

BigInt MultilinearPoly::coefficient(std::uint64_t mask) const {
  const auto it = terms_.find(mask);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultilinearPoly::add_term(std::uint64_t mask, const BigInt& coeff) {
  if (arity_ < 64 && mask >> arity_) {
    throw std::invalid_argument("MultilinearPoly::add_term: mask exceeds arity");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(mask, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& other) {
  arity_ = std::max(arity_, other.arity_);
  for (const auto& [mask, coeff] : other.terms_) add_term(mask, coeff);
  return *this;
}

MultilinearPoly& MultilinearPoly::operator-=(const MultilinearPoly& other) {
  arity_ = std::max(arity_, other.arity_);
  for (const auto& [mask, coeff] : other.terms_) add_term(mask, BigInt(-coeff));
  return *this;
}

MultilinearPoly& MultilinearPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, coeff] : terms_) coeff *= scalar;
  return *this;
}

BigRat MultilinearPoly::evaluate(std::span<const BigRat> mu) const {
  if (static_cast<int>(mu.size()) < arity_) {
    throw std::invalid_argument("MultilinearPoly::evaluate: too few values");
  }
  BigRat total(0);
  for (const auto& [mask, coeff] : terms_) {
    BigRat monomial(coeff);
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      monomial *= mu[std::countr_zero(rest)];
    }
    total += monomial;
  }
  return total;
}

MultilinearPoly poly_mul(const MultilinearPoly& a, const MultilinearPoly& b) {
  MultilinearPoly result(std::max(a.arity(), b.arity()));
  for (const auto& [mask_a, coeff_a] : a.terms()) {
    for (const auto& [mask_b, coeff_b] : b.terms()) {
      if (mask_a & mask_b) {
        throw std::invalid_argument(
            "poly_mul: operands share a variable; product is not multilinear");
      }
      result.add_term(mask_a | mask_b, BigInt(coeff_a * coeff_b));
    }
  }
  return result;
}

}  // namespace descents
