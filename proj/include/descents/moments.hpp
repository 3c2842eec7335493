#pragma once

#include <string>
#include <vector>

#include "descents/multilinear.hpp"
#include "descents/rational.hpp"

namespace descents {

// The step moments mu_1, mu_2, ... treated as exact rational parameters.
// mu_0 = 1 is implicit and mu_k = 1 is a pole of every formula below.
struct MomentParams {
  std::vector<BigRat> mu;  // mu[k-1] supplies mu_k

  // Parses a comma-separated list such as "1/2,1/4,0".
  static MomentParams parse(const std::string& csv);

  const BigRat& at(int k) const;  // mu_k, throws if k not supplied
};

// e_p from the moment recursion
//   e_p = 1/(1 - mu_p) * sum_{k=0}^{p-1} binom(p,k) mu_k e_k,  e_0 = 1,
// evaluated exactly. Throws std::domain_error when some mu_k = 1, k <= p.
BigRat moment_recursion(const MomentParams& params, int p);

// e_1..e_p as one pass of the recursion.
std::vector<BigRat> moment_sequence(const MomentParams& params, int p);

// Numerator of e_p written over the denominator (1-mu_1)...(1-mu_p):
// a multilinear polynomial in mu_1..mu_{p-1} with positive integer
// coefficients, obtained by clearing denominators in the recursion.
MultilinearPoly numerator_polynomial(int p);

// e_p as numerator over the formal product (1-mu_1)...(1-mu_p).
struct RationalFunctionRep {
  int p = 1;
  MultilinearPoly numerator;

  BigRat evaluate(const MomentParams& params) const;
};

RationalFunctionRep moment_rational_function(int p);

// Must agree exactly with moment_recursion; the two routes share nothing
// but the recursion itself.
BigRat evaluate_rational(int p, const MomentParams& params);

// k-th step moment of the +-1 walk with drift nu: e^{-k nu} cosh(k).
double random_walk_mu(double nu, int k);

// Smallest drift with mu_p < 1, namely ln(cosh p)/p.
double finiteness_threshold(int p);

// e_1..e_p of the walk model in double precision (mu_k irrational here).
// Throws std::domain_error when mu_k >= 1 for some k <= p.
std::vector<double> walk_moment_sequence(double nu, int p);

}  // namespace descents
