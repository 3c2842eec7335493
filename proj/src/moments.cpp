#include "descents/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace descents {

MomentParams MomentParams::parse(const std::string& csv) {
  MomentParams params;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::string piece =
        csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    params.mu.push_back(parse_rational(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return params;
}

const BigRat& MomentParams::at(int k) const {
  if (k < 1 || k > static_cast<int>(mu.size())) {
    throw std::invalid_argument("MomentParams: mu_" + std::to_string(k) + " not supplied");
  }
  return mu[k - 1];
}

std::vector<BigRat> moment_sequence(const MomentParams& params, int p) {
  if (p < 1) throw std::invalid_argument("moment_sequence: p must be positive");
  for (int k = 1; k <= p; ++k) {
    if (params.at(k) == 1) {
      throw std::domain_error("pole at mu_" + std::to_string(k) + " = 1");
    }
  }
  std::vector<BigRat> e(p + 1);
  e[0] = 1;
  for (int q = 1; q <= p; ++q) {
    BigRat sum = 1;  // k = 0 term: binom(q,0) mu_0 e_0
    for (int k = 1; k < q; ++k) {
      sum += BigRat(binomial(q, k)) * params.at(k) * e[k];
    }
    e[q] = sum / (BigRat(1) - params.at(q));
  }
  e.erase(e.begin());
  return e;
}

BigRat moment_recursion(const MomentParams& params, int p) {
  return moment_sequence(params, p).back();
}

MultilinearPoly numerator_polynomial(int p) {
  if (p < 1) throw std::invalid_argument("numerator_polynomial: p must be positive");
  // Clearing the denominator of the recursion gives
  //   N_p = sum_{k=0}^{p-1} binom(p,k) mu_k N_k (1-mu_{k+1})...(1-mu_{p-1}),
  // which stays multilinear because N_k only involves mu_1..mu_{k-1}.
  std::vector<MultilinearPoly> numerators(p + 1);
  numerators[0] = MultilinearPoly::constant(0, 1);
  for (int q = 1; q <= p; ++q) {
    const int arity = q - 1;
    MultilinearPoly total(arity);
    for (int k = 0; k < q; ++k) {
      MultilinearPoly term = numerators[k];
      term *= binomial(q, k);
      if (k >= 1) term = poly_mul(term, MultilinearPoly::variable(arity, k));
      for (int i = k + 1; i <= q - 1; ++i) {
        MultilinearPoly factor = MultilinearPoly::constant(arity, 1);
        factor -= MultilinearPoly::variable(arity, i);
        term = poly_mul(term, factor);
      }
      total += term;
    }
    numerators[q] = std::move(total);
  }
  return numerators[p];
}

BigRat RationalFunctionRep::evaluate(const MomentParams& params) const {
  BigRat denominator_value(1);
  for (int k = 1; k <= p; ++k) {
    if (params.at(k) == 1) {
      throw std::domain_error("pole at mu_" + std::to_string(k) + " = 1");
    }
    denominator_value *= BigRat(1) - params.at(k);
  }
  return numerator.evaluate(params.mu) / denominator_value;
}

RationalFunctionRep moment_rational_function(int p) {
  return RationalFunctionRep{p, numerator_polynomial(p)};
}

BigRat evaluate_rational(int p, const MomentParams& params) {
  return moment_rational_function(p).evaluate(params);
}

double random_walk_mu(double nu, int k) {
  if (nu <= 0) throw std::invalid_argument("random_walk_mu: nu must be positive");
  if (k < 1) throw std::invalid_argument("random_walk_mu: k must be positive");
  // e^{-k nu} cosh k, written to avoid overflow of cosh for large k
  return 0.5 * (std::exp(k * (1.0 - nu)) + std::exp(-k * (1.0 + nu)));
}

double finiteness_threshold(int p) {
  if (p < 1) throw std::invalid_argument("finiteness_threshold: p must be positive");
  // ln(cosh p)/p = 1 + (log1p(e^{-2p}) - ln 2)/p, stable for all p
  return 1.0 + (std::log1p(std::exp(-2.0 * p)) - std::log(2.0)) / p;
}

std::vector<double> walk_moment_sequence(double nu, int p) {
  if (p < 1) throw std::invalid_argument("walk_moment_sequence: p must be positive");
  std::vector<double> mu(p + 1, 1.0);
  for (int k = 1; k <= p; ++k) {
    mu[k] = random_walk_mu(nu, k);
    if (mu[k] >= 1.0) {
      throw std::domain_error("walk_moment_sequence: mu_" + std::to_string(k) +
                              " >= 1, moment infinite");
    }
  }
  std::vector<double> e(p + 1, 1.0);
  std::vector<double> binom_row = {1.0};
  for (int q = 1; q <= p; ++q) {
    // next row of the binomial triangle
    std::vector<double> next(q + 1, 1.0);
    for (int k = 1; k < q; ++k) next[k] = binom_row[k - 1] + binom_row[k];
    binom_row = std::move(next);
    double sum = 0.0;
    for (int k = 0; k < q; ++k) sum += binom_row[k] * mu[k] * e[k];
    e[q] = sum / (1.0 - mu[q]);
  }
  e.erase(e.begin());
  return e;
}

}  // namespace descents
