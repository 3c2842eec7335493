#include "descents/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "descents/aggregates.hpp"
#include "descents/moments.hpp"
#include "descents/montecarlo.hpp"

namespace descents {

namespace {

class Runner {
 public:
  explicit Runner(const VerifyOptions& options) : options_(options) {
    const int p_max = std::max(1, options.p_max);
    for (int p = 1; p <= p_max; ++p) {
      BitsRow row = row_by_bits(p, Algorithm::kPascal);
      if (options_.tamper) options_.tamper(row, p);
      reference_.push_back(std::move(row));
    }
  }

  const BitsRow& reference(int p) const { return reference_[p - 1]; }
  int p_max() const { return static_cast<int>(reference_.size()); }

  void check(const std::string& name, const std::function<std::string()>& body) {
    VerifyCheck result;
    result.name = name;
    try {
      result.detail = body();  // empty string means pass
      result.pass = result.detail.empty();
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(result));
  }

  VerifyReport finish() {
    report_.ok = std::all_of(report_.checks.begin(), report_.checks.end(),
                             [](const VerifyCheck& c) { return c.pass; });
    return std::move(report_);
  }

 private:
  VerifyOptions options_;
  std::vector<BitsRow> reference_;
  VerifyReport report_;
};

std::string word_context(const BinaryWord& word) {
  return "p=" + std::to_string(word.p()) + " word=" + (word.p() == 1 ? "<empty>" : word.label());
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  Runner runner(options);
  const int p_max = runner.p_max();
  const int oracle_max = std::min(p_max, 8);

  runner.check("algorithm-agreement", [&]() -> std::string {
    for (int p = 1; p <= oracle_max; ++p) {
      const BitsRow oracle = row_by_bits(p, Algorithm::kOracle);
      for (Algorithm algorithm : kAllAlgorithms) {
        if (algorithm == Algorithm::kOracle) continue;
        const BitsRow row = algorithm == Algorithm::kPascal
                                ? runner.reference(p)
                                : row_by_bits(p, algorithm);
        for (std::uint64_t bits = 0; bits < oracle.size(); ++bits) {
          if (row[bits] != oracle[bits]) {
            return algorithm_name(algorithm) + " disagrees with oracle at " +
                   word_context(BinaryWord(p, bits));
          }
        }
      }
    }
    return {};
  });

  runner.check("row-sums-and-boundaries", [&]() -> std::string {
    for (int p = 1; p <= p_max; ++p) {
      const BitsRow& row = runner.reference(p);
      BigInt sum = 0;
      for (const BigInt& value : row) {
        if (value <= 0) return "non-positive entry in row " + std::to_string(p);
        sum += value;
      }
      if (sum != factorial(p)) return "row " + std::to_string(p) + " does not sum to p!";
      const std::uint64_t all_ones = row.size() - 1;
      if (row[0] != 1 || row[all_ones] != 1) {
        return "boundary entry of row " + std::to_string(p) + " is not 1";
      }
    }
    return {};
  });

  runner.check("reversal-and-complement-symmetry", [&]() -> std::string {
    for (int p = 1; p <= p_max; ++p) {
      const BitsRow& row = runner.reference(p);
      for (std::uint64_t bits = 0; bits < row.size(); ++bits) {
        const BinaryWord word(p, bits);
        if (row[bits] != row[word.reversed().bits()]) {
          return "reversal symmetry fails at " + word_context(word);
        }
        if (row[bits] != row[word.complemented().bits()]) {
          return "complement symmetry fails at " + word_context(word);
        }
      }
    }
    return {};
  });

  runner.check("deletion-identity", [&]() -> std::string {
    for (int p = 2; p <= p_max; ++p) {
      const BitsRow& row = runner.reference(p);
      const BitsRow& shorter = runner.reference(p - 1);
      for (std::uint64_t bits = 0; bits < row.size(); ++bits) {
        BigInt total = 0;
        for (const BinaryWord& v : deletion_set(BinaryWord(p, bits))) {
          total += shorter[v.bits()];
        }
        if (total != row[bits]) {
          return "deletion identity fails at " + word_context(BinaryWord(p, bits));
        }
      }
    }
    return {};
  });

  runner.check("numerator-matches-counts", [&]() -> std::string {
    for (int p = 1; p <= p_max; ++p) {
      const MultilinearPoly numerator = numerator_polynomial(p);
      const BitsRow& row = runner.reference(p);
      if (numerator.term_count() != row.size()) {
        return "numerator of e_" + std::to_string(p) + " has missing terms";
      }
      for (std::uint64_t bits = 0; bits < row.size(); ++bits) {
        if (numerator.coefficient(bits) != row[bits]) {
          return "numerator coefficient differs at " + word_context(BinaryWord(p, bits));
        }
      }
    }
    return {};
  });

  runner.check("moment-consistency", [&]() -> std::string {
    SplitMix64 rng(options.property_seed);
    const int p = std::min(p_max, 10);
    std::vector<RationalFunctionRep> reps;
    for (int q = 1; q <= p; ++q) reps.push_back(moment_rational_function(q));
    for (int trial = 0; trial < 100; ++trial) {
      MomentParams params;
      for (int k = 0; k < p; ++k) {
        const auto den = 2 + rng.next() % 19;  // denominator in [2, 20]
        const auto num = 1 + rng.next() % (den - 1);
        params.mu.push_back(make_rational(BigInt(num), BigInt(den)));
      }
      const std::vector<BigRat> recursion = moment_sequence(params, p);
      for (int q = 1; q <= p; ++q) {
        if (recursion[q - 1] != reps[q - 1].evaluate(params)) {
          return "recursion and rational form differ at p=" + std::to_string(q);
        }
      }
    }
    return {};
  });

  runner.check("eulerian-mahonian", [&]() -> std::string {
    for (int p = 1; p <= p_max; ++p) {
      const std::vector<BigInt> eulers = eulerian_row(p);
      BigInt total = 0;
      for (int k = 1; k <= p; ++k) {
        if (eulers[k - 1] != eulers[p - k]) return "Eulerian symmetry fails at p=" + std::to_string(p);
        total += eulers[k - 1];
      }
      if (total != factorial(p)) return "Eulerian row sum fails at p=" + std::to_string(p);

      const std::vector<BigInt> mahon = mahonian_row(p);
      total = 0;
      for (const BigInt& value : mahon) total += value;
      if (total != factorial(p)) return "Mahonian row sum fails at p=" + std::to_string(p);
    }
    for (int p = 1; p <= oracle_max; ++p) {
      // descent-count histogram straight from the oracle
      const BitsRow oracle = row_by_bits(p, Algorithm::kOracle);
      std::vector<BigInt> histogram(p);
      for (std::uint64_t bits = 0; bits < oracle.size(); ++bits) {
        histogram[std::popcount(bits)] += oracle[bits];
      }
      const std::vector<BigInt> eulers = eulerian_row(p);
      if (histogram != eulers) return "Eulerian oracle mismatch at p=" + std::to_string(p);

      const std::map<int, BigInt> inversions = inversion_distribution_oracle(p);
      const std::vector<BigInt> mahon = mahonian_row(p);
      for (int k = 0; k < static_cast<int>(mahon.size()); ++k) {
        const auto it = inversions.find(k);
        const BigInt expected = it == inversions.end() ? BigInt(0) : it->second;
        if (mahon[k] != expected) {
          return "Mahonian oracle mismatch at p=" + std::to_string(p) +
                 " k=" + std::to_string(k);
        }
      }
    }
    return {};
  });

  runner.check("alpha-reindexing", [&]() -> std::string {
    for (int p = 1; p <= p_max; ++p) {
      const BitsRow& row = runner.reference(p);
      std::vector<BigInt> from_alpha;
      for (std::uint64_t bits = 0; bits < row.size(); ++bits) {
        const BinaryWord word(p, bits);
        if (alpha_decode(word.alpha_index()) != word) {
          return "alpha index does not round-trip at " + word_context(word);
        }
        from_alpha.push_back(alpha(word.alpha_index()));
      }
      std::vector<BigInt> sorted_row(row.begin(), row.end());
      std::sort(sorted_row.begin(), sorted_row.end());
      std::sort(from_alpha.begin(), from_alpha.end());
      if (sorted_row != from_alpha) {
        return "alpha values do not re-bucket to row " + std::to_string(p);
      }
    }
    return {};
  });

  runner.check("generating-identity", [&]() -> std::string {
    const int p = std::min(p_max, 6);
    const int degree = (1 << p) - 1;
    const GenfunReport report = check_generating_identity(p, degree);
    if (!report.ok) {
      return "sides differ first at degree " + std::to_string(report.first_mismatch);
    }
    for (int n = 1; n <= degree; ++n) {
      if (report.alpha[n] <= 0) return "alpha_" + std::to_string(n) + " not positive";
      if (BigRat(report.alpha[n]) != report.lhs[n]) {
        return "extracted alpha_" + std::to_string(n) + " differs from the table";
      }
    }
    return {};
  });

  return runner.finish();
}

}  // namespace descents
