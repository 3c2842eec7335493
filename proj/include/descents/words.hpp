#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace descents {

// The multiindex (j_1, ..., j_{p-1}) attached to permutations of length p.
// j_k marks a descent at position k. Bit k-1 of bits() holds j_k, so the
// all-important packing j_1 = least significant bit matches the index map
// used by the alpha sequence. Display labels print j_1 first.
class BinaryWord {
 public:
  static constexpr int kMaxP = 64;

  explicit BinaryWord(int p, std::uint64_t bits = 0);

  // Parses a label such as "0110" (j_1 first). The empty string is the
  // unique word for p = 1.
  static BinaryWord parse(const std::string& label);

  // Word whose label, read as a binary numeral with j_1 most significant,
  // equals index. This is the ordering used to display rows.
  static BinaryWord from_display_index(int p, std::uint64_t index);

  static BinaryWord from_descent_positions(int p, std::span<const int> positions);

  int p() const { return p_; }
  int length() const { return p_ - 1; }
  std::uint64_t bits() const { return bits_; }

  int bit(int k) const;  // j_k, 1-based
  int ones() const;
  std::uint64_t display_index() const;
  std::uint64_t alpha_index() const;  // 2^{p-1} + sum j_k 2^{k-1}

  std::string label() const;

  BinaryWord reversed() const;
  BinaryWord complemented() const;

  // The first `length` digits as a word for permutation length `length`+1.
  BinaryWord prefix(int length) const;
  // Digits j_first .. j_{first+length-1} as a standalone word.
  BinaryWord subword(int first, int length) const;

  // Sorted descent positions {k : j_k = 1}.
  std::vector<int> descent_positions() const;

  auto operator<=>(const BinaryWord& other) const = default;

 private:
  int p_;
  std::uint64_t bits_;
};

// Dual view of a BinaryWord: the strictly increasing positions s_1 < ... < s_m.
struct DescentSet {
  int p = 1;
  std::vector<int> positions;

  static DescentSet from_word(const BinaryWord& word);
  BinaryWord to_word() const;
};

// Positions i with perm(i) > perm(i+1). Validates that perm is a
// permutation of 1..p and throws std::invalid_argument otherwise.
DescentSet descent_set_of_permutation(std::span<const int> perm);

}  // namespace descents
