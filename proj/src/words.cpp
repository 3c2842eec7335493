#include "descents/words.hpp"

#include <bit>
#include <stdexcept>

namespace descents {

namespace {

std::uint64_t reverse_low_bits(std::uint64_t bits, int width) {
  std::uint64_t out = 0;
  for (int i = 0; i < width; ++i) {
    out = (out << 1) | ((bits >> i) & 1);
  }
  return out;
}

}  // namespace

BinaryWord::BinaryWord(int p, std::uint64_t bits) : p_(p), bits_(bits) {
  if (p < 1 || p > kMaxP) {
    throw std::invalid_argument("BinaryWord: p must be in [1, 64]");
  }
  if ((bits >> (p - 1)) != 0) {
    throw std::invalid_argument("BinaryWord: bits exceed word length");
  }
}

BinaryWord BinaryWord::parse(const std::string& label) {
  const int p = static_cast<int>(label.size()) + 1;
  if (p > kMaxP) throw std::invalid_argument("BinaryWord::parse: word too long");
  std::uint64_t bits = 0;
  for (int k = 1; k <= static_cast<int>(label.size()); ++k) {
    const char c = label[k - 1];
    if (c == '1') {
      bits |= std::uint64_t{1} << (k - 1);
    } else if (c != '0') {
      throw std::invalid_argument("BinaryWord::parse: non-binary character in word");
    }
  }
  return BinaryWord(p, bits);
}

BinaryWord BinaryWord::from_display_index(int p, std::uint64_t index) {
  if (p < 1 || p > kMaxP) {
    throw std::invalid_argument("BinaryWord: p must be in [1, 64]");
  }
  if ((index >> (p - 1)) != 0) {
    throw std::invalid_argument("BinaryWord::from_display_index: index out of range");
  }
  return BinaryWord(p, reverse_low_bits(index, p - 1));
}

BinaryWord BinaryWord::from_descent_positions(int p, std::span<const int> positions) {
  std::uint64_t bits = 0;
  int previous = 0;
  for (int s : positions) {
    if (s <= previous || s > p - 1) {
      throw std::invalid_argument(
          "BinaryWord::from_descent_positions: positions must be strictly "
          "increasing within [1, p-1]");
    }
    bits |= std::uint64_t{1} << (s - 1);
    previous = s;
  }
  return BinaryWord(p, bits);
}

int BinaryWord::bit(int k) const {
  if (k < 1 || k > length()) throw std::out_of_range("BinaryWord::bit: index out of range");
  return static_cast<int>((bits_ >> (k - 1)) & 1);
}

int BinaryWord::ones() const { return std::popcount(bits_); }

std::uint64_t BinaryWord::display_index() const { return reverse_low_bits(bits_, length()); }

std::uint64_t BinaryWord::alpha_index() const {
  return (std::uint64_t{1} << (p_ - 1)) + bits_;
}

std::string BinaryWord::label() const {
  std::string out(length(), '0');
  for (int k = 1; k <= length(); ++k) {
    if (bit(k)) out[k - 1] = '1';
  }
  return out;
}

BinaryWord BinaryWord::reversed() const {
  return BinaryWord(p_, reverse_low_bits(bits_, length()));
}

BinaryWord BinaryWord::complemented() const {
  const std::uint64_t mask = length() == 0 ? 0 : (~std::uint64_t{0} >> (64 - length()));
  return BinaryWord(p_, ~bits_ & mask);
}

BinaryWord BinaryWord::prefix(int length) const { return subword(1, length); }

BinaryWord BinaryWord::subword(int first, int length) const {
  if (length < 0 || first < 1 || first + length - 1 > this->length()) {
    throw std::out_of_range("BinaryWord::subword: range out of bounds");
  }
  const std::uint64_t mask = length == 0 ? 0 : (~std::uint64_t{0} >> (64 - length));
  return BinaryWord(length + 1, (bits_ >> (first - 1)) & mask);
}

std::vector<int> BinaryWord::descent_positions() const {
  std::vector<int> out;
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

DescentSet DescentSet::from_word(const BinaryWord& word) {
  return DescentSet{word.p(), word.descent_positions()};
}

BinaryWord DescentSet::to_word() const {
  return BinaryWord::from_descent_positions(p, positions);
}

DescentSet descent_set_of_permutation(std::span<const int> perm) {
  const int p = static_cast<int>(perm.size());
  if (p < 1 || p > BinaryWord::kMaxP) {
    throw std::invalid_argument("descent_set_of_permutation: length must be in [1, 64]");
  }
  std::uint64_t seen = 0;
  for (int value : perm) {
    if (value < 1 || value > p) {
      throw std::invalid_argument("descent_set_of_permutation: not a permutation of 1..p");
    }
    const std::uint64_t bit = std::uint64_t{1} << (value - 1);
    if (seen & bit) {
      throw std::invalid_argument("descent_set_of_permutation: repeated value");
    }
    seen |= bit;
  }
  DescentSet result{p, {}};
  for (int i = 1; i < p; ++i) {
    if (perm[i - 1] > perm[i]) result.positions.push_back(i);
  }
  return result;
}

}  // namespace descents
