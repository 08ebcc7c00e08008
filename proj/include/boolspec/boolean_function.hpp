#pragma once

/**
 * @file boolean_function.hpp
 * @brief Bit-packed truth tables of functions {-1,1}^n -> {-1,1}.
 *
 * Input encoding: index j in [0, 2^n) represents the point x with
 * x_i = +1 iff bit (i-1) of j is set. The parity character chi_S(x)
 * is then (-1)^popcount(~j & S), so kernels never branch on signs.
 *
 * Storage: bit j of the table is 1 iff f(x) = +1. Padding bits beyond
 * 2^n in the last word are always zero, so popcount(table) is the
 * number of +1 outputs.
 */

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boolspec {

/// Largest arity accepted for full-table work (2^24 bits = 2 MiB).
inline constexpr unsigned kMaxArity = 24;

using InputIndex = std::uint64_t;
using Mask = std::uint64_t;

enum class Sign : int { minus = -1, plus = 1 };

inline constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

/// Coordinates are 1-based throughout the public interface.
inline InputIndex flip_coordinate(InputIndex j, unsigned n, unsigned i) {
  if (i < 1 || i > n) throw std::out_of_range("coordinate out of range");
  return j ^ (InputIndex{1} << (i - 1));
}

/// Index of -x: complement of j within n bits.
inline constexpr InputIndex complement(InputIndex j, unsigned n) noexcept {
  return ~j & ((InputIndex{1} << n) - 1);
}

/// x_i for input j (i is 1-based, unchecked).
inline constexpr int coordinate_value(InputIndex j, unsigned i) noexcept {
  return ((j >> (i - 1)) & 1U) ? 1 : -1;
}

/// chi_S(x) for input j.
inline constexpr int character(Mask s, InputIndex j) noexcept {
  return (std::popcount(~j & s) & 1) ? -1 : 1;
}

inline std::vector<int> decode_input(InputIndex j, unsigned n) {
  std::vector<int> x(n);
  for (unsigned i = 1; i <= n; ++i) x[i - 1] = coordinate_value(j, i);
  return x;
}

inline InputIndex encode_input(std::span<const int> x) {
  InputIndex j = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 1)
      j |= InputIndex{1} << i;
    else if (x[i] != -1)
      throw std::invalid_argument("input coordinates must be +1 or -1");
  }
  return j;
}

/// A permutation of 1..n, pi[k-1] = pi(k).
using Permutation = std::vector<unsigned>;

inline void check_permutation(const Permutation& pi, unsigned n) {
  if (pi.size() != n) throw std::invalid_argument("permutation has wrong length");
  std::vector<bool> seen(n + 1, false);
  for (unsigned v : pi) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("malformed permutation");
    seen[v] = true;
  }
}

/// Image of a subset mask under pi: bit (k-1) moves to bit (pi(k)-1).
inline Mask permute_mask(Mask s, const Permutation& pi) {
  Mask out = 0;
  for (std::size_t k = 0; k < pi.size(); ++k)
    if ((s >> k) & 1U) out |= Mask{1} << (pi[k] - 1);
  return out;
}

class BooleanFunction {
 public:
  using word_type = std::uint64_t;
  static constexpr unsigned word_bits = 64;

  /// All outputs -1.
  explicit BooleanFunction(unsigned arity) : arity_(check_arity(arity)), words_(word_count(arity), 0) {}

  /// Builds from a predicate: bit j is set iff positive(j).
  template <typename Pred>
    requires std::is_invocable_r_v<bool, Pred, InputIndex>
  static BooleanFunction from_predicate(unsigned arity, Pred&& positive) {
    BooleanFunction f(arity);
    const InputIndex size = f.size();
    for (InputIndex j = 0; j < size; ++j)
      if (positive(j)) f.words_[j / word_bits] |= word_type{1} << (j % word_bits);
    return f;
  }

  static BooleanFunction from_signs(std::span<const int> signs) {
    if (signs.empty() || !std::has_single_bit(signs.size()))
      throw std::invalid_argument("sign table length must be a power of two");
    const auto arity = static_cast<unsigned>(std::countr_zero(signs.size()));
    for (int s : signs)
      if (s != 1 && s != -1) throw std::invalid_argument("sign table entries must be +1 or -1");
    return from_predicate(arity, [&](InputIndex j) { return signs[j] == 1; });
  }

  static BooleanFunction from_words(unsigned arity, std::vector<word_type> words) {
    BooleanFunction f(arity);
    if (words.size() != f.words_.size()) throw std::invalid_argument("word count does not match arity");
    f.words_ = std::move(words);
    f.clear_padding();
    return f;
  }

  /// Parses the lowercase hex text form (see to_hex).
  static BooleanFunction from_hex(unsigned arity, std::string_view hex) {
    BooleanFunction f(arity);
    const std::size_t bytes = byte_count(arity);
    if (hex.size() != 2 * bytes) throw std::invalid_argument("hex table has wrong length for arity");
    auto nibble = [](char c) -> unsigned {
      if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
      if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
      throw std::invalid_argument("hex table must be lowercase hex");
    };
    for (std::size_t b = 0; b < bytes; ++b) {
      const word_type byte = (nibble(hex[2 * b]) << 4) | nibble(hex[2 * b + 1]);
      f.words_[b / 8] |= byte << (8 * (b % 8));
    }
    const std::uint64_t before = f.popcount();
    f.clear_padding();
    if (f.popcount() != before) throw std::invalid_argument("hex table sets bits beyond 2^n");
    return f;
  }

  static BooleanFunction dictator(unsigned arity, unsigned i) {
    if (i < 1 || i > arity) throw std::out_of_range("coordinate out of range");
    return from_predicate(arity, [i](InputIndex j) { return coordinate_value(j, i) == 1; });
  }

  /// chi_S as a Boolean function.
  static BooleanFunction parity(unsigned arity, Mask s) {
    if (arity < 64 && (s >> arity) != 0) throw std::out_of_range("mask out of range");
    return from_predicate(arity, [s](InputIndex j) { return character(s, j) == 1; });
  }

  unsigned arity() const noexcept { return arity_; }
  InputIndex size() const noexcept { return InputIndex{1} << arity_; }
  std::span<const word_type> words() const noexcept { return words_; }

  bool positive_at(InputIndex j) const noexcept {
    return (words_[j / word_bits] >> (j % word_bits)) & 1U;
  }

  Sign evaluate(InputIndex j) const {
    if (j >= size()) throw std::out_of_range("input index out of range");
    return positive_at(j) ? Sign::plus : Sign::minus;
  }

  int value(InputIndex j) const noexcept { return positive_at(j) ? 1 : -1; }

  std::uint64_t popcount() const noexcept {
    std::uint64_t c = 0;
    for (word_type w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }

  /// Sum of f over all inputs, i.e. 2^n * E[f].
  std::int64_t sum() const noexcept {
    return 2 * static_cast<std::int64_t>(popcount()) - static_cast<std::int64_t>(size());
  }

  /// Returns a copy with output j negated. Intended for test harnesses.
  BooleanFunction with_flipped_output(InputIndex j) const {
    if (j >= size()) throw std::out_of_range("input index out of range");
    BooleanFunction g = *this;
    g.words_[j / word_bits] ^= word_type{1} << (j % word_bits);
    return g;
  }

  /// Lowercase hex of the packed table: bytes in increasing j order,
  /// bit 0 of each byte is the lowest j. Tables shorter than a byte are
  /// zero-padded to one byte.
  std::string to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    const std::size_t bytes = byte_count(arity_);
    std::string out;
    out.reserve(2 * bytes);
    for (std::size_t b = 0; b < bytes; ++b) {
      const auto byte = static_cast<unsigned>((words_[b / 8] >> (8 * (b % 8))) & 0xFFU);
      out.push_back(digits[byte >> 4]);
      out.push_back(digits[byte & 0xFU]);
    }
    return out;
  }

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  static unsigned check_arity(unsigned arity) {
    if (arity < 1 || arity > kMaxArity) throw std::invalid_argument("arity must be in [1, 24]");
    return arity;
  }
  static std::size_t word_count(unsigned arity) {
    return std::max<std::size_t>(1, (std::size_t{1} << arity) / word_bits);
  }
  static std::size_t byte_count(unsigned arity) {
    return std::max<std::size_t>(1, (std::size_t{1} << arity) / 8);
  }
  void clear_padding() noexcept {
    if (size() < word_bits) words_[0] &= (word_type{1} << size()) - 1;
  }

  unsigned arity_;
  std::vector<word_type> words_;
};

inline Sign evaluate(const BooleanFunction& f, InputIndex j) { return f.evaluate(j); }

/// g(x) = f(-x).
inline BooleanFunction negate_inputs(const BooleanFunction& f) {
  const unsigned n = f.arity();
  return BooleanFunction::from_predicate(n, [&](InputIndex j) { return f.positive_at(complement(j, n)); });
}

/// g(x) = f(x with the coordinates in `mask` negated).
inline BooleanFunction negate_coordinates(const BooleanFunction& f, Mask mask) {
  if (f.arity() < 64 && (mask >> f.arity()) != 0) throw std::out_of_range("mask out of range");
  return BooleanFunction::from_predicate(f.arity(), [&](InputIndex j) { return f.positive_at(j ^ mask); });
}

/// g(x) = f(x_{pi(1)}, ..., x_{pi(n)}). permute(permute(f, sigma), pi) == permute(f, pi o sigma).
inline BooleanFunction permute_coordinates(const BooleanFunction& f, const Permutation& pi) {
  const unsigned n = f.arity();
  check_permutation(pi, n);
  return BooleanFunction::from_predicate(n, [&](InputIndex j) {
    InputIndex src = 0;
    for (unsigned k = 0; k < n; ++k)
      src |= ((j >> (pi[k] - 1)) & 1U) << k;
    return f.positive_at(src);
  });
}

/// (pi o sigma)(k) = pi(sigma(k)).
inline Permutation compose(const Permutation& pi, const Permutation& sigma) {
  Permutation out(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) out[k] = pi[sigma[k] - 1];
  return out;
}

inline Permutation identity_permutation(unsigned n) {
  Permutation pi(n);
  std::iota(pi.begin(), pi.end(), 1U);
  return pi;
}

}  // namespace boolspec
