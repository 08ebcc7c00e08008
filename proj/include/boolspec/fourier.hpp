#pragma once

/**
 * @file fourier.hpp
 * @brief Walsh-Hadamard transform and the spectral quantities built on it.
 *
 * Coefficients are kept as integers scaled by 2^n, so the whole transform
 * runs in exact integer arithmetic and division happens only when a value
 * is reported as a Rational.
 *
 * Noise stability uses Stab_rho[f] = sum_k W^k[f] rho^k. stability_oracle
 * computes the same quantity from the correlated-pair definition without
 * touching the spectrum.
 */

#include "boolean_function.hpp"
#include "rational.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace boolspec {

/// scaled[S] = 2^n * f^(S) = sum_x f(x) chi_S(x).
class FourierExpansion {
 public:
  FourierExpansion(unsigned arity, std::vector<std::int64_t> scaled) : arity_(arity), scaled_(std::move(scaled)) {
    if (arity < 1 || arity > kMaxArity) throw std::invalid_argument("arity must be in [1, 24]");
    if (scaled_.size() != (std::size_t{1} << arity)) throw std::invalid_argument("coefficient count must be 2^n");
  }

  unsigned arity() const noexcept { return arity_; }
  Mask size() const noexcept { return Mask{1} << arity_; }
  std::span<const std::int64_t> scaled() const noexcept { return scaled_; }
  std::int64_t scaled_at(Mask s) const { return scaled_.at(s); }

  friend bool operator==(const FourierExpansion&, const FourierExpansion&) = default;

 private:
  unsigned arity_;
  std::vector<std::int64_t> scaled_;
};

namespace detail {

// Sum of squares with an int64 fast path; falls back to BigInt on overflow.
class SquareAccumulator {
 public:
  void add_square(std::int64_t v) {
    std::int64_t sq = 0, sum = 0;
    if (!overflowed_ && !__builtin_mul_overflow(v, v, &sq) && !__builtin_add_overflow(fast_, sq, &sum)) {
      fast_ = sum;
      return;
    }
    if (!overflowed_) {
      big_ = fast_;
      overflowed_ = true;
    }
    big_ += BigInt(v) * BigInt(v);
  }
  BigInt total() const { return overflowed_ ? big_ : BigInt(fast_); }

 private:
  std::int64_t fast_ = 0;
  bool overflowed_ = false;
  BigInt big_;
};

// In-place butterfly; forward maps (lo, hi) -> (lo + hi, hi - lo).
inline void butterfly(std::vector<std::int64_t>& a, bool forward) {
  const std::size_t size = a.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      std::int64_t* lo = a.data() + block;
      std::int64_t* hi = lo + half;
      for (std::size_t k = 0; k < half; ++k) {
        const std::int64_t u = lo[k], v = hi[k];
        if (forward) {
          lo[k] = u + v;
          hi[k] = v - u;
        } else {
          lo[k] = u - v;
          hi[k] = u + v;
        }
      }
    }
  }
}

inline void check_coordinate(unsigned i, unsigned n) {
  if (i < 1 || i > n) throw std::out_of_range("coordinate out of range");
}

}  // namespace detail

/// O(n 2^n) fast Walsh-Hadamard transform.
inline FourierExpansion wht(const BooleanFunction& f) {
  std::vector<std::int64_t> a(f.size());
  for (InputIndex j = 0; j < f.size(); ++j) a[j] = f.value(j);
  detail::butterfly(a, true);
  return FourierExpansion(f.arity(), std::move(a));
}

/// Inverse transform; throws if the expansion is not that of a +-1 function.
inline BooleanFunction inverse_wht(const FourierExpansion& e) {
  std::vector<std::int64_t> a(e.scaled().begin(), e.scaled().end());
  detail::butterfly(a, false);
  // Forward then inverse multiplies by 2^n.
  const auto scale = static_cast<std::int64_t>(e.size());
  for (std::int64_t v : a)
    if (v != scale && v != -scale) throw std::domain_error("expansion is not a +-1 valued function");
  return BooleanFunction::from_predicate(e.arity(), [&](InputIndex j) { return a[j] > 0; });
}

inline Rational coefficient(const FourierExpansion& e, Mask s) {
  if (s >= e.size()) throw std::out_of_range("mask out of range");
  return dyadic(e.scaled()[s], e.arity());
}

/// Pr_x[f(x) != f(x with coordinate i flipped)], by popcount over the
/// table XORed with its own shift.
inline Rational influence(const BooleanFunction& f, unsigned i) {
  detail::check_coordinate(i, f.arity());
  const unsigned bit = i - 1;
  const auto words = f.words();
  std::uint64_t pivotal_pairs = 0;
  if (bit < 6) {
    static constexpr std::uint64_t low_half[6] = {
        0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
        0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
    for (std::uint64_t w : words)
      pivotal_pairs += static_cast<std::uint64_t>(std::popcount((w ^ (w >> (1U << bit))) & low_half[bit]));
  } else {
    const std::size_t stride = std::size_t{1} << (bit - 6);
    for (std::size_t k = 0; k < words.size(); ++k)
      if ((k & stride) == 0) pivotal_pairs += static_cast<std::uint64_t>(std::popcount(words[k] ^ words[k | stride]));
  }
  return dyadic(BigInt(2 * pivotal_pairs), f.arity());
}

/// sum_{S contains i} f^(S)^2.
inline Rational influence_via_fourier(const FourierExpansion& e, unsigned i) {
  detail::check_coordinate(i, e.arity());
  const Mask bit = Mask{1} << (i - 1);
  detail::SquareAccumulator acc;
  for (Mask s = 0; s < e.size(); ++s)
    if (s & bit) acc.add_square(e.scaled()[s]);
  return dyadic(acc.total(), 2 * e.arity());
}

/// W^k = sum_{|S| = k} f^(S)^2.
inline Rational degree_weight(const FourierExpansion& e, unsigned k) {
  if (k > e.arity()) throw std::out_of_range("degree out of range");
  detail::SquareAccumulator acc;
  for (Mask s = 0; s < e.size(); ++s)
    if (static_cast<unsigned>(std::popcount(s)) == k) acc.add_square(e.scaled()[s]);
  return dyadic(acc.total(), 2 * e.arity());
}

/// Stab_rho = sum_k weights[k] rho^k.
struct StabilityPolynomial {
  std::vector<Rational> weights;

  unsigned arity() const noexcept { return static_cast<unsigned>(weights.size()) - 1; }
  friend bool operator==(const StabilityPolynomial&, const StabilityPolynomial&) = default;
};

inline StabilityPolynomial stability_polynomial(const FourierExpansion& e) {
  std::vector<detail::SquareAccumulator> acc(e.arity() + 1);
  for (Mask s = 0; s < e.size(); ++s) acc[static_cast<std::size_t>(std::popcount(s))].add_square(e.scaled()[s]);
  StabilityPolynomial p;
  p.weights.reserve(acc.size());
  for (const auto& a : acc) p.weights.push_back(dyadic(a.total(), 2 * e.arity()));
  return p;
}

/// Exact Horner evaluation of any coefficient vector (low degree first).
inline Rational evaluate_polynomial(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Exact value; rho outside [0,1] is evaluated as well (callers flag it).
inline Rational stability_at(const StabilityPolynomial& p, const Rational& rho) {
  return evaluate_polynomial(p.weights, rho);
}

/// Floating evaluation, for plotted curves only.
inline double stability_at_approx(const StabilityPolynomial& p, double rho) {
  double acc = 0.0;
  for (auto it = p.weights.rbegin(); it != p.weights.rend(); ++it) acc = acc * rho + to_double(*it);
  return acc;
}

inline Rational power(const Rational& base, unsigned exponent) {
  Rational result = 1, b = base;
  for (; exponent; exponent >>= 1) {
    if (exponent & 1U) result *= b;
    b *= b;
  }
  return result;
}

inline constexpr unsigned kMaxOracleArity = 10;

/// E[f(x) g(y)] over rho-correlated (x, y), by the O(4^n) double sum.
/// Pairs are grouped by Hamming distance d, each contributing
/// ((1+rho)/2)^(n-d) ((1-rho)/2)^d / 2^n.
inline Rational stability_oracle(const BooleanFunction& f, const BooleanFunction& g, const Rational& rho) {
  if (f.arity() != g.arity()) throw std::invalid_argument("arity mismatch");
  const unsigned n = f.arity();
  if (n > kMaxOracleArity) throw std::invalid_argument("oracle arity cap exceeded");
  std::vector<std::int64_t> by_distance(n + 1, 0);
  for (InputIndex x = 0; x < f.size(); ++x) {
    const int fx = f.value(x);
    for (InputIndex y = 0; y < g.size(); ++y) by_distance[static_cast<std::size_t>(std::popcount(x ^ y))] += fx * g.value(y);
  }
  const Rational agree = (1 + rho) / 2, disagree = (1 - rho) / 2;
  Rational total = 0;
  for (unsigned d = 0; d <= n; ++d) {
    if (by_distance[d] == 0) continue;
    total += Rational(by_distance[d]) * power(agree, n - d) * power(disagree, d);
  }
  return total / Rational(BigInt(1) << n);
}

}  // namespace boolspec
