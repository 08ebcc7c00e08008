#pragma once

/**
 * @file ltf.hpp
 * @brief Integer-weight linear threshold functions and structural predicates.
 *
 * An LtfSpec (w, theta) defines f(x) = sgn(sum_i w_i x_i - theta). A zero
 * margin has no sign; under TiePolicy::reject materialization fails with
 * TieEncountered, under TiePolicy::map_to_minus_one the output is -1.
 */

#include "boolean_function.hpp"

#include <charconv>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boolspec {

enum class TiePolicy { reject, map_to_minus_one };

struct LtfSpec {
  std::vector<std::int64_t> weights;
  std::int64_t threshold = 0;
  TiePolicy tie_policy = TiePolicy::reject;

  unsigned arity() const noexcept { return static_cast<unsigned>(weights.size()); }
  friend bool operator==(const LtfSpec&, const LtfSpec&) = default;
};

class TieEncountered : public std::runtime_error {
 public:
  TieEncountered(InputIndex witness, unsigned arity)
      : std::runtime_error("weighted sum equals threshold at x = " + render_input(witness, arity)),
        witness_(witness),
        arity_(arity) {}

  InputIndex witness() const noexcept { return witness_; }
  std::vector<int> witness_point() const { return decode_input(witness_, arity_); }

  static std::string render_input(InputIndex j, unsigned arity) {
    std::string s = "(";
    for (unsigned i = 1; i <= arity; ++i) {
      if (i > 1) s += ",";
      s += coordinate_value(j, i) > 0 ? "+1" : "-1";
    }
    return s + ")";
  }

 private:
  InputIndex witness_;
  unsigned arity_;
};

/// Text form: "w1,w2,...,wn" with an optional "@theta" suffix.
inline LtfSpec parse_spec(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw std::invalid_argument("malformed integer '" + std::string(s) + "' in spec");
    return v;
  };
  LtfSpec spec;
  std::string_view body = text;
  if (auto at = text.find('@'); at != std::string_view::npos) {
    spec.threshold = parse_int(text.substr(at + 1));
    body = text.substr(0, at);
  }
  if (body.empty()) throw std::invalid_argument("spec has no weights");
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    spec.weights.push_back(parse_int(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (spec.weights.size() > kMaxArity) throw std::invalid_argument("spec arity exceeds 24");
  return spec;
}

inline std::string format_spec(const LtfSpec& spec) {
  std::string s;
  for (std::size_t i = 0; i < spec.weights.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(spec.weights[i]);
  }
  if (spec.threshold != 0) s += "@" + std::to_string(spec.threshold);
  return s;
}

/// table[j] = +1 iff sum_i w_i x_i(j) > theta.
inline BooleanFunction materialize(const LtfSpec& spec) {
  const unsigned n = spec.arity();
  if (n < 1 || n > kMaxArity) throw std::invalid_argument("spec arity must be in [1, 24]");
  // Gray-code walk keeps the weighted sum incremental.
  BooleanFunction f = BooleanFunction(n);
  std::vector<std::uint64_t> words(f.words().begin(), f.words().end());
  std::int64_t total = 0;
  for (std::int64_t w : spec.weights) total -= w;
  InputIndex j = 0;
  for (InputIndex step = 0; step < f.size(); ++step) {
    if (step) {
      const unsigned bit = static_cast<unsigned>(std::countr_zero(step));
      j ^= InputIndex{1} << bit;
      total += ((j >> bit) & 1U) ? 2 * spec.weights[bit] : -2 * spec.weights[bit];
    }
    const std::int64_t margin = total - spec.threshold;
    if (margin == 0 && spec.tie_policy == TiePolicy::reject) throw TieEncountered(j, n);
    if (margin > 0) words[j / 64] |= std::uint64_t{1} << (j % 64);
  }
  return BooleanFunction::from_words(n, std::move(words));
}

inline BooleanFunction majority(unsigned n) {
  if (n % 2 == 0) throw std::invalid_argument("majority requires odd n");
  if (n > kMaxArity) throw std::invalid_argument("arity must be in [1, 24]");
  return materialize(LtfSpec{std::vector<std::int64_t>(n, 1)});
}

/// The n = 5 counterexample sgn(2x1 + 2x2 + x3 + x4 + x5).
inline LtfSpec counterexample_spec() { return LtfSpec{{2, 2, 1, 1, 1}}; }

inline bool is_unbiased(const BooleanFunction& f) { return 2 * f.popcount() == f.size(); }

/// f(-x) = -f(x) for all x.
inline bool is_odd(const BooleanFunction& f) {
  const unsigned n = f.arity();
  for (InputIndex j = 0; j < f.size(); ++j)
    if (f.positive_at(j) == f.positive_at(complement(j, n))) return false;
  return true;
}

/// Scans every hypercube edge (x with x_i = -1, x with x_i = +1).
inline bool is_monotone(const BooleanFunction& f) {
  for (unsigned i = 1; i <= f.arity(); ++i) {
    const InputIndex bit = InputIndex{1} << (i - 1);
    for (InputIndex j = 0; j < f.size(); ++j)
      if (!(j & bit) && f.positive_at(j) && !f.positive_at(j | bit)) return false;
  }
  return true;
}

/// Moves weight w_k to coordinate pi(k), so that materialize(permute_spec(s, pi))
/// equals permute_coordinates(materialize(s), pi).
inline LtfSpec permute_spec(const LtfSpec& spec, const Permutation& pi) {
  check_permutation(pi, spec.arity());
  LtfSpec out = spec;
  for (std::size_t k = 0; k < pi.size(); ++k) out.weights[pi[k] - 1] = spec.weights[k];
  return out;
}

}  // namespace boolspec
