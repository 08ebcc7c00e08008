#pragma once

// Test-only reference computations. Nothing here calls the butterfly or
// the popcount influence kernel.

#include <boolspec/boolean_function.hpp>
#include <boolspec/ltf.hpp>
#include <boolspec/rational.hpp>

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace boolspec::oracle {

/// sum_x f(x) chi_S(x), evaluating chi_S as a product of coordinates.
inline std::int64_t naive_scaled_coefficient(const BooleanFunction& f, Mask s) {
  std::int64_t acc = 0;
  for (InputIndex j = 0; j < f.size(); ++j) {
    int chi = 1;
    for (unsigned i = 1; i <= f.arity(); ++i)
      if ((s >> (i - 1)) & 1U) chi *= coordinate_value(j, i);
    acc += f.value(j) * chi;
  }
  return acc;
}

inline std::vector<Rational> naive_degree_weights(const BooleanFunction& f) {
  std::vector<BigInt> sums(f.arity() + 1);
  for (Mask s = 0; s < f.size(); ++s) {
    const std::int64_t c = naive_scaled_coefficient(f, s);
    sums[static_cast<std::size_t>(std::popcount(s))] += BigInt(c) * c;
  }
  std::vector<Rational> w;
  for (auto& v : sums) w.push_back(Rational(v, BigInt(1) << (2 * f.arity())));
  return w;
}

/// Pr[f(x) != f(x^i)] by evaluating f at both endpoints of every edge.
inline Rational naive_influence(const BooleanFunction& f, unsigned i) {
  std::int64_t count = 0;
  for (InputIndex j = 0; j < f.size(); ++j)
    if (f.evaluate(j) != f.evaluate(j ^ (InputIndex{1} << (i - 1)))) ++count;
  return Rational(count, BigInt(1) << f.arity());
}

/// sgn(sum w_i x_i - theta) evaluated pointwise; throws on a tie.
inline BooleanFunction naive_ltf(const std::vector<std::int64_t>& w, std::int64_t theta = 0) {
  const auto n = static_cast<unsigned>(w.size());
  return BooleanFunction::from_predicate(n, [&](InputIndex j) {
    std::int64_t s = -theta;
    for (unsigned i = 1; i <= n; ++i) s += w[i - 1] * coordinate_value(j, i);
    if (s == 0) throw std::logic_error("tie in naive_ltf");
    return s > 0;
  });
}

inline BooleanFunction random_function(unsigned n, std::mt19937_64& rng) {
  return BooleanFunction::from_predicate(n, [&](InputIndex) { return (rng() & 1U) != 0; });
}

/// Random odd function: choose f on inputs with x_n = -1, extend by f(-x) = -f(x).
inline BooleanFunction random_odd_function(unsigned n, std::mt19937_64& rng) {
  std::vector<int> signs(std::size_t{1} << n, 0);
  for (InputIndex j = 0; j < signs.size(); ++j) {
    if (signs[j] != 0) continue;
    signs[j] = (rng() & 1U) ? 1 : -1;
    signs[complement(j, n)] = -signs[j];
  }
  return BooleanFunction::from_signs(signs);
}

/// Positive integer weights with odd total, so sum w_i x_i is never 0.
inline LtfSpec random_tie_free_positive_spec(unsigned n, std::mt19937_64& rng, std::int64_t max_weight = 6) {
  if (n % 2 == 0) throw std::invalid_argument("odd arity required");
  std::uniform_int_distribution<std::int64_t> dist(1, max_weight);
  while (true) {
    LtfSpec spec;
    std::int64_t total = 0;
    for (unsigned i = 0; i < n; ++i) {
      spec.weights.push_back(dist(rng));
      total += spec.weights.back();
    }
    if (total % 2 != 0) return spec;
  }
}

/// Monotone function: an upward-closed set generated by random minterms.
inline BooleanFunction random_monotone_function(unsigned n, std::mt19937_64& rng) {
  std::vector<InputIndex> generators;
  const unsigned count = 1 + static_cast<unsigned>(rng() % 4);
  for (unsigned k = 0; k < count; ++k) generators.push_back(rng() & ((InputIndex{1} << n) - 1));
  return BooleanFunction::from_predicate(n, [&](InputIndex j) {
    for (InputIndex g : generators)
      if ((j & g) == g) return true;
    return false;
  });
}

inline Permutation random_permutation(unsigned n, std::mt19937_64& rng) {
  Permutation pi = identity_permutation(n);
  std::shuffle(pi.begin(), pi.end(), rng);
  return pi;
}

}  // namespace boolspec::oracle

#include <boolspec/conjecture.hpp>

namespace boolspec::oracle {

/// Every vector in {-B..-1, 1..B}^n, with no canonicalization. Returns the
/// counterexamples (unbiased, tie-free, W^1 below majority) whose canonical
/// form does not materialize to a table present in `canonical`.
inline std::vector<std::vector<std::int64_t>> missed_by_canonical_search(
    unsigned n, std::int64_t max_weight, const std::vector<SearchResult>& canonical, std::size_t* examined = nullptr) {
  std::set<std::string> found;
  for (const auto& r : canonical) found.insert(r.table_hex);
  const Rational w1_majority = naive_degree_weights(majority(n))[1];
  std::vector<std::int64_t> values;
  for (std::int64_t v = -max_weight; v <= max_weight; ++v)
    if (v != 0) values.push_back(v);

  std::vector<std::vector<std::int64_t>> missed;
  std::vector<std::size_t> digits(n, 0);
  std::size_t count = 0;
  while (true) {
    std::vector<std::int64_t> w(n);
    for (unsigned i = 0; i < n; ++i) w[i] = values[digits[i]];
    ++count;
    bool tie = false;
    BooleanFunction f(n);
    try {
      f = naive_ltf(w);
    } catch (const std::logic_error&) {
      tie = true;
    }
    if (!tie && is_unbiased(f) && naive_degree_weights(f)[1] < w1_majority) {
      const auto canon = naive_ltf(canonical_form(w));
      if (!found.count(canon.to_hex())) missed.push_back(w);
    }
    unsigned pos = 0;
    while (pos < n && ++digits[pos] == values.size()) digits[pos++] = 0;
    if (pos == n) break;
  }
  if (examined) *examined = count;
  return missed;
}

}  // namespace boolspec::oracle
