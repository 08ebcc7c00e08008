#pragma once

/**
 * @file conjecture.hpp
 * @brief Noise-stability comparison against a reference function, exact
 *        reproduction of the n = 5 counterexample, and a search over
 *        integer weight vectors for further counterexamples.
 *
 * Throughout, D(rho) = Stab_rho[reference] - Stab_rho[candidate]. The
 * "majority is least stable" statement asks for D <= 0 on [0,1]; since
 * D'(0) = W^1[reference] - W^1[candidate], a candidate with strictly
 * smaller level-1 weight makes D positive for all small rho > 0 whenever
 * both functions are unbiased.
 */

#include "boolean_function.hpp"
#include "fourier.hpp"
#include "ltf.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace boolspec {

enum class Verdict { refutes_at_small_rho, consistent, indeterminate };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::refutes_at_small_rho: return "refutes_at_small_rho";
    case Verdict::consistent: return "consistent";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "unknown";
}

struct Bracket {
  Rational lo;
  Rational hi;
  friend bool operator==(const Bracket&, const Bracket&) = default;
};

struct GridSample {
  Rational rho;
  Rational diff;
};

/// Bisection stops once hi - lo <= 2^-40.
inline const Rational kBracketWidth = dyadic(BigInt(1), 40);
inline constexpr unsigned kDefaultGridSize = 256;
/// Sampling resolution of crossover_scan, as a power of two.
inline constexpr unsigned kScanResolutionBits = 12;

struct ComparisonReport {
  std::vector<Rational> diff_poly;  // low degree first
  std::vector<GridSample> grid;
  std::optional<Bracket> crossover_bracket;
  Verdict verdict = Verdict::indeterminate;
  Rational slope_at_zero;  // D'(0)
  /// Largest sampled rho0 with D > 0 on every sampled point of (0, rho0].
  std::optional<Rational> positive_up_to;
};

namespace detail {

inline int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

inline std::vector<Rational> difference(const StabilityPolynomial& reference, const StabilityPolynomial& candidate) {
  std::vector<Rational> d(reference.weights.size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = reference.weights[k] - candidate.weights[k];
  return d;
}

// sign(D(lo)) != 0 and sign(D(hi)) != sign(D(lo)) on entry; preserved.
inline Bracket bisect(const std::vector<Rational>& poly, Rational lo, Rational hi) {
  const int lo_sign = sign_of(evaluate_polynomial(poly, lo));
  while (hi - lo > kBracketWidth) {
    Rational mid = (lo + hi) / 2;
    if (sign_of(evaluate_polynomial(poly, mid)) == lo_sign)
      lo = std::move(mid);
    else
      hi = std::move(mid);
  }
  return {std::move(lo), std::move(hi)};
}

// Brackets between consecutive nonzero-signed samples of opposite sign
// strictly inside (0,1); exact zeros at interior samples are skipped over.
inline std::vector<Bracket> brackets_from_samples(const std::vector<Rational>& poly,
                                                   const std::vector<GridSample>& samples, bool first_only) {
  std::vector<Bracket> out;
  const GridSample* last = nullptr;
  for (const auto& s : samples) {
    if (s.rho <= 0 || s.rho >= 1) continue;
    const int sg = sign_of(s.diff);
    if (sg == 0) continue;
    if (last && sign_of(last->diff) != sg) {
      out.push_back(bisect(poly, last->rho, s.rho));
      if (first_only) break;
    }
    last = &s;
  }
  return out;
}

}  // namespace detail

inline ComparisonReport compare_polynomials(const StabilityPolynomial& candidate, const StabilityPolynomial& reference,
                                            unsigned grid_size) {
  if (candidate.weights.size() != reference.weights.size()) throw std::invalid_argument("arity mismatch");
  if (grid_size < 2) throw std::invalid_argument("grid size must be at least 2");
  ComparisonReport r;
  r.diff_poly = detail::difference(reference, candidate);
  r.slope_at_zero = r.diff_poly.size() > 1 ? r.diff_poly[1] : Rational(0);
  r.grid.reserve(grid_size + 1);
  for (unsigned t = 0; t <= grid_size; ++t) {
    Rational rho(t, grid_size);
    Rational d = evaluate_polynomial(r.diff_poly, rho);
    r.grid.push_back({std::move(rho), std::move(d)});
  }
  auto brackets = detail::brackets_from_samples(r.diff_poly, r.grid, true);
  if (!brackets.empty()) r.crossover_bracket = std::move(brackets.front());

  bool any_positive = false;
  for (const auto& s : r.grid) any_positive = any_positive || s.diff > 0;
  if (r.slope_at_zero > 0)
    r.verdict = Verdict::refutes_at_small_rho;
  else
    r.verdict = any_positive ? Verdict::indeterminate : Verdict::consistent;

  // Walk the grid from 0; if the first interior sample is not positive,
  // try dyadic points 2^-k below it.
  for (const auto& s : r.grid) {
    if (s.rho <= 0) continue;
    if (s.diff > 0 && s.rho < 1)
      r.positive_up_to = s.rho;
    else
      break;
  }
  if (!r.positive_up_to && r.slope_at_zero > 0) {
    for (unsigned k = 1; k <= 64; ++k) {
      Rational rho = dyadic(BigInt(1), k);
      if (evaluate_polynomial(r.diff_poly, rho) > 0) {
        r.positive_up_to = rho;
        break;
      }
    }
  }
  return r;
}

inline ComparisonReport compare_stability(const BooleanFunction& f, const BooleanFunction& reference,
                                          unsigned grid_size = kDefaultGridSize) {
  if (f.arity() != reference.arity()) throw std::invalid_argument("arity mismatch");
  return compare_polynomials(stability_polynomial(wht(f)), stability_polynomial(wht(reference)), grid_size);
}

struct CrossoverScan {
  std::vector<Bracket> brackets;
  /// Sign constancy between brackets is only checked at this spacing.
  Rational resolution;
};

inline CrossoverScan crossover_scan(const BooleanFunction& f, const BooleanFunction& reference) {
  if (f.arity() != reference.arity()) throw std::invalid_argument("arity mismatch");
  const auto poly = detail::difference(stability_polynomial(wht(reference)), stability_polynomial(wht(f)));
  const unsigned steps = 1U << kScanResolutionBits;
  std::vector<GridSample> samples;
  samples.reserve(steps + 1);
  for (unsigned t = 0; t <= steps; ++t) {
    Rational rho = dyadic(BigInt(t), kScanResolutionBits);
    Rational d = evaluate_polynomial(poly, rho);
    samples.push_back({std::move(rho), std::move(d)});
  }
  return {detail::brackets_from_samples(poly, samples, false), dyadic(BigInt(1), kScanResolutionBits)};
}

// ---------------------------------------------------------------------------
// Exact reproduction of the n = 5 counterexample.

struct Identity {
  std::string name;
  std::string claimed;  // as stated, e.g. "44/64"; empty for predicates
  std::optional<Rational> expected;
  std::optional<Rational> computed;
  bool pass = false;
};

struct VerificationReport {
  std::vector<Identity> identities;
  std::vector<Rational> influences_f;
  std::vector<Rational> influences_majority;
  Rational stab_f_at_tenth;
  Rational stab_majority_at_tenth;
  bool pass = false;

  const Identity* first_failure() const {
    for (const auto& id : identities)
      if (!id.pass) return &id;
    return nullptr;
  }
};

/// `candidate` defaults to the counterexample; tests substitute a corrupted table.
inline VerificationReport verify_paper(std::optional<BooleanFunction> candidate = std::nullopt) {
  const BooleanFunction maj = majority(5);
  const BooleanFunction f = candidate ? *candidate : materialize(counterexample_spec());
  if (f.arity() != 5) throw std::invalid_argument("candidate must have arity 5");
  const FourierExpansion ef = wht(f), em = wht(maj);

  VerificationReport rep;
  for (unsigned i = 1; i <= 5; ++i) {
    rep.influences_f.push_back(influence(f, i));
    rep.influences_majority.push_back(influence(maj, i));
  }
  auto value = [&rep](std::string name, std::string claimed, Rational expected, Rational computed) {
    const bool ok = expected == computed;
    rep.identities.push_back({std::move(name), std::move(claimed), std::move(expected), std::move(computed), ok});
  };
  auto predicate = [&rep](std::string name, bool ok) { rep.identities.push_back({std::move(name), "", {}, {}, ok}); };

  value("Inf_1[Maj_5]", "3/8", Rational(3, 8), rep.influences_majority[0]);
  value("Inf_1[f]", "1/2", Rational(1, 2), rep.influences_f[0]);
  value("Inf_3[f]", "1/4", Rational(1, 4), rep.influences_f[2]);
  const Rational w1_maj = degree_weight(em, 1), w1_f = degree_weight(ef, 1);
  value("W^1[Maj_5]", "45/64", Rational(45, 64), w1_maj);
  value("W^1[f]", "44/64", Rational(44, 64), w1_f);

  predicate("Maj_5 is monotone", is_monotone(maj));
  predicate("f is monotone", is_monotone(f));
  bool coeff_matches = true;
  for (unsigned i = 1; i <= 5; ++i) {
    const Mask s = Mask{1} << (i - 1);
    coeff_matches = coeff_matches && coefficient(em, s) == rep.influences_majority[i - 1] &&
                    coefficient(ef, s) == rep.influences_f[i - 1];
  }
  predicate("f^(i) = Inf_i for Maj_5 and f, i = 1..5", coeff_matches);
  predicate("Maj_5 is unbiased", is_unbiased(maj));
  predicate("f is unbiased", is_unbiased(f));
  predicate("Inf_1[f] = Inf_2[f] and Inf_3[f] = Inf_4[f] = Inf_5[f]",
            rep.influences_f[0] == rep.influences_f[1] && rep.influences_f[2] == rep.influences_f[3] &&
                rep.influences_f[3] == rep.influences_f[4]);
  predicate("Inf_i[Maj_5] equal for all i",
            std::all_of(rep.influences_majority.begin(), rep.influences_majority.end(),
                        [&](const Rational& r) { return r == rep.influences_majority[0]; }));
  predicate("W^1[f] < W^1[Maj_5]", w1_f < w1_maj);

  const Rational tenth(1, 10);
  rep.stab_f_at_tenth = stability_at(stability_polynomial(ef), tenth);
  rep.stab_majority_at_tenth = stability_at(stability_polynomial(em), tenth);
  predicate("Stab_1/10[f] < Stab_1/10[Maj_5]", rep.stab_f_at_tenth < rep.stab_majority_at_tenth);

  rep.pass = rep.first_failure() == nullptr;
  return rep;
}

// ---------------------------------------------------------------------------
// Counterexample search over canonical weight vectors.

struct SearchFlags {
  bool unbiased = false;
  bool monotone = false;
  bool odd = false;
  bool tie_free = false;
  friend bool operator==(const SearchFlags&, const SearchFlags&) = default;
};

struct SearchResult {
  LtfSpec spec;
  Rational w1;
  Rational w1_majority;
  Rational margin;  // w1_majority - w1
  SearchFlags flags;
  std::string table_hex;
};

struct SearchOptions {
  unsigned n = 5;
  std::int64_t max_weight = 2;
  bool require_tie_free = true;
  unsigned workers = 1;
};

inline constexpr unsigned kMaxSearchArity = 9;

/// Nonincreasing vectors in [1, max_weight]^n with gcd 1, in lexicographic
/// order of the nonincreasing sequence read from the largest entry.
inline std::vector<std::vector<std::int64_t>> canonical_weight_vectors(unsigned n, std::int64_t max_weight) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> w(n, 1);
  auto recurse = [&](auto&& self, unsigned pos, std::int64_t cap) -> void {
    if (pos == n) {
      std::int64_t g = 0;
      for (auto v : w) g = std::gcd(g, v);
      if (g == 1) out.push_back(w);
      return;
    }
    for (std::int64_t v = 1; v <= cap; ++v) {
      w[pos] = v;
      self(self, pos + 1, v);
    }
  };
  recurse(recurse, 0, max_weight);
  return out;
}

/// Absolute values sorted nonincreasing, divided by their gcd.
inline std::vector<std::int64_t> canonical_form(std::vector<std::int64_t> weights) {
  std::int64_t g = 0;
  for (auto& v : weights) {
    v = v < 0 ? -v : v;
    g = std::gcd(g, v);
  }
  if (g > 1)
    for (auto& v : weights) v /= g;
  std::sort(weights.begin(), weights.end(), std::greater<>());
  return weights;
}

namespace detail {

struct Candidate {
  std::size_t order;  // position in the canonical enumeration
  SearchResult result;
};

inline std::optional<SearchResult> evaluate_spec(const LtfSpec& spec, const Rational& w1_majority) {
  BooleanFunction f(spec.arity());
  bool tie_free = true;
  try {
    f = materialize(LtfSpec{spec.weights, spec.threshold, TiePolicy::reject});
  } catch (const TieEncountered&) {
    if (spec.tie_policy == TiePolicy::reject) return std::nullopt;
    tie_free = false;
    f = materialize(spec);
  }
  if (!is_unbiased(f)) return std::nullopt;
  const Rational w1 = degree_weight(wht(f), 1);
  Rational margin = w1_majority - w1;
  if (margin <= 0) return std::nullopt;
  return SearchResult{spec, w1, w1_majority, std::move(margin), {true, is_monotone(f), is_odd(f), tie_free}, f.to_hex()};
}

}  // namespace detail

/// Every unbiased function from a canonical spec with W^1 strictly below
/// W^1[Maj_n], one entry per distinct truth table, sorted by margin
/// descending then by weights. Output does not depend on opts.workers.
inline std::vector<SearchResult> search_counterexamples(const SearchOptions& opts) {
  if (opts.n % 2 == 0 || opts.n > kMaxSearchArity) throw std::invalid_argument("search requires odd n <= 9");
  if (opts.max_weight < 1) throw std::invalid_argument("max weight must be at least 1");
  const auto vectors = canonical_weight_vectors(opts.n, opts.max_weight);
  const Rational w1_majority = degree_weight(wht(majority(opts.n)), 1);
  const TiePolicy policy = opts.require_tie_free ? TiePolicy::reject : TiePolicy::map_to_minus_one;
  const unsigned workers = std::max(1U, opts.workers);

  std::vector<std::vector<detail::Candidate>> shards(workers);
  auto work = [&](unsigned shard) {
    for (std::size_t k = shard; k < vectors.size(); k += workers)
      if (auto r = detail::evaluate_spec(LtfSpec{vectors[k], 0, policy}, w1_majority))
        shards[shard].push_back({k, std::move(*r)});
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned s = 0; s < workers; ++s) threads.emplace_back(work, s);
  }

  // Merge: keep the earliest-enumerated spec for each distinct table.
  std::map<std::string, detail::Candidate> by_table;
  for (auto& shard : shards)
    for (auto& c : shard) {
      auto [it, inserted] = by_table.try_emplace(c.result.table_hex, c);
      if (!inserted && c.order < it->second.order) it->second = std::move(c);
    }
  std::vector<SearchResult> out;
  out.reserve(by_table.size());
  for (auto& [hex, c] : by_table) out.push_back(std::move(c.result));
  std::sort(out.begin(), out.end(), [](const SearchResult& a, const SearchResult& b) {
    if (a.margin != b.margin) return a.margin > b.margin;
    return a.spec.weights < b.spec.weights;
  });
  return out;
}

}  // namespace boolspec
