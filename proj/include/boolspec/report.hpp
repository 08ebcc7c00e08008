#pragma once

// JSON report documents emitted by the boolspec CLI. Field layout is
// documented in docs/report-schema.md.

#include "conjecture.hpp"
#include "fourier.hpp"
#include "ltf.hpp"
#include "rational.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace boolspec::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

inline Json rational(const Rational& r) { return Json{{"exact", to_fraction_string(r)}, {"approx", to_double(r)}}; }

inline Json rationals(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(rational(v));
  return arr;
}

inline Json document(std::string command, Json inputs, Json results) {
  return Json{{"command", std::move(command)}, {"version", kVersion}, {"inputs", std::move(inputs)},
              {"results", std::move(results)}};
}

inline std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

/// Decimal with 17 significant digits; exact integers print without a point.
inline std::string decimal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline const char* tie_policy_name(TiePolicy p) { return p == TiePolicy::reject ? "reject" : "map_to_minus_one"; }

inline Json analyze(const LtfSpec& spec, const std::vector<Rational>& rhos = {}) {
  BooleanFunction f(spec.arity());
  bool tie_broken = false;
  try {
    f = materialize(LtfSpec{spec.weights, spec.threshold, TiePolicy::reject});
  } catch (const TieEncountered&) {
    if (spec.tie_policy == TiePolicy::reject) throw;
    tie_broken = true;
    f = materialize(spec);
  }
  const FourierExpansion e = wht(f);
  const StabilityPolynomial p = stability_polynomial(e);
  std::vector<Rational> infl;
  for (unsigned i = 1; i <= f.arity(); ++i) infl.push_back(influence(f, i));

  Json stab = Json::array();
  for (const auto& rho : rhos)
    stab.push_back(Json{{"rho", rational(rho)},
                        {"value", rational(stability_at(p, rho))},
                        {"rho_in_unit_interval", rho >= 0 && rho <= 1}});

  Json results{{"arity", f.arity()},
               {"table_hex", f.to_hex()},
               {"tie_broken", tie_broken},
               {"bias", rational(dyadic(BigInt(f.sum()), f.arity()))},
               {"unbiased", is_unbiased(f)},
               {"odd", is_odd(f)},
               {"monotone", is_monotone(f)},
               {"influences", rationals(infl)},
               {"degree_weights", rationals(p.weights)},
               {"stability_polynomial", Json{{"form", "sum_k c_k rho^k"}, {"coefficients", rationals(p.weights)}}},
               {"stability_values", std::move(stab)}};
  Json inputs{{"spec", format_spec(spec)}, {"tie_policy", tie_policy_name(spec.tie_policy)}};
  return document("analyze", std::move(inputs), std::move(results));
}

inline Json verify(const VerificationReport& rep) {
  Json ids = Json::array();
  for (const auto& id : rep.identities) {
    Json j{{"identity", id.name}};
    if (id.expected) {
      j["claimed"] = id.claimed;
      j["expected"] = rational(*id.expected);
      j["computed"] = rational(*id.computed);
    }
    j["pass"] = id.pass;
    ids.push_back(std::move(j));
  }
  Json results{{"identities", std::move(ids)},
               {"influences_f", rationals(rep.influences_f)},
               {"influences_majority", rationals(rep.influences_majority)},
               {"stab_f_at_1_10", rational(rep.stab_f_at_tenth)},
               {"stab_majority_at_1_10", rational(rep.stab_majority_at_tenth)},
               {"comparison", "W^1[f] = 44/64 < 45/64 = W^1[Maj_5]"},
               {"first_failure", rep.first_failure() ? Json(rep.first_failure()->name) : Json(nullptr)},
               {"pass", rep.pass}};
  Json inputs{{"f", format_spec(counterexample_spec())}, {"reference", "1,1,1,1,1"}};
  return document("verify-paper", std::move(inputs), std::move(results));
}

inline Json bracket(const std::optional<Bracket>& b) {
  if (!b) return nullptr;
  return Json{{"lo", rational(b->lo)}, {"hi", rational(b->hi)}};
}

inline Json compare(const LtfSpec& f, const LtfSpec& g, unsigned grid, const std::string& out_path,
                    const ComparisonReport& rep, const CrossoverScan& scan) {
  Json brackets = Json::array();
  for (const auto& b : scan.brackets) brackets.push_back(bracket(b));
  Json results{{"diff_poly", rationals(rep.diff_poly)},
               {"diff_definition", "Stab_rho[g] - Stab_rho[f]"},
               {"slope_at_zero", rational(rep.slope_at_zero)},
               {"verdict", to_string(rep.verdict)},
               {"positive_up_to", rep.positive_up_to ? rational(*rep.positive_up_to) : Json(nullptr)},
               {"crossover_bracket", bracket(rep.crossover_bracket)},
               {"crossover_scan", Json{{"brackets", std::move(brackets)},
                                       {"resolution", rational(scan.resolution)},
                                       {"localization_only", true}}},
               {"csv", out_path},
               {"csv_values_approximate", true}};
  Json inputs{{"f", format_spec(f)}, {"g", format_spec(g)}, {"grid", grid}, {"out", out_path}};
  return document("compare", std::move(inputs), std::move(results));
}

/// One row per grid point: rho, Stab[f], Stab[g], Stab[g] - Stab[f].
inline std::string compare_csv(const StabilityPolynomial& pf, const StabilityPolynomial& pg, unsigned grid) {
  std::string csv = "rho,stab_f,stab_g,diff\n";
  for (unsigned t = 0; t <= grid; ++t) {
    const Rational rho(t, grid);
    const Rational sf = stability_at(pf, rho), sg = stability_at(pg, rho);
    csv += decimal(to_double(rho)) + "," + decimal(to_double(sf)) + "," + decimal(to_double(sg)) + "," +
           decimal(to_double(sg - sf)) + "\n";
  }
  return csv;
}

/// The results file of `search`; independent of the worker count.
inline Json search_results(const SearchOptions& opts, const std::vector<SearchResult>& results) {
  Json list = Json::array();
  for (const auto& r : results)
    list.push_back(Json{{"spec", format_spec(r.spec)},
                        {"weights", r.spec.weights},
                        {"table_hex", r.table_hex},
                        {"w1", rational(r.w1)},
                        {"w1_majority", rational(r.w1_majority)},
                        {"margin", rational(r.margin)},
                        {"flags", Json{{"unbiased", r.flags.unbiased},
                                       {"monotone", r.flags.monotone},
                                       {"odd", r.flags.odd},
                                       {"tie_free", r.flags.tie_free}}}});
  return Json{{"n", opts.n},
              {"max_weight", opts.max_weight},
              {"require_tie_free", opts.require_tie_free},
              {"count", results.size()},
              {"counterexamples", std::move(list)}};
}

inline Json search(const SearchOptions& opts, const std::string& out_path, const Json& results_file) {
  Json inputs{{"n", opts.n},
              {"max_weight", opts.max_weight},
              {"require_tie_free", opts.require_tie_free},
              {"parallel", opts.workers},
              {"out", out_path}};
  Json results{{"count", results_file["count"]}, {"results_file", out_path},
               {"counterexamples", results_file["counterexamples"]}};
  return document("search", std::move(inputs), std::move(results));
}

}  // namespace boolspec::report
