// boolspec: spectral analysis of Boolean functions from the command line.
//
// Exit codes
//   0  success (verify-paper: every identity holds)
//   1  verify-paper found a mismatch
//   2  usage, parse, or bounds error
//   3  a weighted sum hit the threshold under the reject tie policy
//   4  I/O failure

#include <boolspec/conjecture.hpp>
#include <boolspec/report.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kTie = 3, kIo = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

boolspec::TiePolicy parse_tie_policy(const std::string& s) {
  if (s == "reject") return boolspec::TiePolicy::reject;
  if (s == "minus-one" || s == "map_to_minus_one") return boolspec::TiePolicy::map_to_minus_one;
  throw std::invalid_argument("unknown tie policy '" + s + "'");
}

void print_tie(const boolspec::TieEncountered& tie, const std::string& spec) {
  using boolspec::report::Json;
  Json doc = boolspec::report::document(
      "error", Json{{"spec", spec}},
      Json{{"error", "tie_encountered"},
           {"message", tie.what()},
           {"witness", tie.witness_point()},
           {"witness_index", tie.witness()}});
  std::cout << boolspec::report::render(doc);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace boolspec;

  CLI::App app{"Fourier analysis of Boolean functions and the majority-is-least-stable counterexample"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(report::kVersion));

  std::string spec_text, tie_policy = "reject";
  std::string tie_context;  // spec being materialized, for tie reports
  std::vector<std::string> rho_texts;
  auto* analyze = app.add_subcommand("analyze", "Full spectral report for an LTF spec such as 2,2,1,1,1@0");
  analyze->add_option("spec", spec_text, "Comma-separated integer weights with optional @threshold")->required();
  analyze->add_option("--tie-policy", tie_policy, "reject | minus-one");
  analyze->add_option("--rho", rho_texts, "Evaluate Stab_rho exactly at these points (p/q or decimal)");

  std::optional<std::uint64_t> corrupt_bit;
  auto* verify = app.add_subcommand("verify-paper", "Reproduce the n = 5 counterexample exactly");
  verify->add_option("--corrupt-bit", corrupt_bit, "Flip one output of f before verifying (test hook)")
      ->group("");

  std::string spec_g, out_path;
  unsigned grid = kDefaultGridSize;
  auto* compare = app.add_subcommand("compare", "Compare noise stability of f against reference g");
  compare->add_option("f", spec_text, "Candidate spec")->required();
  compare->add_option("g", spec_g, "Reference spec")->required();
  compare->add_option("--grid", grid, "Number of grid intervals on [0,1]")->check(CLI::Range(2U, 1U << 20));
  compare->add_option("--out", out_path, "CSV output path")->required();

  SearchOptions search_opts;
  bool allow_ties = false;
  auto* search = app.add_subcommand("search", "Search canonical LTF weight vectors for counterexamples");
  search->add_option("--n", search_opts.n, "Odd arity <= 9")->required();
  search->add_option("--max-weight", search_opts.max_weight, "Largest weight")->required();
  search->add_option("--parallel", search_opts.workers, "Worker threads")->check(CLI::Range(1U, 256U));
  search->add_option("--out", out_path, "Results file path")->required();
  search->add_flag("--allow-ties", allow_ties, "Break ties to -1 instead of skipping the spec");

  auto* table = app.add_subcommand("table", "Print the truth-table hex of an LTF spec");
  table->add_option("spec", spec_text, "Comma-separated integer weights with optional @threshold")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) {
      LtfSpec spec = parse_spec(spec_text);
      spec.tie_policy = parse_tie_policy(tie_policy);
      std::vector<Rational> rhos;
      for (const auto& t : rho_texts) rhos.push_back(parse_rational(t));
      std::cout << report::render(report::analyze(spec, rhos));
      return kOk;
    }
    if (*verify) {
      std::optional<BooleanFunction> candidate;
      if (corrupt_bit) candidate = materialize(counterexample_spec()).with_flipped_output(*corrupt_bit);
      const VerificationReport rep = verify_paper(candidate);
      std::cout << report::render(report::verify(rep));
      if (!rep.pass) std::cerr << "verification failed: " << rep.first_failure()->name << "\n";
      return rep.pass ? kOk : kMismatch;
    }
    if (*compare) {
      const LtfSpec f = parse_spec(spec_text), g = parse_spec(spec_g);
      if (f.arity() != g.arity()) throw std::invalid_argument("arity mismatch between f and g");
      tie_context = spec_text;
      const BooleanFunction bf = materialize(f);
      tie_context = spec_g;
      const BooleanFunction bg = materialize(g);
      const ComparisonReport rep = compare_stability(bf, bg, grid);
      const CrossoverScan scan = crossover_scan(bf, bg);
      write_file(out_path, report::compare_csv(stability_polynomial(wht(bf)), stability_polynomial(wht(bg)), grid));
      std::cout << report::render(report::compare(f, g, grid, out_path, rep, scan));
      return kOk;
    }
    if (*search) {
      search_opts.require_tie_free = !allow_ties;
      const auto results = search_counterexamples(search_opts);
      const auto file = report::search_results(search_opts, results);
      write_file(out_path, report::render(file));
      std::cout << report::render(report::search(search_opts, out_path, file));
      return kOk;
    }
    if (*table) {
      std::cout << materialize(parse_spec(spec_text)).to_hex() << "\n";
      return kOk;
    }
  } catch (const TieEncountered& tie) {
    print_tie(tie, tie_context.empty() ? spec_text : tie_context);
    std::cerr << "error: " << tie.what() << "\n";
    return kTie;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
