// Prints the level-1 Fourier weights of Maj_5 and sgn(2x1+2x2+x3+x4+x5)
// and the first few values of the stability difference.

#include <boolspec/conjecture.hpp>

#include <iostream>

int main() {
  using namespace boolspec;

  const BooleanFunction maj = majority(5);
  const BooleanFunction f = materialize(counterexample_spec());
  const FourierExpansion em = wht(maj), ef = wht(f);

  std::cout << "coordinate  Maj5^(i)  f^(i)\n";
  for (unsigned i = 1; i <= 5; ++i) {
    const Mask s = Mask{1} << (i - 1);
    std::cout << "  " << i << "          " << to_fraction_string(coefficient(em, s)) << "       "
              << to_fraction_string(coefficient(ef, s)) << "\n";
  }
  std::cout << "W^1[Maj5] = " << to_fraction_string(degree_weight(em, 1)) << "\n"
            << "W^1[f]    = " << to_fraction_string(degree_weight(ef, 1)) << "\n";

  const ComparisonReport rep = compare_stability(f, maj, 10);
  std::cout << "verdict: " << to_string(rep.verdict) << "\n";
  for (const auto& s : rep.grid)
    std::cout << "  rho=" << to_fraction_string(s.rho) << "  D=" << to_fraction_string(s.diff) << "\n";
  if (rep.crossover_bracket)
    std::cout << "sign change in [" << to_double(rep.crossover_bracket->lo) << ", "
              << to_double(rep.crossover_bracket->hi) << "]\n";
}
