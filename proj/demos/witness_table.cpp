// Prints one representative of every counterexample case at the smallest n
// where it occurs, with the point alpha and both sides of the commutator.

#include <iostream>
#include <map>

#include "stableperm/stableperm.hpp"

int main() {
  using namespace stableperm;
  std::map<WitnessCase, FamilySpec> first;
  for (int n = 2; n <= 4; ++n)
    for (std::uint64_t i = 0; i < family_tuple_count(n); ++i) {
      const FamilySpec spec = unrank_family(i, n);
      if (auto w = paper_witness(spec))
        first.try_emplace(w->which, spec);
    }

  for (const auto& [which, spec] : first) {
    const auto w = *paper_witness(spec);
    std::cout << label(which) << "  " << to_string(spec) << "\n  u     = "
              << format_cycles(build(spec)) << "\n  alpha = " << to_string(w.witness.alpha)
              << "  (u(x)1)(1(x)u) = " << to_string(w.witness.lhs)
              << "  (1(x)u)(u(x)1) = " << to_string(w.witness.rhs) << "\n";
  }
}
