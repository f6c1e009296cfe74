#ifndef STABLEPERM_FAMILY_HPP
#define STABLEPERM_FAMILY_HPP

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cycles.hpp"
#include "error.hpp"
#include "multi_index.hpp"
#include "permutation.hpp"
#include "stability.hpp"

namespace stableperm {

// The involution ((a1,b1),(a1,b2)) ((a2,b3),(a2,b4)) of [n]^2.
struct FamilySpec {
  int n = 0;
  int a1 = 0, a2 = 0, b1 = 0, b2 = 0, b3 = 0, b4 = 0;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
  friend auto operator<=>(const FamilySpec&, const FamilySpec&) = default;
};

inline std::string to_string(const FamilySpec& s) {
  return "n=" + std::to_string(s.n) + " (a1,a2,b1,b2,b3,b4)=(" + std::to_string(s.a1) + "," +
         std::to_string(s.a2) + "," + std::to_string(s.b1) + "," + std::to_string(s.b2) + "," +
         std::to_string(s.b3) + "," + std::to_string(s.b4) + ")";
}

// Throws validation_error naming the first violated hypothesis.
inline void validate(const FamilySpec& s) {
  if (s.n < 1)
    throw validation_error("n >= 1");
  const std::array<std::pair<const char*, int>, 6> letters{
      {{"a_1", s.a1}, {"a_2", s.a2}, {"b_1", s.b1}, {"b_2", s.b2}, {"b_3", s.b3}, {"b_4", s.b4}}};
  for (auto [name, v] : letters)
    if (v < 1 || v > s.n)
      throw validation_error(std::string("1 <= ") + name + " <= n");
  if (s.a1 == s.a2)
    throw validation_error("a_1 != a_2");
  if (s.b1 == s.b2)
    throw validation_error("(a_1,b_1) != (a_1,b_2)");
  if (s.b3 == s.b4)
    throw validation_error("(a_2,b_3) != (a_2,b_4)");
}

inline bool is_valid(const FamilySpec& s) {
  return s.n >= 1 && s.a1 >= 1 && s.a1 <= s.n && s.a2 >= 1 && s.a2 <= s.n && s.b1 >= 1 &&
         s.b1 <= s.n && s.b2 >= 1 && s.b2 <= s.n && s.b3 >= 1 && s.b3 <= s.n && s.b4 >= 1 &&
         s.b4 <= s.n && s.a1 != s.a2 && s.b1 != s.b2 && s.b3 != s.b4;
}

inline Permutation build(const FamilySpec& s) {
  validate(s);
  const int n = s.n;
  return to_permutation(CycleSpec(n, 2,
                                  {{MultiIndex(n, {s.a1, s.b1}), MultiIndex(n, {s.a1, s.b2})},
                                   {MultiIndex(n, {s.a2, s.b3}), MultiIndex(n, {s.a2, s.b4})}}));
}

struct Conditions {
  bool condition_i;   // {a1,a2} and {b1..b4} disjoint
  bool condition_ii;  // {a1,a2} = {b1..b4}

  bool predicted_stable() const noexcept { return condition_i || condition_ii; }
};

inline Conditions classify(const FamilySpec& s) {
  const std::set<int> a{s.a1, s.a2};
  const std::set<int> b{s.b1, s.b2, s.b3, s.b4};
  bool disjoint = true;
  for (int x : a)
    disjoint = disjoint && !b.contains(x);
  return {disjoint, a == b};
}

enum class WitnessCase {
  intersect_one_case1,   // L2.2-C1
  intersect_one_case2,   // L2.2-C2
  intersect_one_case3,   // L2.2-C3
  contained_case1,       // L2.3-C1
  contained_case2,       // L2.3-C2, reduced to C1 by role swap
  contained_case3,       // L2.3-C3
  contained_case4,       // L2.3-C4
  generic,               // lexicographic scan, no case analysis
};

inline constexpr std::string_view label(WitnessCase c) {
  switch (c) {
    case WitnessCase::intersect_one_case1: return "L2.2-C1";
    case WitnessCase::intersect_one_case2: return "L2.2-C2";
    case WitnessCase::intersect_one_case3: return "L2.2-C3";
    case WitnessCase::contained_case1: return "L2.3-C1";
    case WitnessCase::contained_case2: return "L2.3-C2";
    case WitnessCase::contained_case3: return "L2.3-C3";
    case WitnessCase::contained_case4: return "L2.3-C4";
    case WitnessCase::generic: return "GENERIC";
  }
  return "GENERIC";
}

inline constexpr std::array<WitnessCase, 7> witness_cases{
    WitnessCase::intersect_one_case1, WitnessCase::intersect_one_case2,
    WitnessCase::intersect_one_case3, WitnessCase::contained_case1,
    WitnessCase::contained_case2,     WitnessCase::contained_case3,
    WitnessCase::contained_case4};

// Relabelings of a spec that leave the involution unchanged.
enum class Reduction { role_swap, swap_b1_b2, swap_b3_b4 };

inline constexpr std::string_view label(Reduction r) {
  switch (r) {
    case Reduction::role_swap: return "role-swap";
    case Reduction::swap_b1_b2: return "swap-b1-b2";
    case Reduction::swap_b3_b4: return "swap-b3-b4";
  }
  return "";
}

struct CaseWitness {
  Witness witness;
  WitnessCase which;
  FamilySpec normalized;             // spec after the reductions below
  std::vector<Reduction> reductions;  // in the order applied
};

namespace detail {

class Normalizer {
 public:
  explicit Normalizer(FamilySpec s) : s_(s) {}

  void role_swap() {
    std::swap(s_.a1, s_.a2);
    std::swap(s_.b1, s_.b3);
    std::swap(s_.b2, s_.b4);
    applied_.push_back(Reduction::role_swap);
  }
  void swap12() {
    std::swap(s_.b1, s_.b2);
    applied_.push_back(Reduction::swap_b1_b2);
  }
  void swap34() {
    std::swap(s_.b3, s_.b4);
    applied_.push_back(Reduction::swap_b3_b4);
  }

  const FamilySpec& spec() const { return s_; }
  std::vector<Reduction> applied() const { return applied_; }

 private:
  FamilySpec s_;
  std::vector<Reduction> applied_;
};

inline bool in_pair(int x, int p, int q) { return x == p || x == q; }

}  // namespace detail

// Reproduces the hand-built counterexample for a spec satisfying neither
// (i) nor (ii). Every reduction is a relabeling of the same involution, so the
// point alpha read off the normalized spec is a witness for the original one.
inline std::optional<CaseWitness> paper_witness(const FamilySpec& spec) {
  validate(spec);
  if (classify(spec).predicted_stable())
    return std::nullopt;

  detail::Normalizer norm(spec);
  const auto& s = norm.spec();
  using detail::in_pair;
  const auto in_b = [&](int x) { return in_pair(x, s.b1, s.b2) || in_pair(x, s.b3, s.b4); };

  WitnessCase which;
  std::array<int, 3> alpha{};

  if (in_b(s.a1) != in_b(s.a2)) {
    // Exactly one of a1, a2 occurs among the b's; make it a1.
    if (in_b(s.a2))
      norm.role_swap();
    const bool first = in_pair(s.a1, s.b1, s.b2);
    const bool second = in_pair(s.a1, s.b3, s.b4);
    if (first && !second) {
      if (s.b2 == s.a1)
        norm.swap12();
      which = WitnessCase::intersect_one_case1;
      alpha = {s.a1, s.b1, s.b2};
    } else if (!first && second) {
      if (s.b4 == s.a1)
        norm.swap34();
      which = WitnessCase::intersect_one_case2;
      alpha = {s.a2, s.a1, s.b1};
    } else {
      if (s.b2 == s.a1)
        norm.swap12();
      if (s.b4 == s.a1)
        norm.swap34();
      which = WitnessCase::intersect_one_case3;
      alpha = {s.a1, s.b1, s.b2};
    }
  } else if (in_b(s.a1) && in_b(s.a2)) {
    const auto pair_is_a = [&](int p, int q) {
      return (p == s.a1 && q == s.a2) || (p == s.a2 && q == s.a1);
    };
    const bool first_is_a = pair_is_a(s.b1, s.b2);
    const bool second_is_a = pair_is_a(s.b3, s.b4);
    if (first_is_a != second_is_a) {
      which = first_is_a ? WitnessCase::contained_case1 : WitnessCase::contained_case2;
      if (second_is_a)
        norm.role_swap();
      if (s.b1 != s.a1)
        norm.swap12();
      if (in_pair(s.b4, s.a1, s.a2))
        norm.swap34();
      alpha = {s.a1, s.b2, s.b3};
    } else if (in_pair(s.a1, s.b1, s.b2) && in_pair(s.a2, s.b3, s.b4)) {
      if (s.b1 != s.a1)
        norm.swap12();
      if (s.b3 != s.a2)
        norm.swap34();
      which = WitnessCase::contained_case3;
      alpha = {s.a1, s.b1, s.b2};
    } else if (in_pair(s.a2, s.b1, s.b2) && in_pair(s.a1, s.b3, s.b4)) {
      if (s.b1 != s.a2)
        norm.swap12();
      if (s.b3 != s.a1)
        norm.swap34();
      which = WitnessCase::contained_case4;
      alpha = {s.a1, s.b1, s.b3};
    } else {
      throw consistency_error("no containment case matches " + to_string(spec));
    }
  } else {
    throw consistency_error("no case matches " + to_string(spec));
  }

  const Witness w =
      evaluate_commutator(build(spec), MultiIndex(spec.n, {alpha[0], alpha[1], alpha[2]}));
  if (w.lhs == w.rhs)
    throw consistency_error("case " + std::string(label(which)) + " point " + to_string(w.alpha) +
                            " does not separate the two sides for " + to_string(spec));
  return CaseWitness{w, which, norm.spec(), norm.applied()};
}

struct FamilyVerdict {
  Conditions conditions;
  bool verified_stable;
  std::optional<CaseWitness> witness;

  bool predicted_stable() const noexcept { return conditions.predicted_stable(); }
  bool consistent() const noexcept { return predicted_stable() == verified_stable; }
};

// Like verify() but reports a disagreement instead of throwing.
inline FamilyVerdict evaluate(const FamilySpec& spec) {
  validate(spec);
  const Conditions c = classify(spec);
  const bool verified = commutes_rank1(build(spec));
  return {c, verified, paper_witness(spec)};
}

inline FamilyVerdict verify(const FamilySpec& spec) {
  FamilyVerdict v = evaluate(spec);
  if (!v.consistent())
    throw theorem_violation("classifier predicts " +
                            std::string(v.predicted_stable() ? "stable" : "unstable") +
                            " but the exact criterion says " +
                            (v.verified_stable ? "stable" : "unstable") + " for " +
                            to_string(spec));
  return v;
}

}  // namespace stableperm

#endif  // STABLEPERM_FAMILY_HPP
