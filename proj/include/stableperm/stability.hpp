#ifndef STABLEPERM_STABILITY_HPP
#define STABLEPERM_STABILITY_HPP

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "error.hpp"
#include "multi_index.hpp"
#include "permutation.hpp"

namespace stableperm {

// Psi_k(u) over [n]^{t+k}. Psi_0(u) = u^{-1}; for k >= 1
//
//   Psi_k(u) = F_0 F_1 ... F_k G_1 ... G_k,
//   F_i = 1^{k-i} (x) u^{-1} (x) 1^{i},   G_i = 1^{i} (x) u (x) 1^{k-i},
//
// where a written product acts right to left: G_k is applied first, F_0 last.
inline Permutation psi(const Permutation& u, int k) {
  if (k < 0)
    throw range_error("psi: k must be non-negative");
  const Permutation u_inv = inverse(u);
  if (k == 0)
    return u_inv;
  const int n = u.alphabet();
  const int len = u.length() + k;
  checked_degree(n, len);

  std::vector<Embedded> steps;
  steps.reserve(static_cast<std::size_t>(2 * k + 1));
  for (int i = k; i >= 1; --i)
    steps.emplace_back(u, k - i);
  for (int i = k; i >= 0; --i)
    steps.emplace_back(u_inv, i);

  return tabulate(n, len, [&](code_type x) {
    for (const Embedded& s : steps)
      x = s(x);
    return x;
  });
}

struct PsiTrace {
  Permutation base;
  std::vector<Permutation> terms;  // terms[j] = Psi_j(base)
  // settled[j] is Psi_j == Psi_{j-1} (x) 1; settled[0] is always false.
  std::vector<bool> settled;

  int horizon() const noexcept { return static_cast<int>(terms.size()) - 1; }
};

namespace detail {

// big == small (x) 1^{(x) extra}, compared without building the right side.
inline bool equals_padded(const Permutation& big, const Permutation& small, int extra) {
  const std::uint64_t tail = checked_degree(small.alphabet(), extra);
  for (std::size_t x = 0; x < big.degree(); ++x) {
    const std::uint64_t head = x / tail;
    const std::uint64_t expected = small(static_cast<code_type>(head)) * tail + x % tail;
    if (big(static_cast<code_type>(x)) != expected)
      return false;
  }
  return true;
}

}  // namespace detail

inline PsiTrace psi_trace(const Permutation& u, int horizon) {
  if (horizon < 0)
    throw range_error("psi_trace: horizon must be non-negative");
  checked_degree(u.alphabet(), u.length() + horizon);
  PsiTrace trace{u, {}, {}};
  for (int j = 0; j <= horizon; ++j) {
    trace.terms.push_back(psi(u, j));
    trace.settled.push_back(j > 0 && detail::equals_padded(trace.terms[static_cast<std::size_t>(j)],
                                                           trace.terms[static_cast<std::size_t>(j - 1)], 1));
  }
  return trace;
}

// A point alpha of [n]^3 where (u(x)1)(1(x)u) and (1(x)u)(u(x)1) disagree.
struct Witness {
  MultiIndex alpha;
  MultiIndex lhs;  // ((u (x) 1) o (1 (x) u))(alpha)
  MultiIndex rhs;  // ((1 (x) u) o (u (x) 1))(alpha)
};

namespace detail {

inline void require_square(const Permutation& u, const char* op) {
  if (u.length() != 2)
    throw domain_error(std::string(op) + ": requires a permutation of [n]^2, got length " +
                       std::to_string(u.length()));
}

struct CommutatorSides {
  code_type lhs;
  code_type rhs;
};

inline CommutatorSides commutator_sides(const Permutation& u, code_type alpha) {
  const Embedded left(u, 1);   // u (x) 1
  const Embedded right(u, 0);  // 1 (x) u
  return {left(right(alpha)), right(left(alpha))};
}

}  // namespace detail

// Both sides of the rank-1 commutation equation at alpha.
inline Witness evaluate_commutator(const Permutation& u, const MultiIndex& alpha) {
  detail::require_square(u, "evaluate_commutator");
  if (alpha.alphabet() != u.alphabet() || alpha.length() != 3)
    throw dimension_error("evaluate_commutator: alpha must lie in [n]^3");
  const auto [l, r] = detail::commutator_sides(u, rank(alpha));
  return {alpha, unrank(l, u.alphabet(), 3), unrank(r, u.alphabet(), 3)};
}

// Lexicographically smallest alpha at which the two sides differ, if any.
inline std::optional<Witness> find_witness(const Permutation& u) {
  detail::require_square(u, "find_witness");
  const int n = u.alphabet();
  const auto size = static_cast<code_type>(checked_degree(n, 3));
  for (code_type alpha = 0; alpha < size; ++alpha) {
    const auto [l, r] = detail::commutator_sides(u, alpha);
    if (l != r)
      return Witness{unrank(alpha, n, 3), unrank(l, n, 3), unrank(r, n, 3)};
  }
  return std::nullopt;
}

struct Rank1Result {
  bool stable;
  std::optional<Witness> witness;  // present iff !stable
};

// u in S([n]^2) is stable of rank 1 iff (u(x)1)(1(x)u) = (1(x)u)(u(x)1) in S([n]^3).
inline Rank1Result is_stable_rank1_exact(const Permutation& u) {
  detail::require_square(u, "is_stable_rank1_exact");
  auto w = find_witness(u);
  return {!w.has_value(), std::move(w)};
}

// Allocation-free form of is_stable_rank1_exact for bulk scans.
inline bool commutes_rank1(const Permutation& u) {
  detail::require_square(u, "commutes_rank1");
  const auto size = static_cast<code_type>(u.degree() * static_cast<std::size_t>(u.alphabet()));
  for (code_type alpha = 0; alpha < size; ++alpha) {
    const auto [l, r] = detail::commutator_sides(u, alpha);
    if (l != r)
      return false;
  }
  return true;
}

struct StableWithRank {
  int rank;
  friend bool operator==(const StableWithRank&, const StableWithRank&) = default;
};
struct NotStableWithinHorizon {
  friend bool operator==(const NotStableWithinHorizon&, const NotStableWithinHorizon&) = default;
};
struct Rank1Exact {
  bool stable;
  friend bool operator==(const Rank1Exact&, const Rank1Exact&) = default;
};

using StabilityStatus = std::variant<StableWithRank, NotStableWithinHorizon, Rank1Exact>;

struct StabilityVerdict {
  StabilityStatus status;
  int k_max = 0;
  int l_max = 0;
  std::optional<Witness> witness;

  bool stable() const {
    if (const auto* s = std::get_if<Rank1Exact>(&status))
      return s->stable;
    return std::holds_alternative<StableWithRank>(status);
  }
};

inline constexpr int default_k_max = 3;
inline constexpr int default_l_max = 2;

// Least r <= k_max with Psi_{r+l}(u) = Psi_{r-1}(u) (x) 1^{l+1} for every
// l in 0..l_max. The quantifier over all l is truncated at l_max, so
// StableWithRank is a bounded verdict. For u over [n]^2 a failure at rank 1
// carries the commutation witness.
inline StabilityVerdict stability_bounded(const Permutation& u, int k_max = default_k_max,
                                          int l_max = default_l_max) {
  if (k_max < 1)
    throw range_error("stability_bounded: k_max must be at least 1");
  if (l_max < 0)
    throw range_error("stability_bounded: l_max must be non-negative");
  checked_degree(u.alphabet(), u.length() + k_max + l_max);

  std::vector<Permutation> terms;
  terms.reserve(static_cast<std::size_t>(k_max + l_max + 1));
  for (int j = 0; j <= k_max + l_max; ++j)
    terms.push_back(psi(u, j));

  StabilityVerdict verdict{NotStableWithinHorizon{}, k_max, l_max, std::nullopt};
  for (int r = 1; r <= k_max; ++r) {
    bool holds = true;
    for (int l = 0; l <= l_max && holds; ++l)
      holds = detail::equals_padded(terms[static_cast<std::size_t>(r + l)],
                                    terms[static_cast<std::size_t>(r - 1)], l + 1);
    if (holds) {
      verdict.status = StableWithRank{r};
      break;
    }
  }
  if (u.length() == 2 && verdict.status != StabilityStatus{StableWithRank{1}})
    verdict.witness = find_witness(u);
  return verdict;
}

inline StabilityVerdict stability_exact_rank1(const Permutation& u) {
  auto r = is_stable_rank1_exact(u);
  return {Rank1Exact{r.stable}, 1, 0, std::move(r.witness)};
}

}  // namespace stableperm

#endif  // STABLEPERM_STABILITY_HPP
