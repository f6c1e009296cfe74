#ifndef STABLEPERM_ENUMERATION_HPP
#define STABLEPERM_ENUMERATION_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cycles.hpp"
#include "error.hpp"
#include "family.hpp"
#include "parallel.hpp"
#include "permutation.hpp"
#include "stability.hpp"

namespace stableperm {

enum class SpaceKind { all_of_sn2, two_transposition_involutions, family_tuples, all_of_sn };

inline constexpr std::string_view label(SpaceKind k) {
  switch (k) {
    case SpaceKind::all_of_sn2: return "AllOfSn2";
    case SpaceKind::two_transposition_involutions: return "TwoTranspositionInvolutions";
    case SpaceKind::family_tuples: return "FamilyTuples";
    case SpaceKind::all_of_sn: return "AllOfSn";
  }
  return "";
}

struct SearchSpace {
  SpaceKind kind;
  int n;
  std::uint64_t cardinality;
};

// Largest spaces the sweeps accept.
inline constexpr int max_n_all_of_sn2 = 3;
inline constexpr int max_n_involutions = 6;
inline constexpr int max_n_exhaustive_family = 4;
inline constexpr int max_n_t1 = 8;

inline constexpr std::uint64_t default_seed = 20231016;
inline constexpr std::uint64_t default_samples = 10'000;
inline constexpr std::size_t default_partitions = 64;

namespace detail {

inline long double approx_factorial(long double m) { return std::tgamma(m + 1.0L); }

inline std::string approx_string(long double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

inline std::uint64_t factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i)
    f *= static_cast<std::uint64_t>(i);
  return f;
}

[[noreturn]] inline void refuse(SpaceKind kind, int n, long double estimate, int limit) {
  throw capacity_error(std::string(label(kind)) + " at n=" + std::to_string(n) + " has about " +
                       approx_string(estimate) + " candidates; exhaustive runs support n <= " +
                       std::to_string(limit));
}

}  // namespace detail

inline std::uint64_t two_transposition_count(int n) {
  const std::uint64_t m = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  if (m < 4)
    return 0;
  return (m * (m - 1) / 2) * ((m - 2) * (m - 3) / 2) / 2;
}

inline std::uint64_t family_tuple_count(int n) {
  const std::uint64_t p = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1);
  return p * p * p;
}

// Exhaustive search spaces; refuses anything outside the feasible range.
inline SearchSpace make_space(SpaceKind kind, int n) {
  if (n < 1)
    throw range_error("n must be positive");
  switch (kind) {
    case SpaceKind::all_of_sn2:
      if (n > max_n_all_of_sn2)
        detail::refuse(kind, n, detail::approx_factorial(static_cast<long double>(n) * n),
                       max_n_all_of_sn2);
      return {kind, n, detail::factorial(n * n)};
    case SpaceKind::two_transposition_involutions:
      if (n > max_n_involutions) {
        const long double m = static_cast<long double>(n) * n;
        detail::refuse(kind, n, m * (m - 1) * (m - 2) * (m - 3) / 8, max_n_involutions);
      }
      return {kind, n, two_transposition_count(n)};
    case SpaceKind::family_tuples:
      if (n > max_n_exhaustive_family)
        detail::refuse(kind, n, std::pow(static_cast<long double>(n) * (n - 1), 3.0L),
                       max_n_exhaustive_family);
      return {kind, n, family_tuple_count(n)};
    case SpaceKind::all_of_sn:
      if (n > max_n_t1)
        detail::refuse(kind, n, detail::approx_factorial(n), max_n_t1);
      return {kind, n, detail::factorial(n)};
  }
  throw range_error("unknown search space");
}

// The index-th permutation of {0, ..., size-1} in lexicographic order
// (factorial number system).
inline std::vector<code_type> unrank_permutation(std::uint64_t index, std::size_t size) {
  std::vector<code_type> pool(size);
  std::iota(pool.begin(), pool.end(), code_type{0});
  std::vector<code_type> out;
  out.reserve(size);
  std::uint64_t f = detail::factorial(static_cast<int>(size));
  for (std::size_t remaining = size; remaining > 0; --remaining) {
    f /= remaining;
    const std::uint64_t digit = index / f;
    index %= f;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return out;
}

// The index-th valid FamilySpec in lexicographic order of (a1,a2,b1,b2,b3,b4).
inline FamilySpec unrank_family(std::uint64_t index, int n) {
  const auto n64 = static_cast<std::uint64_t>(n);
  std::array<std::uint64_t, 6> digits{};
  for (int i = 5; i >= 0; --i) {
    const std::uint64_t radix = (i % 2 == 0) ? n64 : n64 - 1;
    digits[static_cast<std::size_t>(i)] = index % radix;
    index /= radix;
  }
  // Odd positions pick from [n] minus the letter before them.
  std::array<int, 6> v{};
  for (std::size_t i = 0; i < 6; ++i) {
    v[i] = static_cast<int>(digits[i]) + 1;
    if (i % 2 == 1 && v[i] >= v[i - 1])
      ++v[i];
  }
  return {n, v[0], v[1], v[2], v[3], v[4], v[5]};
}

// Unordered pairs of disjoint transpositions {(p q), (r s)} of codes with
// p < q, r < s and p < r, so each involution appears once.
inline std::vector<std::array<code_type, 4>> two_transpositions(int n) {
  const auto m = static_cast<code_type>(n * n);
  std::vector<std::array<code_type, 4>> out;
  out.reserve(two_transposition_count(n));
  for (code_type p = 0; p < m; ++p)
    for (code_type q = p + 1; q < m; ++q)
      for (code_type r = p + 1; r < m; ++r)
        for (code_type s = r + 1; s < m; ++s)
          if (r != q && s != q)
            out.push_back({p, q, r, s});
  return out;
}

struct ClassTally {
  std::string name;
  std::uint64_t examined = 0;
  std::uint64_t stable = 0;
};

struct Sampling {
  std::uint64_t seed;
  std::uint64_t samples;
};

struct TheoremCounts {
  std::uint64_t condition_i = 0;
  std::uint64_t condition_ii = 0;
  std::uint64_t predicted_stable = 0;
  std::uint64_t verified_stable = 0;
};

struct EnumReport {
  SearchSpace space{};
  std::optional<Sampling> sampling;
  std::uint64_t examined = 0;
  std::uint64_t stable_count = 0;
  std::vector<std::string> mismatches;
  std::vector<std::string> stable_elements;  // censuses only, canonical cycle notation
  std::vector<ClassTally> classes;           // sorted by name
  std::optional<TheoremCounts> theorem;      // theorem sweeps only
  std::size_t partitions = 0;
  std::chrono::nanoseconds wall_time{};

  std::uint64_t expected() const { return sampling ? sampling->samples : space.cardinality; }
  bool complete() const { return examined == expected(); }
};

struct RunOptions {
  unsigned jobs = 1;
  std::uint64_t seed = default_seed;
  std::uint64_t samples = default_samples;
  std::size_t partitions = default_partitions;
};

namespace detail {

struct ChunkTally {
  std::uint64_t examined = 0;
  std::uint64_t stable = 0;
  std::map<std::string, ClassTally> classes;
  std::vector<std::string> elements;
  std::vector<std::string> mismatches;
  TheoremCounts theorem;

  void count(const std::string& cls, bool stable_here) {
    auto& t = classes[cls];
    t.name = cls;
    ++t.examined;
    if (stable_here)
      ++t.stable;
    ++examined;
    if (stable_here)
      ++stable;
  }
};

template <typename Fn>
EnumReport run_space(SearchSpace space, std::optional<Sampling> sampling, std::uint64_t total,
                     const RunOptions& opt, Fn&& per_range) {
  const auto started = std::chrono::steady_clock::now();
  const std::uint64_t chunk =
      std::max<std::uint64_t>(1, (total + opt.partitions - 1) / std::max<std::size_t>(1, opt.partitions));
  const auto ranges = partition(total, chunk);
  const auto parts = run_partitioned<ChunkTally>(ranges, opt.jobs, per_range);

  EnumReport report;
  report.space = space;
  report.sampling = sampling;
  std::map<std::string, ClassTally> classes;
  TheoremCounts th;
  for (const ChunkTally& c : parts) {
    report.examined += c.examined;
    report.stable_count += c.stable;
    for (const auto& [name, t] : c.classes) {
      auto& dst = classes[name];
      dst.name = name;
      dst.examined += t.examined;
      dst.stable += t.stable;
    }
    report.stable_elements.insert(report.stable_elements.end(), c.elements.begin(), c.elements.end());
    report.mismatches.insert(report.mismatches.end(), c.mismatches.begin(), c.mismatches.end());
    th.condition_i += c.theorem.condition_i;
    th.condition_ii += c.theorem.condition_ii;
    th.predicted_stable += c.theorem.predicted_stable;
    th.verified_stable += c.theorem.verified_stable;
  }
  std::sort(report.stable_elements.begin(), report.stable_elements.end());
  std::sort(report.mismatches.begin(), report.mismatches.end());
  for (auto& [_, t] : classes)
    report.classes.push_back(std::move(t));
  if (space.kind == SpaceKind::family_tuples)
    report.theorem = th;
  report.partitions = ranges.size();
  report.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

// Uniform draw from [0, bound) on top of mt19937_64, whose output sequence is
// fixed by the standard; the distribution adaptors are not.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace detail

// Rank-1 census of S([n]^2) (AllOfSn2) or of the products of two disjoint
// transpositions (TwoTranspositionInvolutions), using the exact criterion.
inline EnumReport census_rank1(int n, SpaceKind kind, const RunOptions& opt = {}) {
  if (kind != SpaceKind::all_of_sn2 && kind != SpaceKind::two_transposition_involutions)
    throw range_error("census_rank1: space must be AllOfSn2 or TwoTranspositionInvolutions");
  const SearchSpace space = make_space(kind, n);
  const std::size_t degree = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);

  auto record = [n](detail::ChunkTally& tally, std::vector<code_type> image) {
    const Permutation u = Permutation::from_image(n, 2, std::move(image));
    const bool stable = commutes_rank1(u);
    tally.count(cycle_type(u), stable);
    if (stable)
      tally.elements.push_back(format_cycles(u));
  };

  if (kind == SpaceKind::all_of_sn2) {
    return detail::run_space(space, std::nullopt, space.cardinality, opt, [&](IndexRange r) {
      detail::ChunkTally tally;
      std::vector<code_type> image = unrank_permutation(r.begin, degree);
      for (std::uint64_t i = r.begin; i < r.end; ++i) {
        record(tally, image);
        std::next_permutation(image.begin(), image.end());
      }
      return tally;
    });
  }

  const auto pairs = two_transpositions(n);
  return detail::run_space(space, std::nullopt, space.cardinality, opt, [&](IndexRange r) {
    detail::ChunkTally tally;
    for (std::uint64_t i = r.begin; i < r.end; ++i) {
      const auto& [p, q, s, t] = pairs[i];
      std::vector<code_type> image(degree);
      std::iota(image.begin(), image.end(), code_type{0});
      std::swap(image[p], image[q]);
      std::swap(image[s], image[t]);
      record(tally, std::move(image));
    }
    return tally;
  });
}

// Runs the classifier against the exact criterion on every valid FamilySpec
// (n <= 4) or on opt.samples seeded random specs (n >= 5).
inline EnumReport sweep_theorem(int n, const RunOptions& opt = {}) {
  if (n < 2)
    throw range_error("sweep_theorem: n must be at least 2");
  checked_degree(n, 3);
  const bool sampled = n > max_n_exhaustive_family;
  const SearchSpace space{SpaceKind::family_tuples, n, family_tuple_count(n)};

  std::vector<std::uint64_t> picks;
  std::optional<Sampling> sampling;
  if (sampled) {
    sampling = Sampling{opt.seed, opt.samples};
    std::mt19937_64 rng(opt.seed);
    picks.resize(opt.samples);
    for (auto& p : picks)
      p = detail::bounded(rng, space.cardinality);
  }
  const std::uint64_t total = sampled ? opt.samples : space.cardinality;

  return detail::run_space(space, sampling, total, opt, [&](IndexRange r) {
    detail::ChunkTally tally;
    for (std::uint64_t i = r.begin; i < r.end; ++i) {
      const FamilySpec spec = unrank_family(sampled ? picks[i] : i, n);
      try {
        const FamilyVerdict v = evaluate(spec);
        const std::string cls = v.conditions.condition_i    ? "condition-i"
                                : v.conditions.condition_ii ? "condition-ii"
                                : v.witness                 ? std::string(label(v.witness->which))
                                                            : "unclassified";
        tally.count(cls, v.verified_stable);
        tally.theorem.condition_i += v.conditions.condition_i;
        tally.theorem.condition_ii += v.conditions.condition_ii;
        tally.theorem.predicted_stable += v.predicted_stable();
        tally.theorem.verified_stable += v.verified_stable;
        if (!v.consistent())
          tally.mismatches.push_back(to_string(spec) + ": predicted " +
                                     (v.predicted_stable() ? "stable" : "unstable") +
                                     ", verified " + (v.verified_stable ? "stable" : "unstable"));
      } catch (const consistency_error& e) {
        tally.count("inconsistent", false);
        tally.mismatches.push_back(to_string(spec) + ": " + e.what());
      }
    }
    return tally;
  });
}

// Every u in S_n should be stable of rank 1 under the bounded Psi test.
inline EnumReport sweep_t1(int n, const RunOptions& opt = {}) {
  const SearchSpace space = make_space(SpaceKind::all_of_sn, n);
  checked_degree(n, 1 + 1 + 2);
  return detail::run_space(space, std::nullopt, space.cardinality, opt, [&](IndexRange r) {
    detail::ChunkTally tally;
    std::vector<code_type> image = unrank_permutation(r.begin, static_cast<std::size_t>(n));
    for (std::uint64_t i = r.begin; i < r.end; ++i) {
      const Permutation u = Permutation::from_image(n, 1, image);
      const StabilityVerdict v = stability_bounded(u, 1, 2);
      const bool rank1 = v.status == StabilityStatus{StableWithRank{1}};
      tally.count(cycle_type(u), rank1);
      if (!rank1)
        tally.mismatches.push_back(format_cycles(u) + ": not stable of rank 1 within horizon");
      std::next_permutation(image.begin(), image.end());
    }
    return tally;
  });
}

}  // namespace stableperm

#endif  // STABLEPERM_ENUMERATION_HPP
