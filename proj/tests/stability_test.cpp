#include <random>

#include <gtest/gtest.h>

#include "stableperm/cycles.hpp"
#include "stableperm/stability.hpp"
#include "test_support.hpp"

using namespace stableperm;
using stableperm::testing::all_permutations;
using stableperm::testing::random_permutation;

namespace {

// Psi_k built from explicit tensor tables, F_0 ... F_k G_1 ... G_k read as
// operator products.
Permutation psi_by_tables(const Permutation& u, int k) {
  const int n = u.alphabet();
  const auto id = [n](int len) { return Permutation::identity(n, len); };
  const auto padded = [&](const Permutation& w, int left, int right) {
    Permutation out = w;
    if (left > 0)
      out = tensor(id(left), out);
    if (right > 0)
      out = tensor(out, id(right));
    return out;
  };
  const Permutation u_inv = inverse(u);
  if (k == 0)
    return u_inv;
  Permutation acc = id(u.length() + k);
  for (int i = 0; i <= k; ++i)
    acc = compose(acc, padded(u_inv, k - i, i));
  for (int i = 1; i <= k; ++i)
    acc = compose(acc, padded(u, i, k - i));
  return acc;
}

// Both sides of the commutator as full tables.
std::pair<Permutation, Permutation> commutator_tables(const Permutation& u) {
  const Permutation one = Permutation::identity(u.alphabet(), 1);
  const Permutation left = tensor(u, one);
  const Permutation right = tensor(one, u);
  return {compose(left, right), compose(right, left)};
}

const char* const case1_u = "((1,1),(1,3))((2,3),(2,4))";

}  // namespace

TEST(PsiTest, ZeroIsInverse) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = random_permutation(rng, 3, 1 + trial % 2);
    ASSERT_EQ(inverse(u), psi(u, 0));
  }
}

TEST(PsiTest, IdentityStaysIdentity) {
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k <= 3; ++k)
      EXPECT_EQ(Permutation::identity(n, 2 + k), psi(Permutation::identity(n, 2), k));
}

TEST(PsiTest, LevelOneExpansion) {
  const Permutation u = parse_permutation("((1,1),(1,2))((2,1),(2,2))", 2, 2);
  const Permutation one = Permutation::identity(2, 1);
  const Permutation u_inv = inverse(u);
  const Permutation expected =
      compose(tensor(one, u_inv), compose(tensor(u_inv, one), tensor(one, u)));
  EXPECT_EQ(expected, psi(u, 1));
}

TEST(PsiTest, MatchesExplicitTensorProducts) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 2;
    const int t = 1 + trial % 3;
    const auto u = random_permutation(rng, n, t);
    for (int k = 0; k <= 3 && t + k <= 6; ++k)
      ASSERT_EQ(psi_by_tables(u, k), psi(u, k)) << "t=" << t << " k=" << k;
  }
}

TEST(PsiTest, RankOneMeansLevelOneIsInverseTensorOne) {
  for (const auto& u : all_permutations(2, 2))
    if (is_stable_rank1_exact(u).stable) {
      EXPECT_EQ(tensor(inverse(u), Permutation::identity(2, 1)), psi(u, 1));
    }
}

TEST(PsiTest, CapacityAndArgumentErrors) {
  EXPECT_THROW(psi(Permutation::identity(10, 2), 6), capacity_error);
  EXPECT_THROW(psi(Permutation::identity(2, 2), -1), range_error);
}

TEST(PsiTest, TraceSettledFlags) {
  const PsiTrace id = psi_trace(Permutation::identity(3, 2), 3);
  ASSERT_EQ(3, id.horizon());
  EXPECT_FALSE(id.settled[0]);
  for (int j = 1; j <= 3; ++j)
    EXPECT_TRUE(id.settled[static_cast<std::size_t>(j)]);

  const PsiTrace stable = psi_trace(parse_permutation("((1,1),(1,2))((2,1),(2,2))", 2, 2), 2);
  EXPECT_TRUE(stable.settled[1]);
  EXPECT_TRUE(stable.settled[2]);

  const PsiTrace unstable = psi_trace(parse_permutation(case1_u, 4, 2), 1);
  EXPECT_FALSE(unstable.settled[1]);
}

TEST(Rank1Test, FamilyInstances) {
  EXPECT_TRUE(is_stable_rank1_exact(parse_permutation("((1,1),(1,2))((2,1),(2,2))", 2, 2)).stable);
  EXPECT_TRUE(is_stable_rank1_exact(parse_permutation("((1,3),(1,4))((2,3),(2,5))", 5, 2)).stable);

  const Permutation u = parse_permutation(case1_u, 4, 2);
  const Rank1Result r = is_stable_rank1_exact(u);
  EXPECT_FALSE(r.stable);
  ASSERT_TRUE(r.witness.has_value());

  const Witness w = evaluate_commutator(u, MultiIndex(4, {1, 1, 3}));
  EXPECT_EQ(MultiIndex(4, {1, 3, 1}), w.lhs);
  EXPECT_EQ(MultiIndex(4, {1, 3, 3}), w.rhs);
}

TEST(Rank1Test, RequiresLengthTwo) {
  EXPECT_THROW(is_stable_rank1_exact(Permutation::identity(2, 1)), domain_error);
  EXPECT_THROW(find_witness(Permutation::identity(2, 3)), domain_error);
  EXPECT_THROW(commutes_rank1(Permutation::identity(2, 3)), domain_error);
}

TEST(WitnessTest, NoneForStable) {
  EXPECT_FALSE(find_witness(Permutation::identity(3, 2)).has_value());
  EXPECT_FALSE(find_witness(parse_permutation("((1,1),(1,2))((2,1),(2,2))", 2, 2)).has_value());
}

TEST(WitnessTest, SmallestPointByFullScan) {
  const Permutation u = parse_permutation(case1_u, 4, 2);
  const auto [lhs, rhs] = commutator_tables(u);
  std::optional<code_type> first;
  for (code_type a = 0; a < 64 && !first; ++a)
    if (lhs(a) != rhs(a))
      first = a;
  ASSERT_TRUE(first.has_value());
  EXPECT_EQ(0u, *first);

  const auto w = find_witness(u);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(MultiIndex(4, {1, 1, 1}), w->alpha);
  EXPECT_EQ(MultiIndex(4, {1, 3, 3}), w->lhs);
  EXPECT_EQ(MultiIndex(4, {1, 3, 1}), w->rhs);
}

TEST(WitnessTest, RecomputesAndSeparates) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + trial % 2;
    const auto u = random_permutation(rng, n, 2);
    const auto [lhs, rhs] = commutator_tables(u);
    const auto w = find_witness(u);
    ASSERT_EQ(lhs == rhs, !w.has_value());
    if (w) {
      ASSERT_NE(w->lhs, w->rhs);
      ASSERT_EQ(lhs(w->alpha), w->lhs);
      ASSERT_EQ(rhs(w->alpha), w->rhs);
      for (code_type a = 0; a < rank(w->alpha); ++a)
        ASSERT_EQ(lhs(a), rhs(a));
    }
  }
}

TEST(Rank1Test, InverseSymmetry) {
  for (const auto& u : all_permutations(2, 2))
    ASSERT_EQ(commutes_rank1(u), commutes_rank1(inverse(u)));
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto u = random_permutation(rng, 3 + trial % 2, 2);
    ASSERT_EQ(commutes_rank1(u), commutes_rank1(inverse(u)));
  }
}

TEST(Rank1Test, RelabelingInvariance) {
  std::mt19937_64 rng(25);
  int stable_seen = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + trial % 2;
    const auto sigma = random_permutation(rng, n, 1);
    const auto ss = tensor(sigma, sigma);
    // Mix in r (x) r, which always commutes, so both outcomes are exercised.
    const auto r = random_permutation(rng, n, 1);
    const Permutation u = trial % 4 == 0 ? tensor(r, r) : random_permutation(rng, n, 2);
    const bool before = commutes_rank1(u);
    stable_seen += before;
    ASSERT_EQ(before, commutes_rank1(compose(ss, compose(u, inverse(ss)))));
  }
  EXPECT_GT(stable_seen, 0);
}

TEST(StabilityBoundedTest, EverythingInSnIsRankOne) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& u : all_permutations(n, 1)) {
      const StabilityVerdict v = stability_bounded(u);
      ASSERT_EQ(StabilityStatus{StableWithRank{1}}, v.status) << format_cycles(u);
      ASSERT_FALSE(v.witness.has_value());
    }
}

TEST(StabilityBoundedTest, IdentityIsRankOne) {
  for (int n = 2; n <= 4; ++n)
    EXPECT_EQ(StabilityStatus{StableWithRank{1}}, stability_bounded(Permutation::identity(n, 2)).status);
}

TEST(StabilityBoundedTest, AgreesWithExactCriterionOnS22) {
  int stable = 0;
  for (const auto& u : all_permutations(2, 2)) {
    const bool exact = is_stable_rank1_exact(u).stable;
    const StabilityVerdict v = stability_bounded(u, 1, 2);
    ASSERT_EQ(exact, v.status == StabilityStatus{StableWithRank{1}}) << format_cycles(u);
    ASSERT_EQ(exact, !v.witness.has_value());
    stable += exact;
  }
  EXPECT_EQ(4, stable);
}

TEST(StabilityBoundedTest, UnstableCarriesWitness) {
  const StabilityVerdict v = stability_bounded(parse_permutation(case1_u, 4, 2), 1, 2);
  EXPECT_EQ(StabilityStatus{NotStableWithinHorizon{}}, v.status);
  EXPECT_FALSE(v.stable());
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(1, v.k_max);
  EXPECT_EQ(2, v.l_max);
}

TEST(StabilityBoundedTest, ArgumentChecks) {
  const auto id = Permutation::identity(2, 2);
  EXPECT_THROW(stability_bounded(id, 0, 2), range_error);
  EXPECT_THROW(stability_bounded(id, 1, -1), range_error);
  EXPECT_THROW(stability_bounded(Permutation::identity(11, 2), 3, 2), capacity_error);
}

TEST(StabilityBoundedTest, ExactVerdict) {
  const StabilityVerdict yes = stability_exact_rank1(Permutation::identity(3, 2));
  EXPECT_TRUE(yes.stable());
  const StabilityVerdict no = stability_exact_rank1(parse_permutation(case1_u, 4, 2));
  EXPECT_FALSE(no.stable());
  EXPECT_TRUE(no.witness.has_value());
}
