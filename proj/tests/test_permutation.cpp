// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "ndotp/entropy.hpp"
#include "ndotp/errors.hpp"
#include "ndotp/permutation.hpp"
#include "test_support.hpp"

using namespace ndotp;
using ndotp::testing::all_permutations;
using ndotp::testing::perm;
using ndotp::testing::code;

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0, 1}), RangeError);
  EXPECT_THROW(Permutation({0, 3, 1}), RangeError);
  EXPECT_THROW(Permutation(std::vector<Symbol>{}), RangeError);
  EXPECT_NO_THROW(Permutation({2, 0, 1}));
}

TEST(LehmerCode, RejectsOutOfRangeDigits) {
  EXPECT_THROW(LehmerCode({0, 0, 1}), RangeError);  // last digit must be 0
  EXPECT_THROW(LehmerCode({3, 0, 0}), RangeError);
  EXPECT_NO_THROW(LehmerCode({2, 1, 0}));
  EXPECT_THROW(LehmerCode({2, 1, 0}).with_digit(1, 2), RangeError);
}

TEST(Lehmer, WorkedExamples) {
  EXPECT_EQ(oneline_to_lehmer(perm({1, 2, 3, 0})), code({3, 0, 0, 0}));
  EXPECT_EQ(oneline_to_lehmer(perm({0, 4, 2, 3, 1})), code({0, 3, 1, 1, 0}));
  EXPECT_EQ(lehmer_to_oneline(code({0, 3, 1, 1, 0})), perm({0, 4, 2, 3, 1}));
}

TEST(Lehmer, IdentityIsAllZeros) {
  EXPECT_EQ(oneline_to_lehmer(Permutation::identity(4)), LehmerCode::zeros(4));
  EXPECT_EQ(lehmer_to_oneline(LehmerCode::zeros(4)), Permutation::identity(4));
}

// Independent oracle: the cells still empty when symbol i is placed are the
// ones holding larger symbols, so digit i counts larger symbols to its left.
LehmerCode oracle_lehmer(const Permutation& p) {
  std::vector<Symbol> d(p.order());
  for (std::size_t i = 0; i < p.order(); ++i) {
    std::size_t pos = 0;
    while (p[pos] != i) ++pos;
    Symbol skipped = 0;
    for (std::size_t j = 0; j < pos; ++j) skipped += p[j] > i;
    d[i] = skipped;
  }
  return LehmerCode(d);
}

TEST(Lehmer, ExhaustiveRoundTripAndOracle) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::vector<Symbol>> codes;
    for (const auto& p : all_permutations(n)) {
      const LehmerCode w = oneline_to_lehmer(p);
      ASSERT_EQ(w, oracle_lehmer(p));
      ASSERT_EQ(lehmer_to_oneline(w), p);
      codes.emplace(w.digits().begin(), w.digits().end());
    }
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    EXPECT_EQ(codes.size(), fact);
  }
}

TEST(Lehmer, RandomRoundTripLargeOrders) {
  SeededEntropy rng(11);
  for (std::size_t n : {50u, 95u}) {
    for (int t = 0; t < 10000; ++t) {
      const LehmerCode w = random_lehmer(n, rng);
      ASSERT_EQ(oneline_to_lehmer(lehmer_to_oneline(w)), w);
    }
  }
}

TEST(Compose, DefinitionAndLaws) {
  const Permutation a = perm({1, 2, 0});
  const Permutation b = perm({0, 2, 1});
  EXPECT_EQ(compose(a, b), perm({1, 0, 2}));
  EXPECT_THROW(compose(a, Permutation::identity(4)), OrderMismatch);

  // Exhaustive S_3 table against the definition.
  const auto s3 = all_permutations(3);
  for (const auto& x : s3) {
    for (const auto& y : s3) {
      const Permutation xy = compose(x, y);
      for (std::size_t j = 0; j < 3; ++j) ASSERT_EQ(xy[j], x[y[j]]);
      for (const auto& z : s3) {
        ASSERT_EQ(compose(compose(x, y), z), compose(x, compose(y, z)));
      }
    }
    EXPECT_EQ(compose(x, invert(x)), Permutation::identity(3));
    EXPECT_EQ(compose(Permutation::identity(3), x), x);
  }
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(Permutation::identity(5)), Permutation::identity(5));
  EXPECT_EQ(invert(perm({1, 2, 3, 0})), perm({3, 0, 1, 2}));
  SeededEntropy rng(3);
  for (int t = 0; t < 1000; ++t) {
    const Permutation a = random_permutation(30, rng);
    ASSERT_EQ(invert(invert(a)), a);
    const Permutation ia = invert(a);
    for (std::size_t j = 0; j < 30; ++j) ASSERT_EQ(ia[a[j]], j);
  }
}

std::size_t oracle_cycles(const Permutation& p) {
  std::vector<bool> seen(p.order());
  std::size_t cycles = 0;
  for (std::size_t s = 0; s < p.order(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t j = s; !seen[j]; j = p[j]) seen[j] = true;
  }
  return cycles;
}

TEST(CycleCount, Examples) {
  EXPECT_EQ(cycle_count(Permutation::identity(5)), 5u);
  EXPECT_EQ(cycle_count(perm({4, 2, 3, 1, 0})), 2u);
  for (const auto& p : all_permutations(4)) {
    ASSERT_EQ(cycle_count(p), oracle_cycles(p));
    ASSERT_EQ(is_single_cycle(p.values()), oracle_cycles(p) == 1);
  }
}

// Breadth-first search over the transposition graph of S_4.
TEST(Cayley, MatchesBfsOnS4) {
  const auto s4 = all_permutations(4);
  std::map<std::vector<Symbol>, std::size_t> index;
  for (std::size_t i = 0; i < s4.size(); ++i) {
    index[{s4[i].values().begin(), s4[i].values().end()}] = i;
  }
  for (std::size_t src = 0; src < s4.size(); ++src) {
    std::vector<int> dist(s4.size(), -1);
    std::queue<std::size_t> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      std::vector<Symbol> v(s4[u].values().begin(), s4[u].values().end());
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
          std::swap(v[i], v[j]);
          const std::size_t w = index[v];
          if (dist[w] < 0) {
            dist[w] = dist[u] + 1;
            q.push(w);
          }
          std::swap(v[i], v[j]);
        }
      }
    }
    for (std::size_t dst = 0; dst < s4.size(); ++dst) {
      ASSERT_EQ(cayley_distance(s4[src], s4[dst]),
                static_cast<std::size_t>(dist[dst]));
    }
  }
}

TEST(Cayley, MetricAxioms) {
  SeededEntropy rng(5);
  for (int t = 0; t < 2000; ++t) {
    const Permutation a = random_permutation(20, rng);
    const Permutation b = random_permutation(20, rng);
    const Permutation c = random_permutation(20, rng);
    ASSERT_EQ(cayley_distance(a, a), 0u);
    ASSERT_EQ(cayley_distance(a, b), cayley_distance(b, a));
    ASSERT_EQ(cayley_distance(a, b) == 0, a == b);
    ASSERT_LE(cayley_distance(a, c),
              cayley_distance(a, b) + cayley_distance(b, c));
  }
}

TEST(Cayley, SingleDigitOffsetGivesDistanceDelta) {
  SeededEntropy rng(17);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 2 + uniform_below(40, rng);
    const LehmerCode w = random_lehmer(n, rng);
    const std::size_t i = uniform_below(n - 1, rng);
    const Symbol v = static_cast<Symbol>(uniform_below(w.radix(i), rng));
    const std::size_t delta = v > w[i] ? v - w[i] : w[i] - v;
    ASSERT_EQ(cayley_distance(lehmer_to_oneline(w),
                              lehmer_to_oneline(w.with_digit(i, v))),
              delta);
  }
}

TEST(Cayley, TwoOffsetsNeedNotAdd) {
  // Two perturbations obey the triangle inequality; additivity can fail.
  SeededEntropy rng(23);
  bool saw_non_additive = false;
  for (int t = 0; t < 2000; ++t) {
    const LehmerCode w = random_lehmer(8, rng);
    const std::size_t i = uniform_below(7, rng);
    std::size_t j = uniform_below(6, rng);
    if (j >= i) ++j;
    const LehmerCode w1 =
        w.with_digit(i, static_cast<Symbol>(uniform_below(w.radix(i), rng)));
    const LehmerCode w2 =
        w1.with_digit(j, static_cast<Symbol>(uniform_below(w.radix(j), rng)));
    const auto d01 = cayley_distance(lehmer_to_oneline(w), lehmer_to_oneline(w1));
    const auto d12 =
        cayley_distance(lehmer_to_oneline(w1), lehmer_to_oneline(w2));
    const auto d02 = cayley_distance(lehmer_to_oneline(w), lehmer_to_oneline(w2));
    ASSERT_LE(d02, d01 + d12);
    saw_non_additive |= d02 < d01 + d12;
  }
  EXPECT_TRUE(saw_non_additive);
}

TEST(SingleCycle, CanonicalRotationAndConversion) {
  const SingleCycle c({1, 0, 2});
  EXPECT_EQ(std::vector<Symbol>(c.cycle().begin(), c.cycle().end()),
            (std::vector<Symbol>{0, 2, 1}));
  EXPECT_EQ(c, SingleCycle({2, 1, 0}));
  EXPECT_EQ(single_cycle_to_oneline(c), perm({2, 0, 1}));
  EXPECT_THROW(oneline_to_single_cycle(perm({4, 2, 3, 1, 0})), NotSingleCycle);
  EXPECT_THROW(SingleCycle({0, 0, 1}), RangeError);

  std::size_t single = 0;
  for (const auto& p : all_permutations(4)) {
    if (cycle_count(p) != 1) continue;
    ++single;
    ASSERT_EQ(single_cycle_to_oneline(oneline_to_single_cycle(p)), p);
  }
  EXPECT_EQ(single, 6u);
}

TEST(SingleCycle, WalkMatchesPowers) {
  const SingleCycle c({0, 3, 1, 4, 2});
  const Permutation p = single_cycle_to_oneline(c);
  Permutation power = Permutation::identity(5);
  for (std::int64_t k = 0; k < 12; ++k) {
    for (Symbol s = 0; s < 5; ++s) {
      ASSERT_EQ(c.walk(s, k), power[s]);
      ASSERT_EQ(c.walk(power[s], -k), s);
    }
    power = compose(p, power);
  }
}

TEST(SameCycle, IgnoresRotation) {
  const std::vector<Symbol> a{3, 1, 2, 0};
  const std::vector<Symbol> b{2, 0, 3, 1};
  const std::vector<Symbol> c{3, 2, 1, 0};
  EXPECT_TRUE(same_cycle(a, b));
  EXPECT_FALSE(same_cycle(a, c));
}
