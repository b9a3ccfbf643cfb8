// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "ndotp/entropy.hpp"
#include "ndotp/errors.hpp"
#include "test_support.hpp"

using namespace ndotp;

TEST(SeededEntropy, EmitsEngineWordsBigEndian) {
  std::mt19937_64 reference(5489);
  SeededEntropy src(5489);
  std::uint8_t bytes[16];
  src.fill(bytes);
  for (int w = 0; w < 2; ++w) {
    const std::uint64_t word = reference();
    for (int b = 0; b < 8; ++b) {
      ASSERT_EQ(bytes[8 * w + b],
                static_cast<std::uint8_t>(word >> (56 - 8 * b)));
    }
  }
}

TEST(BufferEntropy, ThrowsWhenDrained) {
  BufferEntropy src({1, 2, 3});
  std::uint8_t two[2];
  src.fill(two);
  EXPECT_EQ(two[0], 1);
  EXPECT_EQ(two[1], 2);
  EXPECT_THROW(src.fill(two), EntropyExhausted);
}

TEST(UniformBelow, RejectionOnCoveringPowerOfTwo) {
  // bound 5 uses 3 bits of one byte: 0x07 -> 7 rejected, 0x03 -> 3.
  BufferEntropy src({0x07, 0x03});
  EXPECT_EQ(uniform_below(5, src), 3u);
  BufferEntropy none({});
  EXPECT_EQ(uniform_below(1, none), 0u);  // consumes nothing
  EXPECT_THROW(uniform_below(0, none), RangeError);
  // bound 300 needs 9 bits from two big-endian bytes: 0x01 0x05 -> 261.
  BufferEntropy two({0x01, 0x05});
  EXPECT_EQ(uniform_below(300, two), 261u);
}

TEST(RandomLehmer, OrderOneNeedsNoEntropy) {
  BufferEntropy none({});
  EXPECT_EQ(random_lehmer(1, none), LehmerCode::zeros(1));
}

TEST(RandomLehmer, ChiSquarePerDigit) {
  constexpr std::size_t n = 10;
  constexpr int draws = 100000;
  SeededEntropy rng(2024);
  std::vector<std::vector<int>> counts(n);
  for (std::size_t i = 0; i < n; ++i) counts[i].assign(n - i, 0);
  for (int t = 0; t < draws; ++t) {
    const LehmerCode w = random_lehmer(n, rng);
    for (std::size_t i = 0; i < n; ++i) ++counts[i][w[i]];
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double expected = static_cast<double>(draws) / (n - i);
    double chi2 = 0;
    for (int c : counts[i]) chi2 += (c - expected) * (c - expected) / expected;
    EXPECT_GT(ndotp::testing::chi_square_p_value(chi2, n - i - 1.0), 0.001)
        << "digit " << i << " chi2 " << chi2;
  }
  EXPECT_EQ(counts[n - 1][0], draws);
}

TEST(RandomLehmer, GoldenVectorUnderSeed) {
  SeededEntropy rng(0x5eed);
  const LehmerCode w = random_lehmer(12, rng);
  const std::vector<Symbol> golden{1, 8, 7, 4, 4, 2, 1, 3, 1, 0, 0, 0};
  EXPECT_EQ(std::vector<Symbol>(w.digits().begin(), w.digits().end()), golden);
}

TEST(RandomPermutation, IsValidAndVaries) {
  SeededEntropy rng(9);
  const Permutation a = random_permutation(40, rng);
  const Permutation b = random_permutation(40, rng);
  EXPECT_NE(a, b);
}

TEST(OsEntropy, FillsBuffer) {
  OsEntropy os;
  std::vector<std::uint8_t> buf(64, 0);
  os.fill(buf);
  // 64 zero bytes from a working source has probability 2^-512.
  EXPECT_TRUE(std::any_of(buf.begin(), buf.end(), [](auto b) { return b; }));
}
