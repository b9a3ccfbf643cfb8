// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <sstream>

#include "ndotp/errors.hpp"
#include "ndotp/experiments.hpp"
#include "xml_check.hpp"

using namespace ndotp;

TEST(Histogram, AddMergeStats) {
  Histogram h(-1, 3);
  h.add(-1);
  h.add(1, 3);
  EXPECT_EQ(h.total(), 4u);
  EXPECT_EQ(h.count(0), 1u);
  EXPECT_EQ(h.count(2), 3u);
  EXPECT_EQ(h.label(2), 1);
  EXPECT_DOUBLE_EQ(h.mean(), 0.5);
  EXPECT_DOUBLE_EQ(h.rate(2), 0.75);
  EXPECT_THROW(h.add(2), RangeError);
  EXPECT_THROW(h.add(-2), RangeError);

  Histogram g(-1, 3);
  g.add(0, 2);
  h.merge(g);
  EXPECT_EQ(h.total(), 6u);
  EXPECT_EQ(h.count(1), 2u);
  EXPECT_THROW(h.merge(Histogram(0, 3)), RangeError);
  EXPECT_THROW(h.merge(Histogram(-1, 4)), RangeError);
  EXPECT_DOUBLE_EQ(Histogram(0, 2).mean(), 0.0);
}

TEST(Histogram, MergeIsCommutativeAndAssociative) {
  Histogram a(0, 4), b(0, 4), c(0, 4);
  a.add(0, 5);
  b.add(1, 2);
  c.add(3, 7);
  Histogram ab = a;
  ab.merge(b);
  Histogram ba = b;
  ba.merge(a);
  EXPECT_EQ(ab, ba);
  Histogram ab_c = ab;
  ab_c.merge(c);
  Histogram bc = b;
  bc.merge(c);
  Histogram a_bc = a;
  a_bc.merge(bc);
  EXPECT_EQ(ab_c, a_bc);
}

TEST(Csv, GoldenToyHistogram) {
  Histogram h(0, 3);
  h.add(0, 1);
  h.add(1, 3);
  const std::string expected =
      "bin,count,rate,log60_rate\n"
      "0,1,0.25,-0.338588\n"
      "1,3,0.75,-0.070263\n"
      "2,0,0,-inf\n";
  EXPECT_EQ(render_csv(h), expected);
}

TEST(Csv, Log60ColumnMatchesDefinition) {
  Histogram h(0, 5);
  for (int b = 0; b < 5; ++b) h.add(b, 1 + 7 * b);
  std::istringstream in(render_csv(h));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    double bin, count, rate, lg;
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &bin, &count, &rate,
                          &lg),
              4);
    EXPECT_NEAR(lg, std::log(rate) / std::log(60.0), 1e-6);
    EXPECT_NEAR(rate, count / static_cast<double>(h.total()), 1e-9);
  }
}

TEST(Svg, WellFormedAndDeterministic) {
  Histogram h(0, 11);
  for (int b = 0; b <= 10; ++b) h.add(b, b < 6 ? 1000 >> b : 0);
  for (bool log60 : {false, true}) {
    SvgOptions opt{"depth <test> & \"quotes\"", "depth", log60,
                   random_penetration_rates(50, 10)};
    const std::string svg = render_svg(h, opt);
    std::string err;
    EXPECT_TRUE(ndotp::testing::well_formed_xml(svg, &err)) << err;
    EXPECT_EQ(svg, render_svg(h, opt));
    EXPECT_NE(svg.find("<svg"), std::string::npos);
  }
  std::string err;
  EXPECT_TRUE(ndotp::testing::well_formed_xml(render_svg(Histogram(0, 1), {}),
                                              &err))
      << err;
  // The checker itself rejects broken documents.
  EXPECT_FALSE(ndotp::testing::well_formed_xml("<a><b></a></b>", &err));
  EXPECT_FALSE(ndotp::testing::well_formed_xml("<a x=\"1\">&</a>", &err));
}

TEST(Emit, WritesFiles) {
  Histogram h(0, 2);
  h.add(1);
  const std::string dir = ::testing::TempDir();
  emit_csv(h, dir + "/h.csv");
  emit_svg(h, dir + "/h.svg", {});
  EXPECT_THROW(emit_csv(h, "/nonexistent-dir/h.csv"), std::runtime_error);
}

TEST(DiffMetric, SmokeAtOrderThree) {
  const Histogram h = diff_metric_experiment({3, 500, 1, 1});
  EXPECT_EQ(h.total(), 500u);
  EXPECT_EQ(h.bins(), 3u);  // distances 0..2
  EXPECT_EQ(h.count(0), 0u);  // a changed derivative changes the permutation
  EXPECT_THROW(diff_metric_experiment({2, 10, 1, 1}), RangeError);
}

TEST(DiffMetric, DeterministicAndWorkerIndependent) {
  const Histogram one = diff_metric_experiment({40, 2000, 99, 1});
  EXPECT_EQ(one, diff_metric_experiment({40, 2000, 99, 1}));
  EXPECT_EQ(one, diff_metric_experiment({40, 2000, 99, 3}));
  EXPECT_EQ(one, diff_metric_experiment({40, 2000, 99, 7}));
  EXPECT_NE(one, diff_metric_experiment({40, 2000, 100, 1}));
}

TEST(RandomPairBaseline, MeanNearHarmonicOffset) {
  // E[distance] = n - H_n for independent uniform permutations.
  const Histogram h = random_pair_baseline({95, 20000, 5, 2});
  double harmonic = 0;
  for (int i = 1; i <= 95; ++i) harmonic += 1.0 / i;
  EXPECT_NEAR(h.mean(), 95 - harmonic, 0.1);
}

TEST(Penetration, TranspositionControlAlwaysDepthZero) {
  PenetrationSpec spec;
  spec.n = 20;
  spec.k = 5;
  spec.plaintexts = 50;
  spec.sampled_triples = 500;
  spec.perturbation = Perturbation::kTranspose;
  const Histogram h = pfi_penetration_experiment(spec);
  EXPECT_EQ(h.total(), 50u * 500u);
  EXPECT_EQ(h.count(0), h.total());
}

TEST(Penetration, ExhaustiveCountsOrderedTriples) {
  PenetrationSpec spec;
  spec.n = 5;
  spec.k = 3;
  spec.plaintexts = 4;
  spec.sampled_triples = std::nullopt;
  const Histogram all = pfi_penetration_experiment(spec);
  EXPECT_EQ(all.total(), 4u * 8 * 7 * 6);
  spec.dedup = true;
  const Histogram dedup = pfi_penetration_experiment(spec);
  EXPECT_EQ(dedup.total(), all.total() / 3);
  // Rotation-equivalent triples apply the same 3-cycle, so the dedup
  // histogram is exactly a third of the full one.
  for (std::size_t b = 0; b < all.bins(); ++b) {
    EXPECT_EQ(dedup.count(b) * 3, all.count(b));
  }
}

TEST(Penetration, WorkerIndependent) {
  PenetrationSpec spec;
  spec.n = 30;
  spec.k = 6;
  spec.plaintexts = 40;
  spec.sampled_triples = 300;
  spec.seed = 17;
  const Histogram one = pfi_penetration_experiment(spec);
  spec.workers = 4;
  EXPECT_EQ(one, pfi_penetration_experiment(spec));
}

TEST(Penetration, RandomRatesFormDistribution) {
  const auto r = random_penetration_rates(50, 10);
  ASSERT_EQ(r.size(), 11u);
  double sum = 0;
  for (double x : r) sum += x;
  EXPECT_NEAR(sum, 1.0, 1e-12);
  EXPECT_NEAR(r[0], 59.0 / 60.0, 1e-12);
  EXPECT_NEAR(random_depth_at_least(50, 10, 1), 1.0 / 60, 1e-15);
  EXPECT_NEAR(random_depth_at_least(50, 10, 2), 1.0 / (60.0 * 59), 1e-15);
  Histogram h(0, 3);
  h.add(0, 2);
  h.add(2, 2);
  EXPECT_DOUBLE_EQ(depth_at_least(h, 1), 0.5);
  EXPECT_DOUBLE_EQ(depth_at_least(h, 0), 1.0);
}

TEST(TrialEntropy, StreamsDiffer) {
  SeededEntropy a = trial_entropy(1, 0);
  SeededEntropy b = trial_entropy(1, 1);
  SeededEntropy c = trial_entropy(2, 0);
  std::uint8_t x[8], y[8], z[8];
  a.fill(x);
  b.fill(y);
  c.fill(z);
  EXPECT_NE(std::memcmp(x, y, 8), 0);
  EXPECT_NE(std::memcmp(x, z, 8), 0);
}
