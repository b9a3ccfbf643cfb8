// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ndotp/entropy.hpp"

namespace ndotp {

/// Integer tallies over consecutive integer bins.
class Histogram {
 public:
  Histogram() = default;
  /// Bins labelled first, first+1, ..., first+count-1, all empty.
  Histogram(std::int64_t first, std::size_t count)
      : first_(first), counts_(count, 0) {}

  void add(std::int64_t label, std::uint64_t n = 1);
  /// Bin-wise sum; throws RangeError if the bin layouts differ.
  void merge(const Histogram& other);

  std::size_t bins() const noexcept { return counts_.size(); }
  std::int64_t label(std::size_t bin) const {
    return first_ + static_cast<std::int64_t>(bin);
  }
  std::uint64_t count(std::size_t bin) const { return counts_[bin]; }
  std::uint64_t total() const noexcept { return total_; }
  double rate(std::size_t bin) const;
  double mean() const;

  friend bool operator==(const Histogram&, const Histogram&) = default;

 private:
  std::int64_t first_ = 0;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// Independent stream for trial `index` of a run seeded with `seed`. Results
/// do not depend on how trials are split across workers.
SeededEntropy trial_entropy(std::uint64_t seed, std::uint64_t index);

struct DiffMetricSpec {
  std::size_t order = 95;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
};

/// Per trial: random permutation a, differentiate its Lehmer code, replace
/// derivative digit 0 by a different uniformly chosen legal value, integrate
/// to A and tally cayley_distance(a, A). Bins 0..order-1.
Histogram diff_metric_experiment(const DiffMetricSpec& spec);

/// Cayley distance between two independent uniform permutations, the
/// reference ensemble for diff_metric_experiment.
Histogram random_pair_baseline(const DiffMetricSpec& spec);

enum class Perturbation {
  kRotate3,    // values at ordered positions (i, j, l): abc -> bca
  kTranspose,  // swap the values at positions (i, j); control case
};

struct PenetrationSpec {
  std::size_t n = 50;
  std::size_t k = 10;
  std::size_t plaintexts = 1000;
  /// Sampled triples per plaintext; nullopt enumerates all ordered triples.
  std::optional<std::size_t> sampled_triples = 10000;
  /// Exhaustive mode only: count each 3-cycle once instead of three times.
  bool dedup = false;
  Perturbation perturbation = Perturbation::kRotate3;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
};

/// Injects k redundancy symbols into random plaintexts of S_n, perturbs the
/// result and tallies how many inverse injections succeed. Bins 0..k.
Histogram pfi_penetration_experiment(const PenetrationSpec& spec);

/// Same tally for uniformly random members of S_{n+k}: probability of
/// stopping at exactly depth L, for L = 0..k.
std::vector<double> random_penetration_rates(std::size_t n, std::size_t k);

/// Probability that at least `depth` extractions succeed on a uniformly
/// random member of S_{n+k}: prod_{d<depth} 1/(n+k-d).
double random_depth_at_least(std::size_t n, std::size_t k, std::size_t depth);

/// Fraction of trials reaching at least bin `depth` (bins are depths).
double depth_at_least(const Histogram& h, std::size_t depth);

/// CSV with header `bin,count,rate,log60_rate`. Empty bins get
/// log60_rate = -inf. Byte-identical for equal histograms.
std::string render_csv(const Histogram& h);

struct SvgOptions {
  std::string title;
  std::string x_label = "bin";
  /// Plot log60(rate) as a line instead of count bars.
  bool log60 = false;
  /// Optional reference curve (rates per bin), drawn in red when log60.
  std::vector<double> reference;
};

std::string render_svg(const Histogram& h, const SvgOptions& options);

/// Write render_csv / render_svg output; throw std::runtime_error on I/O
/// failure.
void emit_csv(const Histogram& h, const std::string& path);
void emit_svg(const Histogram& h, const std::string& path,
              const SvgOptions& options);

}  // namespace ndotp
