// SPDX-License-Identifier: Apache-2.0

#include "ndotp/experiments.hpp"

#include <algorithm>
#include <thread>
#include <utility>

#include "ndotp/calculus.hpp"
#include "ndotp/errors.hpp"
#include "ndotp/foata.hpp"
#include "ndotp/permutation.hpp"

namespace ndotp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Splits [0, trials) into contiguous blocks, one per worker, and merges the
// per-worker histograms. `body(index, hist)` must only touch `hist`.
template <typename Body>
Histogram run_trials(std::size_t trials, std::size_t workers,
                     const Histogram& empty, Body body) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(trials, 1));
  std::vector<Histogram> partial(workers, empty);
  auto run_block = [&](std::size_t w) {
    const std::size_t begin = trials * w / workers;
    const std::size_t end = trials * (w + 1) / workers;
    for (std::size_t t = begin; t < end; ++t) body(t, partial[w]);
  };
  if (workers == 1) {
    run_block(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run_block, w);
    for (auto& t : pool) t.join();
  }
  Histogram out = empty;
  for (const auto& h : partial) out.merge(h);
  return out;
}

// abc -> bca on the values at three distinct positions.
void rotate3(std::vector<Symbol>& q, std::size_t i, std::size_t j,
             std::size_t l) {
  const Symbol a = q[i];
  q[i] = q[j];
  q[j] = q[l];
  q[l] = a;
}

std::size_t depth_after(std::vector<Symbol>& scratch, std::size_t k) {
  // Most perturbations break the cycle immediately; test that without copies.
  if (!is_single_cycle(scratch)) return 0;
  return penetration_depth(scratch, k);
}

}  // namespace

void Histogram::add(std::int64_t label, std::uint64_t n) {
  const std::int64_t bin = label - first_;
  if (bin < 0 || static_cast<std::size_t>(bin) >= counts_.size()) {
    throw RangeError("histogram label " + std::to_string(label) +
                     " out of range");
  }
  counts_[static_cast<std::size_t>(bin)] += n;
  total_ += n;
}

void Histogram::merge(const Histogram& other) {
  if (other.first_ != first_ || other.counts_.size() != counts_.size()) {
    throw RangeError("histogram layouts differ");
  }
  for (std::size_t b = 0; b < counts_.size(); ++b) counts_[b] += other.counts_[b];
  total_ += other.total_;
}

double Histogram::rate(std::size_t bin) const {
  return total_ == 0 ? 0.0
                     : static_cast<double>(counts_[bin]) /
                           static_cast<double>(total_);
}

double Histogram::mean() const {
  if (total_ == 0) return 0.0;
  long double sum = 0;
  for (std::size_t b = 0; b < counts_.size(); ++b) {
    sum += static_cast<long double>(label(b)) * counts_[b];
  }
  return static_cast<double>(sum / total_);
}

SeededEntropy trial_entropy(std::uint64_t seed, std::uint64_t index) {
  return SeededEntropy(splitmix64(splitmix64(seed) ^ index));
}

Histogram diff_metric_experiment(const DiffMetricSpec& spec) {
  if (spec.order < 3) throw RangeError("diff-metric needs order >= 3");
  const std::size_t n = spec.order;
  return run_trials(spec.samples, spec.workers,
                    Histogram(0, n), [&](std::size_t t, Histogram& h) {
    SeededEntropy rng = trial_entropy(spec.seed, t);
    const LehmerCode a_code = random_lehmer(n, rng);
    const LehmerCode d = differentiate(a_code);
    // Uniform over the n-1 legal values other than the current one.
    Symbol v = static_cast<Symbol>(uniform_below(n - 1, rng));
    if (v >= d[0]) ++v;
    const LehmerCode perturbed = integrate(d.with_digit(0, v));
    h.add(static_cast<std::int64_t>(cayley_distance(
        lehmer_to_oneline(a_code), lehmer_to_oneline(perturbed))));
  });
}

Histogram random_pair_baseline(const DiffMetricSpec& spec) {
  const std::size_t n = spec.order;
  return run_trials(spec.samples, spec.workers,
                    Histogram(0, n), [&](std::size_t t, Histogram& h) {
    SeededEntropy rng = trial_entropy(spec.seed, t);
    const Permutation a = random_permutation(n, rng);
    const Permutation b = random_permutation(n, rng);
    h.add(static_cast<std::int64_t>(cayley_distance(a, b)));
  });
}

Histogram pfi_penetration_experiment(const PenetrationSpec& spec) {
  if (spec.n < 1 || spec.k < 1) throw RangeError("pfi-depth needs n, k >= 1");
  const std::size_t m = spec.n + spec.k;
  if (m < 3) throw RangeError("pfi-depth needs at least three positions");
  const Histogram empty(0, spec.k + 1);
  return run_trials(spec.plaintexts, spec.workers, empty,
                    [&](std::size_t t, Histogram& h) {
    SeededEntropy rng = trial_entropy(spec.seed, t);
    const Permutation q = inject_k(random_permutation(spec.n, rng), spec.k);
    const std::vector<Symbol> base(q.values().begin(), q.values().end());
    std::vector<Symbol> scratch(base);

    auto perturb_and_tally = [&](std::size_t i, std::size_t j, std::size_t l) {
      std::copy(base.begin(), base.end(), scratch.begin());
      if (spec.perturbation == Perturbation::kRotate3) {
        rotate3(scratch, i, j, l);
      } else {
        std::swap(scratch[i], scratch[j]);
      }
      h.add(static_cast<std::int64_t>(depth_after(scratch, spec.k)));
    };

    if (spec.sampled_triples) {
      for (std::size_t s = 0; s < *spec.sampled_triples; ++s) {
        std::size_t i = uniform_below(m, rng);
        std::size_t j = uniform_below(m - 1, rng);
        if (j >= i) ++j;
        std::size_t l = uniform_below(m - 2, rng);
        // Skip over i and j in increasing order.
        const std::size_t lo = std::min(i, j);
        const std::size_t hi = std::max(i, j);
        if (l >= lo) ++l;
        if (l >= hi) ++l;
        perturb_and_tally(i, j, l);
      }
      return;
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i || (spec.dedup && j < i)) continue;
        for (std::size_t l = 0; l < m; ++l) {
          if (l == i || l == j || (spec.dedup && l < i)) continue;
          perturb_and_tally(i, j, l);
        }
      }
    }
  });
}

double random_depth_at_least(std::size_t n, std::size_t k, std::size_t depth) {
  double p = 1.0;
  for (std::size_t d = 0; d < depth; ++d) p /= static_cast<double>(n + k - d);
  return p;
}

std::vector<double> random_penetration_rates(std::size_t n, std::size_t k) {
  std::vector<double> rates(k + 1);
  for (std::size_t d = 0; d <= k; ++d) {
    const double reach = random_depth_at_least(n, k, d);
    rates[d] = d == k ? reach : reach - random_depth_at_least(n, k, d + 1);
  }
  return rates;
}

double depth_at_least(const Histogram& h, std::size_t depth) {
  if (h.total() == 0) return 0.0;
  std::uint64_t reached = 0;
  for (std::size_t b = depth; b < h.bins(); ++b) reached += h.count(b);
  return static_cast<double>(reached) / static_cast<double>(h.total());
}

}  // namespace ndotp
