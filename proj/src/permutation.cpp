// SPDX-License-Identifier: Apache-2.0

#include "ndotp/permutation.hpp"

#include <algorithm>
#include <string>

#include "ndotp/errors.hpp"

namespace ndotp {

namespace {

void check_order(std::size_t n) {
  if (n == 0) throw RangeError("permutation order must be positive");
  if (n > kMaxOrder) {
    throw RangeError("order " + std::to_string(n) + " exceeds " +
                     std::to_string(kMaxOrder));
  }
}

bool is_bijection(std::span<const Symbol> seq) {
  std::vector<bool> seen(seq.size(), false);
  for (Symbol v : seq) {
    if (v >= seq.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

Permutation::Permutation(std::vector<Symbol> seq) : seq_(std::move(seq)) {
  check_order(seq_.size());
  if (!is_bijection(seq_)) throw RangeError("sequence is not a permutation");
}

Permutation Permutation::identity(std::size_t n) {
  check_order(n);
  std::vector<Symbol> seq(n);
  for (std::size_t j = 0; j < n; ++j) seq[j] = static_cast<Symbol>(j);
  return Permutation(std::move(seq), Trusted{});
}

Permutation make_trusted_permutation(std::vector<Symbol> seq) {
  return Permutation(std::move(seq), Permutation::Trusted{});
}

LehmerCode::LehmerCode(std::vector<Symbol> digits) : digits_(std::move(digits)) {
  check_order(digits_.size());
  const std::size_t n = digits_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (digits_[i] >= n - i) {
      throw RangeError("Lehmer digit " + std::to_string(i) + " = " +
                       std::to_string(digits_[i]) + " exceeds " +
                       std::to_string(n - i - 1));
    }
  }
}

LehmerCode LehmerCode::zeros(std::size_t n) {
  check_order(n);
  return LehmerCode(std::vector<Symbol>(n, 0), Trusted{});
}

LehmerCode LehmerCode::with_digit(std::size_t i, Symbol value) const {
  if (i >= order() || value >= radix(i)) {
    throw RangeError("illegal Lehmer digit replacement");
  }
  std::vector<Symbol> d = digits_;
  d[i] = value;
  return LehmerCode(std::move(d), Trusted{});
}

LehmerCode make_trusted_lehmer(std::vector<Symbol> digits) {
  return LehmerCode(std::move(digits), LehmerCode::Trusted{});
}

SingleCycle::SingleCycle(std::vector<Symbol> cycle) {
  check_order(cycle.size());
  if (!is_bijection(cycle)) throw RangeError("cycle repeats or skips symbols");
  auto zero = std::find(cycle.begin(), cycle.end(), Symbol{0});
  std::rotate(cycle.begin(), zero, cycle.end());
  cycle_ = std::move(cycle);
  pos_.resize(cycle_.size());
  for (std::size_t j = 0; j < cycle_.size(); ++j) pos_[cycle_[j]] = j;
}

Symbol SingleCycle::walk(Symbol symbol, std::int64_t steps) const {
  if (symbol >= order()) throw RangeError("symbol outside cycle");
  const auto n = static_cast<std::int64_t>(order());
  std::int64_t at = (static_cast<std::int64_t>(pos_[symbol]) + steps) % n;
  if (at < 0) at += n;
  return cycle_[static_cast<std::size_t>(at)];
}

bool same_cycle(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto start = std::find(b.begin(), b.end(), a[0]);
  if (start == b.end()) return false;
  std::size_t offset = static_cast<std::size_t>(start - b.begin());
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] != b[(j + offset) % b.size()]) return false;
  }
  return true;
}

LehmerCode oneline_to_lehmer(const Permutation& p) {
  const std::size_t n = p.order();
  std::vector<std::size_t> where(n);
  for (std::size_t j = 0; j < n; ++j) where[p[j]] = j;
  // Place symbols in ascending order, counting empty cells to the left.
  std::vector<bool> filled(n, false);
  std::vector<Symbol> digits(n);
  for (std::size_t s = 0; s < n; ++s) {
    Symbol skipped = 0;
    for (std::size_t j = 0; j < where[s]; ++j) {
      if (!filled[j]) ++skipped;
    }
    digits[s] = skipped;
    filled[where[s]] = true;
  }
  return make_trusted_lehmer(std::move(digits));
}

Permutation lehmer_to_oneline(const LehmerCode& w) {
  const std::size_t n = w.order();
  std::vector<Symbol> seq;
  seq.reserve(n);
  for (std::size_t s = n; s-- > 0;) {
    seq.insert(seq.begin() + w[s], static_cast<Symbol>(s));
  }
  return make_trusted_permutation(std::move(seq));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.order() != b.order()) throw OrderMismatch("compose: order mismatch");
  std::vector<Symbol> seq(a.order());
  for (std::size_t j = 0; j < seq.size(); ++j) seq[j] = a[b[j]];
  return make_trusted_permutation(std::move(seq));
}

Permutation invert(const Permutation& a) {
  std::vector<Symbol> seq(a.order());
  for (std::size_t j = 0; j < seq.size(); ++j) {
    seq[a[j]] = static_cast<Symbol>(j);
  }
  return make_trusted_permutation(std::move(seq));
}

std::size_t cycle_count(const Permutation& a) {
  const std::size_t n = a.order();
  std::vector<bool> visited(n, false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    ++cycles;
    for (std::size_t j = start; !visited[j]; j = a[j]) visited[j] = true;
  }
  return cycles;
}

bool is_single_cycle(std::span<const Symbol> one_line) {
  const std::size_t n = one_line.size();
  if (n == 0) return false;
  std::size_t length = 0;
  std::size_t j = 0;
  do {
    j = one_line[j];
    if (j >= n) return false;
    ++length;
  } while (j != 0 && length <= n);
  return j == 0 && length == n;
}

std::size_t cayley_distance(const Permutation& a, const Permutation& b) {
  if (a.order() != b.order()) {
    throw OrderMismatch("cayley_distance: order mismatch");
  }
  return a.order() - cycle_count(compose(a, invert(b)));
}

Permutation single_cycle_to_oneline(const SingleCycle& c) {
  const std::size_t n = c.order();
  std::vector<Symbol> seq(n);
  for (std::size_t j = 0; j < n; ++j) seq[c[j]] = c[j + 1];
  return make_trusted_permutation(std::move(seq));
}

SingleCycle oneline_to_single_cycle(const Permutation& p) {
  if (!is_single_cycle(p.values())) {
    throw NotSingleCycle("permutation has more than one cycle");
  }
  std::vector<Symbol> cycle;
  cycle.reserve(p.order());
  Symbol j = 0;
  do {
    cycle.push_back(j);
    j = p[j];
  } while (j != 0);
  return SingleCycle(std::move(cycle));
}

}  // namespace ndotp
