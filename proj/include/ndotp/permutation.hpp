// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ndotp {

using Symbol = std::uint32_t;

// Largest supported order; digits and symbols must fit the 16-bit fields of
// the key file format.
inline constexpr std::size_t kMaxOrder = 65535;

/// A member of S_n in one-line notation over the symbols [0, n).
class Permutation {
 public:
  /// Validates that `seq` is a bijection of [0, seq.size()).
  explicit Permutation(std::vector<Symbol> seq);

  static Permutation identity(std::size_t n);

  std::size_t order() const noexcept { return seq_.size(); }
  Symbol operator[](std::size_t j) const { return seq_[j]; }
  std::span<const Symbol> values() const noexcept { return seq_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(std::vector<Symbol> seq, Trusted) : seq_(std::move(seq)) {}
  friend Permutation make_trusted_permutation(std::vector<Symbol>);

  std::vector<Symbol> seq_;
};

/// Lehmer codeword: digit i is the number of cells skipped when placing
/// symbol i, so 0 <= digit[i] < n - i and the last digit is always 0.
/// Read big end first it is also a factoradic numeral.
class LehmerCode {
 public:
  explicit LehmerCode(std::vector<Symbol> digits);

  static LehmerCode zeros(std::size_t n);

  std::size_t order() const noexcept { return digits_.size(); }
  Symbol operator[](std::size_t i) const { return digits_[i]; }
  std::span<const Symbol> digits() const noexcept { return digits_; }

  /// Exclusive upper bound of digit i.
  std::size_t radix(std::size_t i) const noexcept { return order() - i; }

  /// Returns a copy with digit i replaced; throws RangeError when illegal.
  LehmerCode with_digit(std::size_t i, Symbol value) const;

  friend bool operator==(const LehmerCode&, const LehmerCode&) = default;

 private:
  struct Trusted {};
  LehmerCode(std::vector<Symbol> digits, Trusted)
      : digits_(std::move(digits)) {}
  friend LehmerCode make_trusted_lehmer(std::vector<Symbol>);

  std::vector<Symbol> digits_;
};

/// A permutation consisting of one cycle, stored in cyclic notation rotated so
/// that symbol 0 comes first, so cycle positions are counted from symbol 0.
class SingleCycle {
 public:
  /// Accepts any rotation; stores the canonical one.
  explicit SingleCycle(std::vector<Symbol> cycle);

  std::size_t order() const noexcept { return cycle_.size(); }
  Symbol operator[](std::size_t j) const { return cycle_[j % cycle_.size()]; }
  std::span<const Symbol> cycle() const noexcept { return cycle_; }

  /// Position of `symbol` in the stored cycle.
  std::size_t position(Symbol symbol) const { return pos_[symbol]; }

  /// Symbol found `steps` places along the cycle from `symbol`; this is the
  /// one-line power pi^steps[symbol]. Negative steps walk backwards.
  Symbol walk(Symbol symbol, std::int64_t steps) const;

  friend bool operator==(const SingleCycle& a, const SingleCycle& b) {
    return a.cycle_ == b.cycle_;
  }

 private:
  std::vector<Symbol> cycle_;
  std::vector<std::size_t> pos_;
};

/// Rotation-insensitive comparison of two cyclic sequences given as raw
/// vectors (neither needs to be canonical).
bool same_cycle(std::span<const Symbol> a, std::span<const Symbol> b);

LehmerCode oneline_to_lehmer(const Permutation& p);

/// Right-to-left insertion: starting from the largest symbol, each symbol s is
/// inserted at offset digit[s] of the sequence built so far.
Permutation lehmer_to_oneline(const LehmerCode& w);

/// (a o b)[j] = a[b[j]].
Permutation compose(const Permutation& a, const Permutation& b);
Permutation invert(const Permutation& a);

/// Number of disjoint cycles, fixed points included.
std::size_t cycle_count(const Permutation& a);
bool is_single_cycle(std::span<const Symbol> one_line);

/// Minimum number of transpositions taking b to a.
std::size_t cayley_distance(const Permutation& a, const Permutation& b);

Permutation single_cycle_to_oneline(const SingleCycle& c);
/// Throws NotSingleCycle unless cycle_count(p) == 1.
SingleCycle oneline_to_single_cycle(const Permutation& p);

// Skip validation; callers guarantee the invariants. Internal use only.
Permutation make_trusted_permutation(std::vector<Symbol> seq);
LehmerCode make_trusted_lehmer(std::vector<Symbol> digits);

}  // namespace ndotp
