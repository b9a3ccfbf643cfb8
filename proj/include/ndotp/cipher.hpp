// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "ndotp/permutation.hpp"

namespace ndotp {

/// One-time key for a codeword of order n: components k_1..k_{n-1} with
/// 0 <= k_i <= i. Component k_i sits at Lehmer index n-1-i, so a key is
/// exactly a Lehmer codeword of the same order.
class KeyMaterial {
 public:
  /// Components in the order k_1, k_2, ..., k_{n-1}.
  static KeyMaterial from_components(const std::vector<Symbol>& components);
  explicit KeyMaterial(LehmerCode code) : code_(std::move(code)) {}

  std::size_t order() const noexcept { return code_.order(); }
  /// k_i for 1 <= i < order().
  Symbol component(std::size_t i) const { return code_[order() - 1 - i]; }
  std::vector<Symbol> components() const;
  const LehmerCode& code() const noexcept { return code_; }

  friend bool operator==(const KeyMaterial&, const KeyMaterial&) = default;

 private:
  LehmerCode code_;
};

/// c = pi^k[p]: the symbol k steps along the cycle from p.
Symbol elementary_encrypt(const SingleCycle& pi, Symbol k, Symbol p);
Symbol elementary_decrypt(const SingleCycle& pi, Symbol k, Symbol c);

/// Inverse riffle of a deck of `size` cards: even j go to j/2, odd j to
/// (j-1)/2 + ceil(size/2).
Permutation inverse_riffle(std::size_t size);

/// cut[j] = (j + distance) mod size.
Permutation cut(std::size_t size, std::size_t distance);

/// Inverse riffle followed by the cut: psi[j] = (riffle[j] + distance) mod
/// size, i.e. compose(cut(size, distance), inverse_riffle(size)).
Permutation psi(std::size_t size, std::size_t distance);

/// Cyclic generator used at step i; pi has order i + 1.
struct GeneratorState {
  SingleCycle pi;
  std::size_t step;

  /// Step 1: the only cyclic permutation of two symbols.
  static GeneratorState initial();
};

/// Relabels every symbol of the current cycle through psi(order, p_prev) and
/// inserts the new symbol `order` at cycle position k_prev. Both arguments
/// must lie in [0, order).
GeneratorState next_generator(const GeneratorState& state, Symbol k_prev,
                              Symbol p_prev);

/// Enciphers the codeword little end first: component i (Lehmer index
/// n-1-i) goes through pi_i^{k_i}, and pi_{i+1} is derived from pi_i, k_i
/// and the plaintext component p_i. The last digit passes through as 0.
LehmerCode ndotp_encrypt(const LehmerCode& plain, const KeyMaterial& key);
LehmerCode ndotp_decrypt(const LehmerCode& cipher, const KeyMaterial& key);

}  // namespace ndotp
