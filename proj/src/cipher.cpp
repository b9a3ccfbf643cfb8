// SPDX-License-Identifier: Apache-2.0

#include "ndotp/cipher.hpp"

#include <string>

#include "ndotp/errors.hpp"

namespace ndotp {

namespace {

Symbol riffle_at(std::size_t size, std::size_t j) {
  return static_cast<Symbol>(j % 2 == 0 ? j / 2 : (j - 1) / 2 + (size + 1) / 2);
}

void check_same_order(const LehmerCode& w, const KeyMaterial& key) {
  if (w.order() != key.order()) {
    throw OrderMismatch("codeword order " + std::to_string(w.order()) +
                        " != key order " + std::to_string(key.order()));
  }
}

}  // namespace

KeyMaterial KeyMaterial::from_components(const std::vector<Symbol>& components) {
  const std::size_t n = components.size() + 1;
  std::vector<Symbol> digits(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    if (components[i - 1] > i) {
      throw RangeError("key component k_" + std::to_string(i) + " = " +
                       std::to_string(components[i - 1]) + " exceeds " +
                       std::to_string(i));
    }
    digits[n - 1 - i] = components[i - 1];
  }
  return KeyMaterial(LehmerCode(std::move(digits)));
}

std::vector<Symbol> KeyMaterial::components() const {
  std::vector<Symbol> out;
  out.reserve(order() - 1);
  for (std::size_t i = 1; i < order(); ++i) out.push_back(component(i));
  return out;
}

Symbol elementary_encrypt(const SingleCycle& pi, Symbol k, Symbol p) {
  if (k >= pi.order() || p >= pi.order()) {
    throw RangeError("elementary_encrypt: argument outside [0, order)");
  }
  return pi.walk(p, k);
}

Symbol elementary_decrypt(const SingleCycle& pi, Symbol k, Symbol c) {
  if (k >= pi.order() || c >= pi.order()) {
    throw RangeError("elementary_decrypt: argument outside [0, order)");
  }
  return pi.walk(c, -static_cast<std::int64_t>(k));
}

Permutation inverse_riffle(std::size_t size) {
  std::vector<Symbol> seq(size);
  for (std::size_t j = 0; j < size; ++j) seq[j] = riffle_at(size, j);
  return Permutation(std::move(seq));
}

Permutation cut(std::size_t size, std::size_t distance) {
  std::vector<Symbol> seq(size);
  for (std::size_t j = 0; j < size; ++j) {
    seq[j] = static_cast<Symbol>((j + distance) % size);
  }
  return Permutation(std::move(seq));
}

Permutation psi(std::size_t size, std::size_t distance) {
  std::vector<Symbol> seq(size);
  for (std::size_t j = 0; j < size; ++j) {
    seq[j] = static_cast<Symbol>((riffle_at(size, j) + distance) % size);
  }
  return Permutation(std::move(seq));
}

GeneratorState GeneratorState::initial() {
  return GeneratorState{SingleCycle({0, 1}), 1};
}

GeneratorState next_generator(const GeneratorState& state, Symbol k_prev,
                              Symbol p_prev) {
  const std::size_t order = state.pi.order();
  if (k_prev >= order || p_prev >= order) {
    throw RangeError("next_generator: insertion or cut outside [0, " +
                     std::to_string(order) + ")");
  }
  std::vector<Symbol> grown(order + 1);
  for (std::size_t j = 0; j <= order; ++j) {
    if (j == k_prev) {
      grown[j] = static_cast<Symbol>(order);
      continue;
    }
    const Symbol old = state.pi[j < k_prev ? j : j - 1];
    grown[j] = static_cast<Symbol>((riffle_at(order, old) + p_prev) % order);
  }
  return GeneratorState{SingleCycle(std::move(grown)), state.step + 1};
}

LehmerCode ndotp_encrypt(const LehmerCode& plain, const KeyMaterial& key) {
  check_same_order(plain, key);
  const std::size_t n = plain.order();
  std::vector<Symbol> out(n, 0);
  if (n < 2) return make_trusted_lehmer(std::move(out));
  GeneratorState gen = GeneratorState::initial();
  for (std::size_t i = 1; i < n; ++i) {
    if (i > 1) {
      const std::size_t prev = n - i;  // Lehmer index of component i-1
      gen = next_generator(gen, key.component(i - 1), plain[prev]);
    }
    out[n - 1 - i] = elementary_encrypt(gen.pi, key.component(i), plain[n - 1 - i]);
  }
  return make_trusted_lehmer(std::move(out));
}

LehmerCode ndotp_decrypt(const LehmerCode& cipher, const KeyMaterial& key) {
  check_same_order(cipher, key);
  const std::size_t n = cipher.order();
  std::vector<Symbol> out(n, 0);
  if (n < 2) return make_trusted_lehmer(std::move(out));
  GeneratorState gen = GeneratorState::initial();
  for (std::size_t i = 1; i < n; ++i) {
    if (i > 1) gen = next_generator(gen, key.component(i - 1), out[n - i]);
    out[n - 1 - i] = elementary_decrypt(gen.pi, key.component(i), cipher[n - 1 - i]);
  }
  return make_trusted_lehmer(std::move(out));
}

}  // namespace ndotp
