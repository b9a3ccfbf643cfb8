// SPDX-License-Identifier: Apache-2.0

#include "ndotp/radix.hpp"

#include <string>

#include "ndotp/errors.hpp"

namespace ndotp {

BigNat factorial(std::size_t n) {
  BigNat f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigNat falling_factorial(std::size_t n, std::size_t count) {
  if (count > n) throw RangeError("falling_factorial: count exceeds n");
  BigNat f = 1;
  for (std::size_t m = n - count + 1; m <= n; ++m) f *= static_cast<unsigned long>(m);
  return f;
}

std::size_t capacity_bits(std::size_t order) {
  if (order == 0) throw RangeError("capacity_bits: order must be positive");
  // floor(log2 x) is the bit length minus one.
  return mpz_sizeinbase(factorial(order).get_mpz_t(), 2) - 1;
}

LehmerCode int_to_factoradic(const BigNat& v, std::size_t order) {
  if (order == 0 || order > kMaxOrder) throw RangeError("factoradic order");
  if (v < 0) throw RangeError("factoradic of negative value");
  std::vector<BigNat> place(order);
  place[order - 1] = 1;
  for (std::size_t i = order - 1; i-- > 0;) {
    place[i] = place[i + 1] * static_cast<unsigned long>(order - 1 - i);
  }
  if (v >= place[0] * static_cast<unsigned long>(order)) {
    throw DecodeOverflow("value does not fit " + std::to_string(order) +
                         " factoradic digits");
  }
  std::vector<Symbol> digits(order);
  BigNat rest = v;
  BigNat q;
  for (std::size_t i = 0; i < order; ++i) {
    mpz_fdiv_qr(q.get_mpz_t(), rest.get_mpz_t(), rest.get_mpz_t(),
                place[i].get_mpz_t());
    digits[i] = static_cast<Symbol>(q.get_ui());
  }
  return make_trusted_lehmer(std::move(digits));
}

BigNat factoradic_to_int(const LehmerCode& w) {
  // Horner over the mixed radix: digit i is followed by radix (order-1-i).
  BigNat v = 0;
  const std::size_t n = w.order();
  for (std::size_t i = 0; i < n; ++i) {
    v *= static_cast<unsigned long>(n - i);
    v += static_cast<unsigned long>(w[i]);
  }
  return v;
}

BitMessage BitMessage::from_bytes(std::span<const std::uint8_t> bytes) {
  return from_bytes(bytes, bytes.size() * 8);
}

BitMessage BitMessage::from_bytes(std::span<const std::uint8_t> bytes,
                                  std::size_t nbits) {
  if (nbits > bytes.size() * 8) throw RangeError("not enough bytes for bits");
  std::vector<bool> bits(nbits);
  for (std::size_t i = 0; i < nbits; ++i) {
    bits[i] = (bytes[i / 8] >> (7 - i % 8)) & 1;
  }
  return BitMessage(std::move(bits));
}

BitMessage BitMessage::from_value(const BigNat& v, std::size_t nbits) {
  if (v < 0) throw RangeError("negative value");
  if (v != 0 && mpz_sizeinbase(v.get_mpz_t(), 2) > nbits) {
    throw DecodeOverflow("value does not fit the bit width");
  }
  std::vector<bool> bits(nbits);
  for (std::size_t i = 0; i < nbits; ++i) {
    bits[i] = mpz_tstbit(v.get_mpz_t(), nbits - 1 - i) != 0;
  }
  return BitMessage(std::move(bits));
}

BigNat BitMessage::value() const {
  BigNat v = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) mpz_setbit(v.get_mpz_t(), bits_.size() - 1 - i);
  }
  return v;
}

std::vector<std::uint8_t> BitMessage::to_bytes() const {
  std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  }
  return out;
}

LehmerCode bits_to_codeword(const BitMessage& m, std::size_t order) {
  if (m.size() > capacity_bits(order)) {
    throw CapacityExceeded(std::to_string(m.size()) + " bits exceed the " +
                           std::to_string(capacity_bits(order)) +
                           "-bit capacity of order " + std::to_string(order));
  }
  return int_to_factoradic(m.value(), order);
}

BitMessage codeword_to_bits(const LehmerCode& w, std::size_t nbits) {
  return BitMessage::from_value(factoradic_to_int(w), nbits);
}

std::vector<std::uint8_t> to_be_bytes(const BigNat& v, std::size_t width) {
  if (v < 0) throw RangeError("to_be_bytes: negative value");
  const std::size_t needed =
      v == 0 ? 0 : (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
  if (needed > width) throw DecodeOverflow("value wider than byte field");
  std::vector<std::uint8_t> out(width, 0);
  std::size_t count = 0;
  mpz_export(out.data() + (width - needed), &count, 1, 1, 1, 0,
             v.get_mpz_t());
  return out;
}

BigNat from_be_bytes(std::span<const std::uint8_t> bytes) {
  BigNat v = 0;
  if (!bytes.empty()) {
    mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  }
  return v;
}

std::size_t codeword_bytes(std::size_t order) {
  const BigNat max = factorial(order) - 1;
  if (max == 0) return 1;
  return (mpz_sizeinbase(max.get_mpz_t(), 2) + 7) / 8;
}

}  // namespace ndotp
