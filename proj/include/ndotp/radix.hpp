// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ndotp/permutation.hpp"

namespace ndotp {

/// Arbitrary-precision nonnegative integer.
using BigNat = mpz_class;

BigNat factorial(std::size_t n);

/// n * (n-1) * ... * (n-count+1).
BigNat falling_factorial(std::size_t n, std::size_t count);

/// Largest n with 2^n <= order!.
std::size_t capacity_bits(std::size_t order);

/// Factoradic digits of v, big end first (digit i has place value
/// (order-1-i)!). Throws DecodeOverflow when v >= order!.
LehmerCode int_to_factoradic(const BigNat& v, std::size_t order);
BigNat factoradic_to_int(const LehmerCode& w);

/// Bit string; bit 0 is the most significant in the numeric reading.
class BitMessage {
 public:
  BitMessage() = default;
  explicit BitMessage(std::vector<bool> bits) : bits_(std::move(bits)) {}

  /// The first `nbits` bits of `bytes`, most significant bit of each byte
  /// first. nbits defaults to all of them.
  static BitMessage from_bytes(std::span<const std::uint8_t> bytes);
  static BitMessage from_bytes(std::span<const std::uint8_t> bytes,
                               std::size_t nbits);
  /// Fixed-width big-endian rendering of v; DecodeOverflow if v >= 2^nbits.
  static BitMessage from_value(const BigNat& v, std::size_t nbits);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<bool>& bits() const noexcept { return bits_; }

  BigNat value() const;
  /// Packs bits MSB first; a partial last byte is zero-filled at the bottom.
  std::vector<std::uint8_t> to_bytes() const;

  friend bool operator==(const BitMessage&, const BitMessage&) = default;

 private:
  std::vector<bool> bits_;
};

/// Zero-extends m at the most significant end and returns the factoradic
/// digits of its value. Throws CapacityExceeded if m is longer than
/// capacity_bits(order).
LehmerCode bits_to_codeword(const BitMessage& m, std::size_t order);

/// Inverse of bits_to_codeword for an n-bit message; DecodeOverflow when the
/// codeword's value does not fit n bits.
BitMessage codeword_to_bits(const LehmerCode& w, std::size_t nbits);

/// Big-endian bytes of v, left-padded to `width` bytes. Throws DecodeOverflow
/// if v needs more than `width` bytes.
std::vector<std::uint8_t> to_be_bytes(const BigNat& v, std::size_t width);
BigNat from_be_bytes(std::span<const std::uint8_t> bytes);

/// Bytes needed to hold any value below order!.
std::size_t codeword_bytes(std::size_t order);

}  // namespace ndotp
