// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ndotp/cipher.hpp"
#include "ndotp/entropy.hpp"
#include "ndotp/permutation.hpp"
#include "ndotp/precondition.hpp"
#include "ndotp/radix.hpp"

namespace ndotp {

// Encryption pipeline, in order:
//
//   payload bits (+ retry counter in the top bits)
//     -> factoradic codeword of order n_plain
//     -> one-line permutation of S_{n_plain}
//     -> k-fold redundancy injection into S_n, n = n_plain + k
//     -> Lehmer codeword of order n
//     -> first derivative
//     -> big-end preconditioning (skipped when no config exists for n)
//     -> one-time pad
//     -> big-endian integer body
//
// Preconditioning rejects codewords whose remainder digit equals its
// modulus. Encryption then bumps the retry counter and starts over; the
// receiver checks that every smaller counter would have been rejected, so
// each payload has exactly one valid ciphertext under a given key.

/// Number of top payload bits reserved for the retry counter.
inline constexpr std::size_t kRetryBits = 5;

struct PipelineParams {
  std::size_t plain_order = 0;  // order before redundancy
  std::size_t redundancy = 0;   // injections applied
  std::size_t order = 0;        // plain_order + redundancy
  std::optional<PreconditionConfig> cfg;
  std::size_t payload_bits = 0;  // capacity_bits(plain_order)

  /// Throws RangeError when the orders are out of range or the payload field
  /// cannot hold the retry counter.
  static PipelineParams make(std::size_t plain_order, std::size_t redundancy);

  /// Largest message accepted by encrypt_message.
  std::size_t message_capacity() const { return payload_bits - kRetryBits; }
};

enum class Stage {
  kPlainCode,       // factoradic codeword of the payload, order n_plain
  kInjected,        // permutation of S_n after injection, as its Lehmer code
  kDerivative,      // first derivative
  kPreconditioned,  // after preconditioning
  kCipher,          // one-time pad output
};

/// Every intermediate value of one encryption, for diagnostics and tests.
struct EncodeTrace {
  std::size_t retry = 0;
  LehmerCode plain_code;
  Permutation plain_perm;
  Permutation injected;
  LehmerCode derivative;
  LehmerCode preconditioned;
  LehmerCode cipher;

  /// The state after `stage`, permutations given by their Lehmer code.
  LehmerCode at(Stage stage) const;
};

EncodeTrace encode_trace(const BitMessage& m, const KeyMaterial& key,
                         const PipelineParams& params);

/// Runs the decryption pipeline starting from the state after `stage`.
/// Throws IntegrityFailure naming the defense that rejected the input.
BitMessage decode_from(Stage stage, const LehmerCode& state,
                       const KeyMaterial& key, const PipelineParams& params,
                       std::size_t message_bits);

/// Serialized ciphertext. Header layout (little-endian):
///   "NDC1" | version u8 | plain_order u16 | redundancy u16 |
///   message_bits u32 | body
/// The body is the ciphertext codeword's factoradic value as big-endian
/// bytes, zero-padded to codeword_bytes(plain_order + redundancy).
struct CipherEnvelope {
  static constexpr std::array<std::uint8_t, 4> kMagic{'N', 'D', 'C', '1'};
  static constexpr std::uint8_t kVersion = 1;
  static constexpr std::size_t kHeaderBytes = 13;

  std::uint16_t plain_order = 0;
  std::uint16_t redundancy = 0;
  std::uint32_t message_bits = 0;
  std::vector<std::uint8_t> body;

  std::vector<std::uint8_t> serialize() const;
  /// Throws MalformedEnvelope for bad magic, version, lengths or orders.
  static CipherEnvelope parse(std::span<const std::uint8_t> bytes);

  friend bool operator==(const CipherEnvelope&, const CipherEnvelope&) = default;
};

CipherEnvelope encrypt_message(const BitMessage& m, const KeyMaterial& key,
                               const PipelineParams& params);

/// Throws MalformedEnvelope for envelopes that do not parse against the key
/// and IntegrityFailure for everything that looks like tampering.
BitMessage decrypt_message(const CipherEnvelope& env, const KeyMaterial& key);

/// Key file layout (little-endian):
///   "NDK1" | version u8 | order u16 | k_1 .. k_{order-1} as u16
std::vector<std::uint8_t> serialize_key(const KeyMaterial& key);
/// Throws MalformedKeyFile, including for out-of-range components.
KeyMaterial parse_key(std::span<const std::uint8_t> bytes);

/// Uniform key of the given order drawn from `source`.
KeyMaterial keygen(std::size_t order, EntropySource& source);

}  // namespace ndotp
