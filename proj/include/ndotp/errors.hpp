// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ndotp {

// Argument outside the legal domain of an operation (bad digit, bad symbol,
// bad order). Always a caller bug, never a property of received data.
class RangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OrderMismatch : public RangeError {
 public:
  using RangeError::RangeError;
};

class EntropyExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapacityExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A decoded integer did not fit the requested bit width.
class DecodeOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Input is a single cycle only where one was required.
class NotSingleCycle : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A digit at a remainder position equals its modulus, so the codeword has no
// preconditioned image. Encryption retries with another retry counter value.
class RemainderOutOfRange : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class MalformedEnvelope : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedKeyFile : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Which check in the decryption pipeline rejected a ciphertext.
enum class Defense {
  kBodyRange,          // body value >= nu!
  kPreconditionRange,  // remainder digit equals its modulus
  kInjection,          // inverse redundancy injection hit a multi-cycle
  kPayloadRange,       // decoded value exceeds the declared payload width
  kRetryCanonical,     // a smaller retry counter would have been used
};

const char* to_string(Defense d);

class IntegrityFailure : public std::runtime_error {
 public:
  IntegrityFailure(Defense defense, const std::string& what,
                   std::size_t depth = 0)
      : std::runtime_error(what), defense_(defense), depth_(depth) {}

  Defense defense() const noexcept { return defense_; }
  // Successful inverse injections before the failure (kInjection only).
  std::size_t depth() const noexcept { return depth_; }

 private:
  Defense defense_;
  std::size_t depth_;
};

}  // namespace ndotp
