// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "ndotp/permutation.hpp"

namespace ndotp {

/// Byte stream that is expected to be uniform. fill() throws EntropyExhausted
/// when the stream cannot supply the requested bytes.
class EntropySource {
 public:
  virtual ~EntropySource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

/// Operating-system randomness (getrandom / /dev/urandom).
class OsEntropy final : public EntropySource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

/// Deterministic stream for tests and reproducible experiments. Not for keys
/// that protect anything.
class SeededEntropy final : public EntropySource {
 public:
  explicit SeededEntropy(std::uint64_t seed) : engine_(seed) {}
  void fill(std::span<std::uint8_t> out) override;

 private:
  std::mt19937_64 engine_;
  std::uint64_t word_ = 0;
  int left_ = 0;
};

/// Serves a fixed buffer once, then reports exhaustion.
class BufferEntropy final : public EntropySource {
 public:
  explicit BufferEntropy(std::vector<std::uint8_t> bytes)
      : bytes_(std::move(bytes)) {}
  void fill(std::span<std::uint8_t> out) override;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t next_ = 0;
};

/// Uniform integer in [0, bound) by rejection on the smallest covering power
/// of two. bound == 1 consumes no entropy.
std::uint64_t uniform_below(std::uint64_t bound, EntropySource& source);

/// Lehmer codeword with each digit independent and uniform on its range.
LehmerCode random_lehmer(std::size_t order, EntropySource& source);

/// Uniform random permutation, drawn through its Lehmer code.
Permutation random_permutation(std::size_t order, EntropySource& source);

}  // namespace ndotp
