// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ndotp/permutation.hpp"
#include "ndotp/radix.hpp"

namespace ndotp {

/// Parameters of the big-end pseudo-Hadamard preconditioning for one order.
///
/// The first `big_end` Lehmer digits form a mixed-radix number W in [0, Z)
/// with Z = order!/(order-big_end)!. Z factors into pairwise coprime prime
/// powers m_j; the digit at position order-1-m_j holds the residue of a
/// second number R modulo m_j. The transform mixes W and R modulo Z.
struct PreconditionConfig {
  std::size_t order = 0;
  std::size_t big_end = 0;
  std::vector<std::uint64_t> moduli;     // prime powers, ascending
  std::vector<std::uint64_t> primes;     // matching bases
  std::vector<std::size_t> positions;    // order - 1 - moduli[j]
  BigNat modulus;                        // Z
  std::vector<BigNat> crt_coeffs;        // b_j * (b_j^-1 mod m_j) mod Z

  /// Every index the transform may rewrite, ascending.
  std::vector<std::size_t> touched_indices() const;
};

/// Prime factorisation of order!/(order-big_end)! as (prime, exponent)
/// pairs, ascending by prime.
std::vector<std::pair<std::uint64_t, unsigned>> falling_factorial_factors(
    std::size_t order, std::size_t big_end);

/// Config for a fixed (order, big_end), or nullopt when some prime power is
/// not below order-big_end+1 or a remainder position would fall inside the
/// big-end block.
std::optional<PreconditionConfig> make_config(std::size_t order,
                                              std::size_t big_end);

/// Config with the largest valid big_end, or nullopt if even big_end = 1 is
/// invalid.
std::optional<PreconditionConfig> search_config(std::size_t order);

/// x^-1 mod m by the extended Euclidean algorithm; requires gcd(x, m) = 1.
std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t m);

/// CRT coefficients b_j * b'_j mod Z for pairwise coprime moduli.
std::vector<BigNat> crt_coefficients(const std::vector<std::uint64_t>& moduli);

/// The unique R < prod(moduli) with R mod moduli[j] = residues[j].
BigNat crt_combine(const std::vector<std::uint64_t>& residues,
                   const std::vector<std::uint64_t>& moduli,
                   const std::vector<BigNat>& coeffs);

/// W: the first big_end digits read as a mixed-radix number in [0, Z).
BigNat pack_big_end(const LehmerCode& w, const PreconditionConfig& cfg);
/// Writes W back into digits [0, big_end); other digits are kept.
LehmerCode unpack_big_end(const BigNat& packed, const PreconditionConfig& cfg,
                          const LehmerCode& w);

/// R from the digits at the remainder positions. Throws RemainderOutOfRange
/// if one of them equals its modulus.
BigNat remainders_to_R(const LehmerCode& w, const PreconditionConfig& cfg);
/// Writes R mod m_j to each remainder position; other digits are kept.
LehmerCode R_to_remainders(const BigNat& r, const PreconditionConfig& cfg,
                           const LehmerCode& w);

struct PhtPair {
  BigNat w;
  BigNat r;
};

/// R* = W + R, W* = W + R* (mod Z). Returns {W*, R*}.
PhtPair pht_forward(const BigNat& w, const BigNat& r, const BigNat& z);
/// W = W* - R*, R = R* - W (mod Z). Returns {W, R}.
PhtPair pht_inverse(const BigNat& w_star, const BigNat& r_star,
                    const BigNat& z);

LehmerCode precondition(const LehmerCode& w, const PreconditionConfig& cfg);
/// Throws RemainderOutOfRange for codewords precondition cannot produce.
LehmerCode deprecondition(const LehmerCode& w, const PreconditionConfig& cfg);

}  // namespace ndotp
