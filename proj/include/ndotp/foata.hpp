// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "ndotp/permutation.hpp"

namespace ndotp {

/// Pseudo Foata injection S_n -> S_{n+1}: reads the one-line sequence
/// p_0..p_{n-1} as the cycle (p_0, ..., p_{n-1}, n). Linear time.
Permutation inject(const Permutation& p);

/// Partial inverse of inject. Throws IntegrityFailure(kInjection, depth 0)
/// when q is not a single cycle.
Permutation extract(const Permutation& q);

Permutation inject_k(const Permutation& p, std::size_t k);

/// k-fold extract. On failure the IntegrityFailure carries the number of
/// successful extractions performed before the multi-cycle intermediate.
Permutation extract_k(const Permutation& q, std::size_t k);

/// Non-throwing form for bulk statistics: number of consecutive successful
/// extractions from the one-line sequence q, capped at k.
std::size_t penetration_depth(std::span<const Symbol> q, std::size_t k);

/// Fraction of S_{n+k} covered by the image of inject_k on S_n, exactly
/// n!/(n+k)!.
mpq_class forgery_bound(std::size_t n, std::size_t k);

/// 2^-bits as an exact rational.
mpq_class pow2_neg(unsigned bits);

}  // namespace ndotp
