// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ndotp/permutation.hpp"

namespace ndotp {

/// First derivative of a Lehmer codeword.
///
/// Runs from the little end towards the big end. With n = order, the state
/// starts at p*_{n-2} = p_{n-2}; for i = 2..n-1
///   d_{n-i}     = p*_{n-i} - p_{n-i-1}       (mod i)
///   p*_{n-i-1}  = p_{n-i-1} - d_{n-i} - 1    (mod i+1)
/// and finally d_0 = p*_0, d_{n-1} = 0. The result is again a valid codeword.
LehmerCode differentiate(const LehmerCode& p);

/// Inverse of differentiate. Runs big end first, so a change of d_j can only
/// affect p_{j-1} and later digits.
LehmerCode integrate(const LehmerCode& d);

}  // namespace ndotp
