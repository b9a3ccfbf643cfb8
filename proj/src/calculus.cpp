// SPDX-License-Identifier: Apache-2.0

#include "ndotp/calculus.hpp"

#include <cstdint>
#include <vector>

namespace ndotp {

namespace {

// Canonical nonnegative residue; -1 mod 3 is 2.
Symbol mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return static_cast<Symbol>(r < 0 ? r + m : r);
}

}  // namespace

LehmerCode differentiate(const LehmerCode& p) {
  const std::size_t n = p.order();
  std::vector<Symbol> d(n, 0);
  if (n == 1) return make_trusted_lehmer(std::move(d));
  std::int64_t state = p[n - 2];
  for (std::size_t i = 2; i <= n - 1; ++i) {
    const std::int64_t next = p[n - i - 1];
    const auto mi = static_cast<std::int64_t>(i);
    d[n - i] = mod(state - next, mi);
    state = mod(next - d[n - i] - 1, mi + 1);
  }
  d[0] = static_cast<Symbol>(state);
  return make_trusted_lehmer(std::move(d));
}

LehmerCode integrate(const LehmerCode& d) {
  const std::size_t n = d.order();
  std::vector<Symbol> p(n, 0);
  if (n == 1) return make_trusted_lehmer(std::move(p));
  std::int64_t state = d[0];
  for (std::size_t i = 0; i + 3 <= n; ++i) {
    const auto radix = static_cast<std::int64_t>(n - i);
    p[i] = mod(state + d[i + 1] + 1, radix);
    state = mod(std::int64_t{p[i]} + d[i + 1], radix - 1);
  }
  p[n - 2] = static_cast<Symbol>(state);
  return make_trusted_lehmer(std::move(p));
}

}  // namespace ndotp
