// SPDX-License-Identifier: Apache-2.0

#include "ndotp/foata.hpp"

#include "ndotp/errors.hpp"
#include "ndotp/radix.hpp"

namespace ndotp {

namespace {

// Follows the cycle through the top symbol m-1 of q (order m). Returns false
// unless q is a single cycle; otherwise writes the m-1 symbols that follow
// the top symbol into `out`.
bool extract_into(std::span<const Symbol> q, std::vector<Symbol>& out) {
  const std::size_t m = q.size();
  if (m < 2) return false;
  const Symbol top = static_cast<Symbol>(m - 1);
  out.clear();
  Symbol j = q[top];
  while (j != top) {
    if (out.size() == m - 1) return false;
    out.push_back(j);
    j = q[j];
  }
  return out.size() == m - 1;
}

}  // namespace

Permutation inject(const Permutation& p) {
  const std::size_t n = p.order();
  if (n + 1 > kMaxOrder) throw RangeError("inject: order too large");
  std::vector<Symbol> q(n + 1);
  for (std::size_t m = 0; m + 1 < n; ++m) q[p[m]] = p[m + 1];
  q[p[n - 1]] = static_cast<Symbol>(n);
  q[n] = p[0];
  return make_trusted_permutation(std::move(q));
}

Permutation extract(const Permutation& q) {
  std::vector<Symbol> out;
  if (!extract_into(q.values(), out)) {
    throw IntegrityFailure(Defense::kInjection,
                           "redundancy check failed: not a single cycle", 0);
  }
  return make_trusted_permutation(std::move(out));
}

Permutation inject_k(const Permutation& p, std::size_t k) {
  Permutation q = p;
  for (std::size_t d = 0; d < k; ++d) q = inject(q);
  return q;
}

Permutation extract_k(const Permutation& q, std::size_t k) {
  if (k >= q.order()) throw RangeError("extract_k: depth exceeds order");
  std::vector<Symbol> current(q.values().begin(), q.values().end());
  std::vector<Symbol> next;
  for (std::size_t d = 0; d < k; ++d) {
    if (!extract_into(current, next)) {
      throw IntegrityFailure(
          Defense::kInjection,
          "redundancy check failed after " + std::to_string(d) +
              " of " + std::to_string(k) + " extractions",
          d);
    }
    current.swap(next);
  }
  return make_trusted_permutation(std::move(current));
}

std::size_t penetration_depth(std::span<const Symbol> q, std::size_t k) {
  std::vector<Symbol> current(q.begin(), q.end());
  std::vector<Symbol> next;
  next.reserve(q.size());
  for (std::size_t d = 0; d < k; ++d) {
    if (!extract_into(current, next)) return d;
    current.swap(next);
  }
  return k;
}

mpq_class forgery_bound(std::size_t n, std::size_t k) {
  mpq_class ratio(factorial(n), factorial(n + k));
  ratio.canonicalize();
  return ratio;
}

mpq_class pow2_neg(unsigned bits) {
  BigNat den = 1;
  den <<= bits;
  mpq_class r(BigNat(1), den);
  r.canonicalize();
  return r;
}

}  // namespace ndotp
