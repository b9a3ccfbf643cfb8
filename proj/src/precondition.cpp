// SPDX-License-Identifier: Apache-2.0

#include "ndotp/precondition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <string>

#include "ndotp/errors.hpp"

namespace ndotp {

namespace {

void check_order(const LehmerCode& w, const PreconditionConfig& cfg) {
  if (w.order() != cfg.order) {
    throw OrderMismatch("codeword order " + std::to_string(w.order()) +
                        " != preconditioner order " + std::to_string(cfg.order));
  }
}

BigNat canonical_mod(BigNat x, const BigNat& z) {
  x %= z;
  if (x < 0) x += z;
  return x;
}

void check_below(const BigNat& x, const BigNat& z, const char* what) {
  if (x < 0 || x >= z) throw RangeError(std::string(what) + " outside [0, Z)");
}

}  // namespace

std::vector<std::size_t> PreconditionConfig::touched_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < big_end; ++i) out.push_back(i);
  out.insert(out.end(), positions.begin(), positions.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> falling_factorial_factors(
    std::size_t order, std::size_t big_end) {
  if (big_end > order) throw RangeError("big_end exceeds order");
  std::map<std::uint64_t, unsigned> exponents;
  for (std::size_t term = order - big_end + 1; term <= order; ++term) {
    std::uint64_t rest = term;
    for (std::uint64_t d = 2; d * d <= rest; ++d) {
      while (rest % d == 0) {
        ++exponents[d];
        rest /= d;
      }
    }
    if (rest > 1) ++exponents[rest];
  }
  return {exponents.begin(), exponents.end()};
}

std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = static_cast<std::int64_t>(x % m);
  std::int64_t r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) throw RangeError("inverse_mod: arguments not coprime");
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

std::vector<BigNat> crt_coefficients(const std::vector<std::uint64_t>& moduli) {
  BigNat z = 1;
  for (auto m : moduli) z *= static_cast<unsigned long>(m);
  std::vector<BigNat> coeffs;
  coeffs.reserve(moduli.size());
  for (auto m : moduli) {
    const BigNat b = z / static_cast<unsigned long>(m);
    const BigNat b_mod = b % static_cast<unsigned long>(m);
    const std::uint64_t b_inv = inverse_mod(b_mod.get_ui(), m);
    coeffs.push_back(canonical_mod(b * static_cast<unsigned long>(b_inv), z));
  }
  return coeffs;
}

BigNat crt_combine(const std::vector<std::uint64_t>& residues,
                   const std::vector<std::uint64_t>& moduli,
                   const std::vector<BigNat>& coeffs) {
  if (residues.size() != moduli.size() || coeffs.size() != moduli.size()) {
    throw RangeError("crt_combine: length mismatch");
  }
  BigNat z = 1;
  for (auto m : moduli) z *= static_cast<unsigned long>(m);
  BigNat r = 0;
  for (std::size_t j = 0; j < moduli.size(); ++j) {
    if (residues[j] >= moduli[j]) {
      throw RemainderOutOfRange("residue " + std::to_string(residues[j]) +
                                " not below modulus " + std::to_string(moduli[j]));
    }
    r += coeffs[j] * static_cast<unsigned long>(residues[j]);
  }
  return canonical_mod(r, z);
}

std::optional<PreconditionConfig> make_config(std::size_t order,
                                              std::size_t big_end) {
  if (big_end == 0 || big_end > order || order > kMaxOrder) return std::nullopt;
  PreconditionConfig cfg;
  cfg.order = order;
  cfg.big_end = big_end;
  const std::uint64_t bound = order - big_end + 1;
  for (auto [prime, exp] : falling_factorial_factors(order, big_end)) {
    std::uint64_t power = 1;
    for (unsigned e = 0; e < exp; ++e) power *= prime;
    if (power >= bound) return std::nullopt;
    cfg.moduli.push_back(power);
    cfg.primes.push_back(prime);
  }
  // Ascending by modulus; the prime order is not the power order.
  std::vector<std::size_t> idx(cfg.moduli.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return cfg.moduli[a] < cfg.moduli[b]; });
  std::vector<std::uint64_t> moduli;
  std::vector<std::uint64_t> primes;
  for (auto j : idx) {
    moduli.push_back(cfg.moduli[j]);
    primes.push_back(cfg.primes[j]);
  }
  cfg.moduli = std::move(moduli);
  cfg.primes = std::move(primes);
  for (auto m : cfg.moduli) {
    const std::size_t g = order - 1 - static_cast<std::size_t>(m);
    if (g < big_end) return std::nullopt;
    cfg.positions.push_back(g);
  }
  cfg.modulus = falling_factorial(order, big_end);
  cfg.crt_coeffs = crt_coefficients(cfg.moduli);
  return cfg;
}

std::optional<PreconditionConfig> search_config(std::size_t order) {
  // Validity is monotone in big_end: Z(s-1) divides Z(s) and the bound grows
  // as s shrinks, so the first failure ends the search.
  std::optional<PreconditionConfig> best;
  for (std::size_t s = 1; s <= order; ++s) {
    auto cfg = make_config(order, s);
    if (!cfg) break;
    best = std::move(cfg);
  }
  return best;
}

BigNat pack_big_end(const LehmerCode& w, const PreconditionConfig& cfg) {
  check_order(w, cfg);
  BigNat packed = 0;
  for (std::size_t i = 0; i < cfg.big_end; ++i) {
    packed *= static_cast<unsigned long>(w.radix(i));
    packed += static_cast<unsigned long>(w[i]);
  }
  return packed;
}

LehmerCode unpack_big_end(const BigNat& packed, const PreconditionConfig& cfg,
                          const LehmerCode& w) {
  check_order(w, cfg);
  check_below(packed, cfg.modulus, "W");
  std::vector<Symbol> digits(w.digits().begin(), w.digits().end());
  BigNat rest = packed;
  BigNat digit;
  for (std::size_t i = cfg.big_end; i-- > 0;) {
    const auto radix = static_cast<unsigned long>(w.radix(i));
    digit = rest % radix;
    rest /= radix;
    digits[i] = static_cast<Symbol>(digit.get_ui());
  }
  return make_trusted_lehmer(std::move(digits));
}

BigNat remainders_to_R(const LehmerCode& w, const PreconditionConfig& cfg) {
  check_order(w, cfg);
  std::vector<std::uint64_t> residues;
  residues.reserve(cfg.positions.size());
  for (auto g : cfg.positions) residues.push_back(w[g]);
  return crt_combine(residues, cfg.moduli, cfg.crt_coeffs);
}

LehmerCode R_to_remainders(const BigNat& r, const PreconditionConfig& cfg,
                           const LehmerCode& w) {
  check_order(w, cfg);
  check_below(r, cfg.modulus, "R");
  std::vector<Symbol> digits(w.digits().begin(), w.digits().end());
  for (std::size_t j = 0; j < cfg.moduli.size(); ++j) {
    const BigNat residue = r % static_cast<unsigned long>(cfg.moduli[j]);
    digits[cfg.positions[j]] = static_cast<Symbol>(residue.get_ui());
  }
  return make_trusted_lehmer(std::move(digits));
}

PhtPair pht_forward(const BigNat& w, const BigNat& r, const BigNat& z) {
  check_below(w, z, "W");
  check_below(r, z, "R");
  BigNat r_star = canonical_mod(w + r, z);
  BigNat w_star = canonical_mod(w + r_star, z);
  return {std::move(w_star), std::move(r_star)};
}

PhtPair pht_inverse(const BigNat& w_star, const BigNat& r_star,
                    const BigNat& z) {
  check_below(w_star, z, "W*");
  check_below(r_star, z, "R*");
  BigNat w = canonical_mod(w_star - r_star, z);
  BigNat r = canonical_mod(r_star - w, z);
  return {std::move(w), std::move(r)};
}

LehmerCode precondition(const LehmerCode& w, const PreconditionConfig& cfg) {
  const BigNat packed = pack_big_end(w, cfg);
  const BigNat r = remainders_to_R(w, cfg);
  const auto mixed = pht_forward(packed, r, cfg.modulus);
  return R_to_remainders(mixed.r, cfg, unpack_big_end(mixed.w, cfg, w));
}

LehmerCode deprecondition(const LehmerCode& w, const PreconditionConfig& cfg) {
  const BigNat packed = pack_big_end(w, cfg);
  const BigNat r = remainders_to_R(w, cfg);
  const auto plain = pht_inverse(packed, r, cfg.modulus);
  return R_to_remainders(plain.r, cfg, unpack_big_end(plain.w, cfg, w));
}

}  // namespace ndotp
