// SPDX-License-Identifier: Apache-2.0

#include "ndotp/entropy.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>

#include "ndotp/errors.hpp"

namespace ndotp {

void OsEntropy::fill(std::span<std::uint8_t> out) {
  std::ifstream urandom("/dev/urandom", std::ios::binary);
  if (!urandom) throw EntropyExhausted("cannot open /dev/urandom");
  urandom.read(reinterpret_cast<char*>(out.data()),
               static_cast<std::streamsize>(out.size()));
  if (urandom.gcount() != static_cast<std::streamsize>(out.size())) {
    throw EntropyExhausted("short read from /dev/urandom");
  }
}

void SeededEntropy::fill(std::span<std::uint8_t> out) {
  for (auto& byte : out) {
    if (left_ == 0) {
      word_ = engine_();
      left_ = 8;
    }
    byte = static_cast<std::uint8_t>(word_ >> 56);
    word_ <<= 8;
    --left_;
  }
}

void BufferEntropy::fill(std::span<std::uint8_t> out) {
  if (bytes_.size() - next_ < out.size()) {
    throw EntropyExhausted("entropy buffer exhausted");
  }
  std::copy_n(bytes_.begin() + static_cast<std::ptrdiff_t>(next_), out.size(),
              out.begin());
  next_ += out.size();
}

std::uint64_t uniform_below(std::uint64_t bound, EntropySource& source) {
  if (bound == 0) throw RangeError("uniform_below: empty range");
  if (bound == 1) return 0;
  const int bits = std::bit_width(bound - 1);
  const std::size_t nbytes = static_cast<std::size_t>((bits + 7) / 8);
  const std::uint64_t mask =
      bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  std::uint8_t buf[8];
  for (;;) {
    source.fill(std::span(buf, nbytes));
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < nbytes; ++i) v = (v << 8) | buf[i];
    v &= mask;
    if (v < bound) return v;
  }
}

LehmerCode random_lehmer(std::size_t order, EntropySource& source) {
  if (order == 0 || order > kMaxOrder) throw RangeError("random_lehmer: order");
  std::vector<Symbol> digits(order);
  for (std::size_t i = 0; i < order; ++i) {
    digits[i] = static_cast<Symbol>(uniform_below(order - i, source));
  }
  return make_trusted_lehmer(std::move(digits));
}

Permutation random_permutation(std::size_t order, EntropySource& source) {
  return lehmer_to_oneline(random_lehmer(order, source));
}

}  // namespace ndotp
