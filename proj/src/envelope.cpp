// SPDX-License-Identifier: Apache-2.0

#include "ndotp/envelope.hpp"

#include <algorithm>
#include <string>

#include "ndotp/calculus.hpp"
#include "ndotp/errors.hpp"
#include "ndotp/foata.hpp"

namespace ndotp {

namespace {

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8) {
    out.push_back(static_cast<std::uint8_t>((v >> shift) & 0xff));
  }
}

std::uint16_t get_u16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t at) {
  std::uint32_t v = 0;
  for (std::size_t i = 4; i-- > 0;) v = (v << 8) | b[at + i];
  return v;
}

BigNat combine_payload(std::size_t retry, const BigNat& message,
                       const PipelineParams& params) {
  BigNat v = retry;
  v <<= params.message_capacity();
  return v + message;
}

struct Forward {
  LehmerCode plain_code;
  Permutation plain_perm;
  Permutation injected;
  LehmerCode derivative;
  LehmerCode preconditioned;
};

// Everything up to and including preconditioning. Throws RemainderOutOfRange
// when this payload value has no preconditioned image.
Forward forward_to_preconditioned(const BigNat& value,
                                  const PipelineParams& params) {
  LehmerCode plain_code = int_to_factoradic(value, params.plain_order);
  Permutation plain_perm = lehmer_to_oneline(plain_code);
  Permutation injected = inject_k(plain_perm, params.redundancy);
  LehmerCode derivative = differentiate(oneline_to_lehmer(injected));
  LehmerCode pre =
      params.cfg ? precondition(derivative, *params.cfg) : derivative;
  return {std::move(plain_code), std::move(plain_perm), std::move(injected),
          std::move(derivative), std::move(pre)};
}

void check_key(const KeyMaterial& key, const PipelineParams& params) {
  if (key.order() != params.order) {
    throw OrderMismatch("key order " + std::to_string(key.order()) +
                        " does not match cipher order " +
                        std::to_string(params.order));
  }
}

}  // namespace

const char* to_string(Defense d) {
  switch (d) {
    case Defense::kBodyRange: return "body-range";
    case Defense::kPreconditionRange: return "precondition-range";
    case Defense::kInjection: return "injection";
    case Defense::kPayloadRange: return "payload-range";
    case Defense::kRetryCanonical: return "retry-canonical";
  }
  return "unknown";
}

PipelineParams PipelineParams::make(std::size_t plain_order,
                                    std::size_t redundancy) {
  if (plain_order == 0) throw RangeError("plain order must be positive");
  if (plain_order + redundancy > kMaxOrder) {
    throw RangeError("order exceeds " + std::to_string(kMaxOrder));
  }
  PipelineParams p;
  p.plain_order = plain_order;
  p.redundancy = redundancy;
  p.order = plain_order + redundancy;
  p.cfg = search_config(p.order);
  p.payload_bits = capacity_bits(plain_order);
  if (p.payload_bits < kRetryBits) {
    throw RangeError("plain order " + std::to_string(plain_order) +
                     " is too small to hold the retry counter");
  }
  return p;
}

LehmerCode EncodeTrace::at(Stage stage) const {
  switch (stage) {
    case Stage::kPlainCode: return plain_code;
    case Stage::kInjected: return oneline_to_lehmer(injected);
    case Stage::kDerivative: return derivative;
    case Stage::kPreconditioned: return preconditioned;
    case Stage::kCipher: return cipher;
  }
  throw RangeError("unknown stage");
}

EncodeTrace encode_trace(const BitMessage& m, const KeyMaterial& key,
                         const PipelineParams& params) {
  check_key(key, params);
  if (m.size() > params.message_capacity()) {
    throw CapacityExceeded(std::to_string(m.size()) + " bits exceed the " +
                           std::to_string(params.message_capacity()) +
                           "-bit message capacity");
  }
  const BigNat message = m.value();
  for (std::size_t retry = 0; retry < (std::size_t{1} << kRetryBits); ++retry) {
    try {
      Forward f = forward_to_preconditioned(
          combine_payload(retry, message, params), params);
      LehmerCode cipher = ndotp_encrypt(f.preconditioned, key);
      return EncodeTrace{retry,
                         std::move(f.plain_code),
                         std::move(f.plain_perm),
                         std::move(f.injected),
                         std::move(f.derivative),
                         std::move(f.preconditioned),
                         std::move(cipher)};
    } catch (const RemainderOutOfRange&) {
      continue;
    }
  }
  throw RemainderOutOfRange("every retry counter value was rejected by "
                            "preconditioning");
}

BitMessage decode_from(Stage stage, const LehmerCode& state,
                       const KeyMaterial& key, const PipelineParams& params,
                       std::size_t message_bits) {
  check_key(key, params);
  if (message_bits > params.message_capacity()) {
    throw RangeError("message length exceeds capacity");
  }
  LehmerCode code = state;
  switch (stage) {
    case Stage::kCipher:
      code = ndotp_decrypt(code, key);
      [[fallthrough]];
    case Stage::kPreconditioned:
      if (params.cfg) {
        try {
          code = deprecondition(code, *params.cfg);
        } catch (const RemainderOutOfRange& e) {
          throw IntegrityFailure(Defense::kPreconditionRange, e.what());
        }
      }
      [[fallthrough]];
    case Stage::kDerivative:
      code = integrate(code);
      [[fallthrough]];
    case Stage::kInjected:
      code = oneline_to_lehmer(
          extract_k(lehmer_to_oneline(code), params.redundancy));
      [[fallthrough]];
    case Stage::kPlainCode:
      break;
  }
  if (code.order() != params.plain_order) {
    throw OrderMismatch("decoded codeword has the wrong order");
  }

  const BigNat value = factoradic_to_int(code);
  if (mpz_sizeinbase(value.get_mpz_t(), 2) > params.payload_bits) {
    throw IntegrityFailure(Defense::kPayloadRange,
                           "decoded value exceeds the payload field");
  }
  BigNat message = value;
  mpz_tdiv_r_2exp(message.get_mpz_t(), value.get_mpz_t(),
                  params.message_capacity());
  BigNat retry_value = value >> params.message_capacity();
  if (message != 0 &&
      mpz_sizeinbase(message.get_mpz_t(), 2) > message_bits) {
    throw IntegrityFailure(Defense::kPayloadRange,
                           "decoded message longer than declared");
  }
  const std::size_t retry = retry_value.get_ui();
  for (std::size_t r = 0; r < retry; ++r) {
    bool rejected = false;
    try {
      forward_to_preconditioned(combine_payload(r, message, params), params);
    } catch (const RemainderOutOfRange&) {
      rejected = true;
    }
    if (!rejected) {
      throw IntegrityFailure(Defense::kRetryCanonical,
                             "retry counter is not the smallest usable one");
    }
  }
  return BitMessage::from_value(message, message_bits);
}

std::vector<std::uint8_t> CipherEnvelope::serialize() const {
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  out.push_back(kVersion);
  put_u16(out, plain_order);
  put_u16(out, redundancy);
  put_u32(out, message_bits);
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

CipherEnvelope CipherEnvelope::parse(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderBytes) throw MalformedEnvelope("truncated header");
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw MalformedEnvelope("bad magic");
  }
  if (bytes[4] != kVersion) {
    throw MalformedEnvelope("unsupported version " + std::to_string(bytes[4]));
  }
  CipherEnvelope env;
  env.plain_order = get_u16(bytes, 5);
  env.redundancy = get_u16(bytes, 7);
  env.message_bits = get_u32(bytes, 9);
  PipelineParams params;
  try {
    params = PipelineParams::make(env.plain_order, env.redundancy);
  } catch (const RangeError& e) {
    throw MalformedEnvelope(std::string("bad parameters: ") + e.what());
  }
  if (env.message_bits > params.message_capacity()) {
    throw MalformedEnvelope("declared message length exceeds capacity");
  }
  const std::size_t body_bytes = codeword_bytes(params.order);
  if (bytes.size() != kHeaderBytes + body_bytes) {
    throw MalformedEnvelope("body is " +
                            std::to_string(bytes.size() - kHeaderBytes) +
                            " bytes, expected " + std::to_string(body_bytes));
  }
  env.body.assign(bytes.begin() + kHeaderBytes, bytes.end());
  return env;
}

CipherEnvelope encrypt_message(const BitMessage& m, const KeyMaterial& key,
                               const PipelineParams& params) {
  const EncodeTrace trace = encode_trace(m, key, params);
  CipherEnvelope env;
  env.plain_order = static_cast<std::uint16_t>(params.plain_order);
  env.redundancy = static_cast<std::uint16_t>(params.redundancy);
  env.message_bits = static_cast<std::uint32_t>(m.size());
  env.body = to_be_bytes(factoradic_to_int(trace.cipher),
                         codeword_bytes(params.order));
  return env;
}

BitMessage decrypt_message(const CipherEnvelope& env, const KeyMaterial& key) {
  PipelineParams params;
  try {
    params = PipelineParams::make(env.plain_order, env.redundancy);
  } catch (const RangeError& e) {
    throw MalformedEnvelope(std::string("bad parameters: ") + e.what());
  }
  if (env.body.size() != codeword_bytes(params.order) ||
      env.message_bits > params.message_capacity()) {
    throw MalformedEnvelope("envelope does not match its parameters");
  }
  check_key(key, params);
  LehmerCode cipher = LehmerCode::zeros(params.order);
  try {
    cipher = int_to_factoradic(from_be_bytes(env.body), params.order);
  } catch (const DecodeOverflow&) {
    throw IntegrityFailure(Defense::kBodyRange, "ciphertext value exceeds n!");
  }
  return decode_from(Stage::kCipher, cipher, key, params, env.message_bits);
}

std::vector<std::uint8_t> serialize_key(const KeyMaterial& key) {
  std::vector<std::uint8_t> out{'N', 'D', 'K', '1', 1};
  put_u16(out, static_cast<std::uint16_t>(key.order()));
  for (Symbol k : key.components()) put_u16(out, static_cast<std::uint16_t>(k));
  return out;
}

KeyMaterial parse_key(std::span<const std::uint8_t> bytes) {
  static constexpr std::uint8_t kKeyMagic[4] = {'N', 'D', 'K', '1'};
  if (bytes.size() < 7) throw MalformedKeyFile("truncated key header");
  if (!std::equal(std::begin(kKeyMagic), std::end(kKeyMagic), bytes.begin())) {
    throw MalformedKeyFile("bad key magic");
  }
  if (bytes[4] != 1) throw MalformedKeyFile("unsupported key version");
  const std::size_t order = get_u16(bytes, 5);
  if (order == 0) throw MalformedKeyFile("key order must be positive");
  if (bytes.size() != 7 + 2 * (order - 1)) {
    throw MalformedKeyFile("key file length does not match its order");
  }
  std::vector<Symbol> components(order - 1);
  for (std::size_t i = 0; i + 1 < order; ++i) {
    components[i] = get_u16(bytes, 7 + 2 * i);
  }
  try {
    return KeyMaterial::from_components(components);
  } catch (const RangeError& e) {
    throw MalformedKeyFile(e.what());
  }
}

KeyMaterial keygen(std::size_t order, EntropySource& source) {
  return KeyMaterial(random_lehmer(order, source));
}

}  // namespace ndotp
