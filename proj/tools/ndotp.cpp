// SPDX-License-Identifier: Apache-2.0
//
// ndotp: key generation, encryption, decryption, parameter tables and
// Monte Carlo experiments.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 integrity failure.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ndotp/envelope.hpp"
#include "ndotp/errors.hpp"
#include "ndotp/experiments.hpp"
#include "ndotp/precondition.hpp"
#include "ndotp/radix.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIntegrity = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& b) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(b.data()),
            static_cast<std::streamsize>(b.size()));
  if (!out.flush()) throw std::runtime_error("write to " + path + " failed");
}

std::uint64_t parse_hex_seed(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used, 16);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw UsageError("--seed expects a hexadecimal integer, got '" + text + "'");
  }
  return v;
}

// "exhaustive" or "sampled:<count>".
std::optional<std::size_t> parse_triples(const std::string& text) {
  if (text == "exhaustive") return std::nullopt;
  const std::string prefix = "sampled:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string count = text.substr(prefix.size());
    std::size_t used = 0;
    try {
      const unsigned long long v = std::stoull(count, &used, 10);
      if (used == count.size() && used > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  throw UsageError("--triples expects 'exhaustive' or 'sampled:<count>'");
}

std::string key_marker(const std::string& key_path) {
  return key_path + ".used";
}

// ---- keygen

struct KeygenArgs {
  std::size_t nu = 0;
  std::string out;
  std::string seed;
};

int run_keygen(const KeygenArgs& a) {
  if (a.nu < 2 || a.nu > ndotp::kMaxOrder) {
    throw UsageError("--nu must lie in [2, " +
                     std::to_string(ndotp::kMaxOrder) + "]");
  }
  ndotp::KeyMaterial key = [&] {
    if (a.seed.empty()) {
      ndotp::OsEntropy os;
      return ndotp::keygen(a.nu, os);
    }
    std::cerr << "WARNING: --seed makes the key reproducible by anyone who "
                 "knows the seed. Use it for tests only.\n";
    ndotp::SeededEntropy seeded(parse_hex_seed(a.seed));
    return ndotp::keygen(a.nu, seeded);
  }();
  write_file(a.out, ndotp::serialize_key(key));
  std::filesystem::remove(key_marker(a.out));
  return kExitOk;
}

// ---- encrypt / decrypt

struct EncryptArgs {
  std::string key;
  std::size_t nu_plain = 0;
  std::size_t redundancy = 0;
  std::string in;
  std::string out;
  bool allow_reuse = false;
};

int run_encrypt(const EncryptArgs& a) {
  const std::string marker = key_marker(a.key);
  if (std::filesystem::exists(marker) && !a.allow_reuse) {
    throw UsageError("key " + a.key +
                     " has already encrypted a message; reusing a one-time "
                     "key breaks secrecy (override with "
                     "--i-know-this-breaks-secrecy)");
  }
  const ndotp::KeyMaterial key = ndotp::parse_key(read_file(a.key));
  ndotp::PipelineParams params;
  try {
    params = ndotp::PipelineParams::make(a.nu_plain, a.redundancy);
  } catch (const ndotp::RangeError& e) {
    throw UsageError(e.what());
  }
  if (key.order() != params.order) {
    throw UsageError("key order " + std::to_string(key.order()) +
                     " does not match --nu-plain + --redundancy = " +
                     std::to_string(params.order));
  }
  const auto bytes = read_file(a.in);
  const ndotp::BitMessage m = ndotp::BitMessage::from_bytes(bytes);
  if (m.size() > params.message_capacity()) {
    throw UsageError("message is " + std::to_string(m.size()) +
                     " bits; capacity at these parameters is " +
                     std::to_string(params.message_capacity()) + " bits");
  }
  const ndotp::CipherEnvelope env = ndotp::encrypt_message(m, key, params);
  write_file(a.out, env.serialize());
  write_file(marker, {});
  return kExitOk;
}

struct DecryptArgs {
  std::string key;
  std::string in;
  std::string out;
};

int run_decrypt(const DecryptArgs& a) {
  const ndotp::KeyMaterial key = ndotp::parse_key(read_file(a.key));
  const ndotp::CipherEnvelope env =
      ndotp::CipherEnvelope::parse(read_file(a.in));
  const ndotp::BitMessage m = ndotp::decrypt_message(env, key);
  write_file(a.out, m.to_bytes());
  return kExitOk;
}

// ---- params

struct ParamsArgs {
  std::size_t nu_max = 310;
  bool all = false;
};

int run_params(const ParamsArgs& a) {
  std::cout << "n\tnu\ts_max\tfactors\n";
  std::size_t record = 0;
  for (std::size_t nu = 2; nu <= a.nu_max; ++nu) {
    const auto cfg = ndotp::search_config(nu);
    if (!cfg) continue;
    // Without --all only the least nu of each new s_max is printed.
    if (!a.all && cfg->big_end <= record) continue;
    record = std::max(record, cfg->big_end);
    std::string factors;
    for (std::uint64_t m : cfg->moduli) {
      if (!factors.empty()) factors += ',';
      factors += std::to_string(m);
    }
    std::cout << ndotp::capacity_bits(nu) << '\t' << nu << '\t'
              << cfg->big_end << '\t' << factors << '\n';
  }
  return kExitOk;
}

// ---- experiments

struct DiffMetricArgs {
  std::size_t nu = 95;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::string csv;
  std::string svg;
  bool baseline = false;
  std::string baseline_csv;
};

int run_diff_metric(const DiffMetricArgs& a) {
  if (a.nu < 3) throw UsageError("--nu must be at least 3");
  const ndotp::DiffMetricSpec spec{a.nu, a.samples, a.seed, a.workers};
  const ndotp::Histogram h = ndotp::diff_metric_experiment(spec);
  std::printf("samples\t%llu\nmean_distance\t%.4f\n",
              static_cast<unsigned long long>(h.total()), h.mean());
  if (!a.csv.empty()) ndotp::emit_csv(h, a.csv);
  if (!a.svg.empty()) {
    ndotp::emit_svg(h, a.svg,
                    {"Cayley distance after a big-end derivative change, nu=" +
                         std::to_string(a.nu),
                     "Cayley distance", false, {}});
  }
  if (a.baseline || !a.baseline_csv.empty()) {
    const ndotp::Histogram b = ndotp::random_pair_baseline(spec);
    std::printf("baseline_mean_distance\t%.4f\n", b.mean());
    if (!a.baseline_csv.empty()) ndotp::emit_csv(b, a.baseline_csv);
  }
  return kExitOk;
}

struct PfiDepthArgs {
  std::size_t n = 50;
  std::size_t k = 10;
  std::size_t plaintexts = 1000;
  std::string triples = "sampled:10000";
  bool dedup = false;
  bool transpose = false;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::string csv;
  std::string svg;
};

int run_pfi_depth(const PfiDepthArgs& a) {
  if (a.n < 1 || a.k < 1) throw UsageError("--n and --k must be positive");
  if (a.n + a.k < 3) throw UsageError("--n + --k must be at least 3");
  ndotp::PenetrationSpec spec;
  spec.n = a.n;
  spec.k = a.k;
  spec.plaintexts = a.plaintexts;
  spec.sampled_triples = parse_triples(a.triples);
  spec.dedup = a.dedup;
  if (a.dedup && spec.sampled_triples) {
    throw UsageError("--dedup only applies to --triples exhaustive");
  }
  spec.perturbation = a.transpose ? ndotp::Perturbation::kTranspose
                                  : ndotp::Perturbation::kRotate3;
  spec.seed = a.seed;
  spec.workers = a.workers;
  const ndotp::Histogram h = ndotp::pfi_penetration_experiment(spec);
  const auto baseline = ndotp::random_penetration_rates(a.n, a.k);

  std::printf("outcomes\t%llu\n", static_cast<unsigned long long>(h.total()));
  std::printf("depth\tcount\trate\trandom_rate\n");
  for (std::size_t d = 0; d < h.bins(); ++d) {
    std::printf("%zu\t%llu\t%.6e\t%.6e\n", d,
                static_cast<unsigned long long>(h.count(d)), h.rate(d),
                baseline[d]);
  }
  std::printf("depth_ge_1\t%.6e\nrandom_depth_ge_1\t%.6e\n",
              ndotp::depth_at_least(h, 1),
              ndotp::random_depth_at_least(a.n, a.k, 1));
  if (!a.csv.empty()) ndotp::emit_csv(h, a.csv);
  if (!a.svg.empty()) {
    ndotp::emit_svg(h, a.svg,
                    {"Penetration depth, n=" + std::to_string(a.n) +
                         ", k=" + std::to_string(a.k),
                     "depth", true, baseline});
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation-code one-time pad toolkit"};
  app.require_subcommand(1);

  KeygenArgs keygen_args;
  auto* keygen = app.add_subcommand("keygen", "Generate a one-time key");
  keygen->add_option("--nu", keygen_args.nu, "Key order")->required();
  keygen->add_option("--out", keygen_args.out, "Key file")->required();
  keygen->add_option("--seed", keygen_args.seed,
                     "Hex seed for a reproducible test key (insecure)");

  EncryptArgs enc_args;
  auto* encrypt = app.add_subcommand("encrypt", "Encrypt a message file");
  encrypt->add_option("--key", enc_args.key, "Key file")->required();
  encrypt->add_option("--nu-plain", enc_args.nu_plain, "Plaintext order")
      ->required();
  encrypt->add_option("--redundancy", enc_args.redundancy,
                      "Redundancy injections")
      ->required();
  encrypt->add_option("--in", enc_args.in, "Message file")->required();
  encrypt->add_option("--out", enc_args.out, "Ciphertext file")->required();
  encrypt->add_flag("--i-know-this-breaks-secrecy", enc_args.allow_reuse,
                    "Allow a key to encrypt more than one message");

  DecryptArgs dec_args;
  auto* decrypt = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
  decrypt->add_option("--key", dec_args.key, "Key file")->required();
  decrypt->add_option("--in", dec_args.in, "Ciphertext file")->required();
  decrypt->add_option("--out", dec_args.out, "Message file")->required();

  ParamsArgs params_args;
  auto* params = app.add_subcommand(
      "params", "Preconditioning parameters (TSV: n, nu, s_max, factors)");
  params->add_option("--nu-max", params_args.nu_max, "Largest order")
      ->required();
  params->add_flag("--all", params_args.all,
                   "Print every order with a valid configuration");

  auto* experiment = app.add_subcommand("experiment", "Monte Carlo runs");
  experiment->require_subcommand(1);

  DiffMetricArgs dm;
  auto* diff = experiment->add_subcommand(
      "diff-metric", "Distance after changing one derivative digit");
  diff->add_option("--nu", dm.nu, "Order")->capture_default_str();
  diff->add_option("--samples", dm.samples, "Trials")->capture_default_str();
  diff->add_option("--seed", dm.seed, "Seed")->capture_default_str();
  diff->add_option("--workers", dm.workers, "Worker threads")
      ->capture_default_str();
  diff->add_option("--csv", dm.csv, "Histogram CSV output");
  diff->add_option("--svg", dm.svg, "Histogram SVG output");
  diff->add_flag("--baseline", dm.baseline,
                 "Also run the random-pair reference ensemble");
  diff->add_option("--baseline-csv", dm.baseline_csv,
                   "Reference ensemble CSV output");

  PfiDepthArgs pd;
  auto* pfi = experiment->add_subcommand(
      "pfi-depth", "Penetration depth of perturbed injected permutations");
  pfi->add_option("--n", pd.n, "Plaintext order")->capture_default_str();
  pfi->add_option("--k", pd.k, "Redundancy injections")->capture_default_str();
  pfi->add_option("--plaintexts", pd.plaintexts, "Random plaintexts")
      ->capture_default_str();
  pfi->add_option("--triples", pd.triples,
                  "sampled:<count> or exhaustive")
      ->capture_default_str();
  pfi->add_flag("--dedup", pd.dedup,
                "Exhaustive mode: count each 3-cycle once");
  pfi->add_flag("--transpose", pd.transpose,
                "Control run: swap two positions instead");
  pfi->add_option("--seed", pd.seed, "Seed")->capture_default_str();
  pfi->add_option("--workers", pd.workers, "Worker threads")
      ->capture_default_str();
  pfi->add_option("--csv", pd.csv, "Histogram CSV output");
  pfi->add_option("--svg", pd.svg, "log60 plot SVG output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*keygen) return run_keygen(keygen_args);
    if (*encrypt) return run_encrypt(enc_args);
    if (*decrypt) return run_decrypt(dec_args);
    if (*params) return run_params(params_args);
    if (*diff) return run_diff_metric(dm);
    if (*pfi) return run_pfi_depth(pd);
  } catch (const ndotp::IntegrityFailure& e) {
    std::cerr << "integrity failure (" << ndotp::to_string(e.defense())
              << "): " << e.what() << '\n';
    return kExitIntegrity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
