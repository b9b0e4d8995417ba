// Copyright 2026 The authenc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "authenc/attacks.hpp"
#include "authenc/ccm.hpp"
#include "authenc/session.hpp"

using namespace authenc;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

bool run(int id, const std::string& title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0) c.require(secs < limit_s, "runtime over " + std::to_string(limit_s) + " s");
  std::cout << (c.ok ? "PASS" : "FAIL") << " " << id << " " << title << " [" << std::fixed << std::setprecision(2)
            << secs << " s] " << c.detail.str() << "\n";
  return c.ok;
}

void matrix_reproduction(Check& c) {
  MatrixOptions opt;  // 10 plaintexts of 64 bits, 10^4 manipulations, 64-bit tags
  const auto rows = run_matrix(opt);
  c.require(rows.size() == 8, "eight rows");
  std::size_t afe_bits = 0, afe_targeted = 0, mac_bits = 0, forged = 0, manipulations = 0;
  for (const auto& r : rows) {
    if (r.order == SchemeOrder::AFE) {
      afe_bits += r.bits_recovered;
      afe_targeted += r.bits_targeted;
    } else if (r.order != SchemeOrder::EncryptOnly) {
      mac_bits += r.bits_recovered;
      forged += r.forged_accepts;
      manipulations += r.manipulations;
    }
    const std::string name = std::string(to_string(r.order)) + "/" + std::string(to_string(r.rule));
    c.require(r.trials == 10 && r.bits_targeted == 640, name + " ran 10 x 64 bits");
    c.require(r.failed == 0, name + " no wrong recoveries");
    c.require(r.manipulations == 10000, name + " ran 10^4 manipulations");
    const bool full = r.bits_recovered == r.bits_targeted;
    switch (r.order) {
      case SchemeOrder::EncryptOnly:
        if (r.rule == FormatRule::EncK)
          c.require(full && !r.secure, name + " insecure with full recovery");
        else
          c.require(r.bits_recovered == 0 && r.secure, name + " secure");
        break;
      case SchemeOrder::AFE:
        c.require(full && !r.secure, name + " insecure with full recovery");
        break;
      case SchemeOrder::FAE:
      case SchemeOrder::FEA:
        c.require(r.bits_recovered == 0 && r.forged_accepts == 0 && r.secure,
                  name + " secure, zero bits, zero forgeries");
        break;
    }
    c.require(r.matches(), name + " verdict matches the table");
  }
  c.detail << "AFE " << afe_bits << "/" << afe_targeted << " bits; FAE/FEA " << mac_bits << " bits, " << forged << "/"
           << manipulations << " forgeries";
}

void ccm_bit_exactness(Check& c) {
  std::ifstream in(AUTHENC_TEST_DATA "/ccm_vectors.txt");
  c.require(in.good(), "fixture readable");
  const auto vectors = parse_ccm_vectors(in);
  c.require(vectors.size() >= 3, "at least the three NIST examples");
  for (const auto& v : vectors) c.require(run_ccm_vector(v).passed(), "vector at line " + std::to_string(v.line));

  Rng rng(kDefaultSeed);
  std::size_t roundtrips = 0;
  for (int i = 0; i < 1000; ++i) {
    Aes128 aes(random_bytes(rng, 16));
    const CcmParams params{7 + rng() % 7, 4 + 2 * (rng() % 7)};
    const auto nonce = random_bytes(rng, params.nonce_len);
    const auto adata = random_bytes(rng, rng() % 48);
    const auto payload = random_bytes(rng, rng() % 96);
    roundtrips += ccm_decrypt(aes, params, nonce, adata, ccm_encrypt(aes, params, nonce, adata, payload)) == payload;
  }
  c.require(roundtrips == 1000, "1000 roundtrips");

  std::size_t rejected = 0;
  for (int i = 0; i < 10000; ++i) {
    Aes128 aes(random_bytes(rng, 16));
    const CcmParams params{13, 8 + 2 * (rng() % 5)};
    const auto nonce = random_bytes(rng, 13);
    const auto adata = random_bytes(rng, rng() % 24);
    auto ct = ccm_encrypt(aes, params, nonce, adata, random_bytes(rng, rng() % 64));
    const std::size_t bit = rng() % (ct.size() * 8);
    ct[bit / 8] ^= static_cast<std::uint8_t>(0x80 >> (bit % 8));
    rejected += !ccm_decrypt(aes, params, nonce, adata, ct).has_value();
  }
  c.require(rejected == 10000, "10^4 tampered ciphertexts rejected");
  c.detail << vectors.size() << " vectors, " << roundtrips << " roundtrips, " << rejected << "/10000 tampers INVALID";
}

void padding_oracle_recovery(Check& c) {
  Rng rng(kDefaultSeed);
  const std::size_t n = 3 * kBlockBits;
  const BitString p = random_bits(rng, n);

  Scheme pad3(make_config({SchemeOrder::EncryptOnly, FormatRule::Pad3, CipherMode::CBC, 64}, rng), 1);
  Oracle leaky3(pad3, OracleMode::Leaky);
  auto r = attack_padding_oracle(leaky3, pad3.protect(p, rng), n);
  grade(r, p);
  c.require(r.status == AttackStatus::Success && r.recovered == p, "Pad3 plaintext recovered exactly");
  c.require(r.queries_used <= 12288, "at most 12288 queries");

  // Under Pad2 a 384-bit text also fills four blocks, so the attacker cannot
  // tell the layouts apart from the ciphertext.
  Scheme pad2(make_config({SchemeOrder::EncryptOnly, FormatRule::Pad2, CipherMode::CBC, 64}, rng), 2);
  Oracle leaky2(pad2, OracleMode::Leaky);
  const auto w2 = pad2.protect(p, rng);
  c.require(w2.body.size() == 4 * kBlockBits, "Pad2 ciphertext has the same shape");
  const auto r2 = attack_padding_oracle(leaky2, w2, n);
  c.require(r2.status == AttackStatus::Inconclusive, "Pad2 run inconclusive");
  c.detail << "Pad3: " << r.queries_used << " queries; Pad2: " << to_string(r2.status);
}

void strict_indistinguishability(Check& c) {
  Rng rng(kDefaultSeed);
  Scheme scheme(make_config({SchemeOrder::FAE, FormatRule::Pad2, CipherMode::CTR, 64}, rng), 3);
  Oracle strict(scheme, OracleMode::Strict);
  std::size_t pairs = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t len = 1 + rng() % 500;
    auto mac_failure = scheme.protect(random_bits(rng, len), rng);
    mac_failure.body.flip(rng() % mac_failure.body.size());
    // Correct tag over a text with no Pad2 marker, same length.
    const std::size_t t_bits = mac_failure.body.size() - 64;
    const auto forged = scheme.protect_formatted(BitString(t_bits), rng);
    c.require(scheme.unprotect(mac_failure).kind == UnprotectOutcome::Kind::MacFailure, "first input fails the MAC");
    c.require(scheme.unprotect(forged).kind == UnprotectOutcome::Kind::Invalid, "second input is ill-formatted");
    const auto a = strict.query(mac_failure);
    const auto b = strict.query(forged);
    c.require(a.symbol == Symbol::Reject && b.symbol == Symbol::Reject, "both REJECT");
    c.require(a.cost == b.cost, "identical cost");
    pairs += a.symbol == b.symbol && a.cost == b.cost;
  }
  c.detail << pairs << "/100 pairs identical";
}

void session_policy(Check& c) {
  Rng rng(kDefaultSeed);
  const auto key = CipherKey::aes128(random_bytes(rng, 16));
  Session alice(key), bob(key);
  auto send = [&]() { return alice.send(Bytes{0x01}, random_bytes(rng, 24)); };

  const Frame first = send();
  c.require(bob.receive(first).has_value(), "fresh frame accepted");
  c.require(!bob.receive(first).has_value(), "replay rejected");
  c.require(bob.error_log().size() == 1 && bob.error_log()[0].kind == ErrorKind::Replay &&
                bob.error_log()[0].pn == first.pn,
            "replay logged");

  for (int i = 0; i < 4; ++i) {
    Frame f = send();
    f.ciphertext[rng() % f.ciphertext.size()] ^= 0x01;
    bob.receive(f);
    const auto expected = i < 3 ? SessionStatus::Active : SessionStatus::Cancelled;
    c.require(bob.status() == expected, i < 3 ? "active through three failures" : "cancelled on the fourth");
  }

  const Frame old = send();
  const Bytes fresh = random_bytes(rng, 16);
  alice.rekey(fresh);
  bob.rekey(fresh);
  c.require(bob.status() == SessionStatus::Active, "rekey reactivates");
  c.require(alice.send_pn() == 0 && !bob.last_accepted_pn() && bob.consecutive_failures() == 0, "counters reset");
  c.require(!bob.receive(old).has_value() && !bob.receive(first).has_value(), "pre-rekey frames rejected");
  c.require(bob.receive(send()).has_value(), "post-rekey frame accepted");
  c.detail << bob.error_log().size() << " events logged";
}

void adaptive_query_bound(Check& c) {
  Rng rng(kDefaultSeed);
  Scheme scheme(make_config({SchemeOrder::AFE, FormatRule::EncI, CipherMode::OTP, 64}, rng), 4);
  Oracle oracle(scheme, OracleMode::Leaky);
  std::size_t bits = 0, queries = 0;
  while (bits < 1000) {
    const BitString p = random_bits(rng, 100);
    auto r = attack_enci_bits(oracle, scheme.protect(p, rng), all_bits(p.size()));
    grade(r, p);
    c.require(r.status == AttackStatus::Success, "each plaintext recovered");
    c.require(r.queries_used <= 2 * p.size(), "at most two queries per bit");
    bits += p.size();
    queries += r.queries_used;
  }
  const double mean = static_cast<double>(queries) / static_cast<double>(bits);
  c.require(mean >= 1.55 && mean <= 1.80, "mean queries per bit in [1.55, 1.80]");
  c.detail << std::setprecision(3) << "mean " << mean << " queries/bit over " << bits << " bits";
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "matrix reproduction", 60, matrix_reproduction);
  ok &= run(2, "CCM bit-exactness", 60, ccm_bit_exactness);
  ok &= run(3, "padding-oracle recovery", 30, padding_oracle_recovery);
  ok &= run(4, "strict-oracle indistinguishability", 0, strict_indistinguishability);
  ok &= run(5, "session policy", 0, session_policy);
  ok &= run(6, "adaptive-attack query bound", 0, adaptive_query_bound);
  return ok ? 0 : 1;
}
