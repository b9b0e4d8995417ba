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

// Command-line front end: CCM, vector files, attack runs, the order matrix,
// a session demo and the audit viewer.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "authenc/attacks.hpp"
#include "authenc/ccm.hpp"
#include "authenc/report.hpp"
#include "authenc/session.hpp"

using namespace authenc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SchemeOrder order_arg(const std::string& s) {
  if (auto o = parse_scheme_order(s)) return *o;
  throw UsageError("unknown order '" + s + "' (encrypt-only, afe, fae, fea)");
}

FormatRule rule_arg(const std::string& s) {
  if (auto r = parse_format_rule(s)) return *r;
  throw UsageError("unknown rule '" + s + "' (pad1, pad2, pad3, enck, enci)");
}

CipherMode cipher_arg(const std::string& s) {
  if (auto c = parse_cipher_mode(s)) return *c;
  throw UsageError("unknown cipher '" + s + "' (otp, ctr, cbc)");
}

OracleMode oracle_arg(const std::string& s) {
  if (auto m = parse_oracle_mode(s)) return *m;
  throw UsageError("unknown oracle '" + s + "' (leaky, strict)");
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
  return out;
}

// ---- ccm ------------------------------------------------------------------

struct CcmArgs {
  std::string key, nonce, adata, data;
  std::size_t tlen = 8;
};

int run_ccm(const CcmArgs& a, bool encrypt) {
  const Bytes key = from_hex(a.key), nonce = from_hex(a.nonce), adata = from_hex(a.adata), data = from_hex(a.data);
  if (key.size() != 16) throw UsageError("--key must be 16 bytes");
  Aes128 aes(key);
  const CcmParams params{nonce.size(), a.tlen};
  if (encrypt) {
    std::cout << to_hex(ccm_encrypt(aes, params, nonce, adata, data)) << "\n";
    return kExitOk;
  }
  params.check();
  if (auto p = ccm_decrypt(aes, params, nonce, adata, data)) {
    std::cout << to_hex(*p) << "\n";
    return kExitOk;
  }
  std::cout << "INVALID\n";
  return kExitRejected;
}

// ---- vectors --------------------------------------------------------------

int run_vectors(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  const auto vectors = parse_ccm_vectors(in);
  std::size_t passed = 0;
  for (const auto& v : vectors) {
    const auto r = run_ccm_vector(v);
    std::cout << "line " << v.line << ": " << (r.passed() ? "PASS" : "FAIL");
    if (!r.passed()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    passed += r.passed();
  }
  std::cout << passed << "/" << vectors.size() << " vectors passed\n";
  return passed == vectors.size() && !vectors.empty() ? kExitOk : kExitRejected;
}

// ---- attack ---------------------------------------------------------------

struct AttackArgs {
  std::string name, order, rule, cipher, oracle = "leaky";
  std::uint64_t seed = kDefaultSeed;
  std::size_t bits = 0;
  bool unchecked_receiver = false;
};

AttackResult run_replay(const AttackArgs& a) {
  Rng rng(a.seed);
  const auto key = CipherKey::aes128(random_bytes(rng, 16));
  SessionPolicy policy;
  policy.check_replay = !a.unchecked_receiver;
  Session sender(key), receiver(key, {13, 8}, policy);
  const Frame f = sender.send(Bytes{0x01}, random_bytes(rng, 16));
  receiver.receive(f);
  return attack_replay(receiver, f);
}

int run_attack(const AttackArgs& a) {
  if (a.name == "replay") {
    std::cout << to_json(run_replay(a)).dump(2) << "\n";
    return kExitOk;
  }
  const bool padding = a.name == "padding-oracle", flip = a.name == "semantic-flip";
  if (a.name != "enck" && a.name != "enci" && !padding && !flip)
    throw UsageError("unknown attack '" + a.name + "'");

  const std::string default_order = padding || flip ? "encrypt-only" : "afe";
  const std::string default_rule = padding ? "pad3" : flip ? "pad2" : a.name;
  SchemeParams params;
  params.order = order_arg(a.order.empty() ? default_order : a.order);
  params.rule = rule_arg(a.rule.empty() ? default_rule : a.rule);
  params.cipher = cipher_arg(a.cipher.empty() ? (padding ? "cbc" : "otp") : a.cipher);

  Rng rng(a.seed);
  Scheme scheme(make_config(params, rng), rng());
  Oracle oracle(scheme, oracle_arg(a.oracle));

  AttackResult r;
  if (flip) {
    if (!is_padding_rule(params.rule)) throw UsageError("semantic-flip needs a padding rule");
    auto text = [](std::string_view s) { return BitString::from_bytes(Bytes(s.begin(), s.end())); };
    const std::size_t offset = params.rule == FormatRule::Pad3 ? kBlockBits : 0;  // after the length block
    const WireMessage w = scheme.protect(text("no "), rng);
    const WireMessage m = attack_semantic_flip(w, params.cipher, offset, text("no "), text("yes"));
    r.attack = "semantic-flip";
    r.config = params;
    r.transcript.push_back(oracle.query(m).symbol);
    r.queries_used = 1;
    // The harness, not the attacker, checks what the receiver now reads.
    const auto out = scheme.unprotect(m);
    r.status = out.accepted() && out.plaintext == text("yes") ? AttackStatus::Success : AttackStatus::Failed;
  } else {
    const std::size_t n = a.bits ? a.bits : padding ? 3 * kBlockBits : 64;
    const BitString p = random_bits(rng, n);
    const WireMessage w = scheme.protect(p, rng);
    r = padding ? attack_padding_oracle(oracle, w, n)
        : a.name == "enck" ? attack_enck_bits(oracle, w, all_bits(n))
                           : attack_enci_bits(oracle, w, all_bits(n));
    grade(r, p);
  }
  std::cout << to_json(r).dump(2) << "\n";
  return kExitOk;
}

// ---- matrix ---------------------------------------------------------------

int run_matrix_cmd(const MatrixOptions& opt, bool json) {
  const auto rows = run_matrix(opt);
  const bool all_match = std::all_of(rows.begin(), rows.end(), [](const MatrixRow& r) { return r.matches(); });
  if (json) {
    std::cout << Json{{"seed", opt.seed}, {"rows", to_json(rows)}, {"matches", all_match}}.dump(2) << "\n";
    return all_match ? kExitOk : kExitRejected;
  }
  auto cell = [](std::ostream& os, int width, const std::string& s) { os << std::left << std::setw(width) << s; };
  cell(std::cout, 14, "order");
  cell(std::cout, 6, "rule");
  cell(std::cout, 16, "bits recovered");
  cell(std::cout, 9, "queries");
  cell(std::cout, 14, "forged");
  cell(std::cout, 10, "verdict");
  std::cout << "expected\n";
  for (const auto& r : rows) {
    cell(std::cout, 14, upper(to_string(r.order)));
    cell(std::cout, 6, std::string(to_string(r.rule)));
    cell(std::cout, 16, std::to_string(r.bits_recovered) + "/" + std::to_string(r.bits_targeted));
    cell(std::cout, 9, std::to_string(r.queries));
    cell(std::cout, 14, std::to_string(r.forged_accepts) + "/" + std::to_string(r.manipulations));
    cell(std::cout, 10, r.secure ? "secure" : "insecure");
    std::cout << (r.expected_secure ? "secure" : "insecure") << (r.matches() ? "" : "  MISMATCH") << "\n";
  }
  return all_match ? kExitOk : kExitRejected;
}

// ---- session demo and audit -------------------------------------------------

void print_audit(const AuditSummary& s) {
  std::cout << "events: " << s.total << "\n";
  for (auto [kind, n] : s.counts) std::cout << "  " << to_string(kind) << ": " << n << "\n";
  if (s.first_timestamp) std::cout << "timestamps: " << *s.first_timestamp << ".." << *s.last_timestamp << "\n";
  if (!s.per_pn.empty()) {
    std::cout << "per pn:";
    for (auto [pn, n] : s.per_pn) std::cout << " " << pn << ":" << n;
    std::cout << "\n";
  }
}

struct DemoArgs {
  std::size_t frames = 8, tamper = 0, replay = 0;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  std::string log_out;
};

int run_session_demo(const DemoArgs& a) {
  if (a.tamper > a.frames) throw UsageError("--tamper cannot exceed --frames");
  if (a.replay > 0 && a.frames == 0) throw UsageError("--replay needs at least one frame");
  Rng rng(a.seed);
  const auto key = CipherKey::aes128(random_bytes(rng, 16));
  Session sender(key), receiver(key);

  std::vector<bool> tampered(a.frames, false);
  std::fill_n(tampered.begin(), a.tamper, true);
  std::shuffle(tampered.begin(), tampered.end(), rng);
  // Each replay re-sends an earlier frame right after frame `slot`.
  std::vector<std::size_t> replay_after(a.replay);
  for (auto& slot : replay_after) slot = rng() % a.frames;
  std::sort(replay_after.begin(), replay_after.end());

  Json transcript = Json::array();
  std::vector<Frame> sent;
  auto deliver = [&](const Frame& f, const std::string& what) {
    const bool ok = receiver.receive(f).has_value();
    transcript.push_back({{"pn", f.pn}, {"event", what}, {"result", ok ? "ACCEPT" : "REJECT"}});
    if (!a.json) std::cout << "pn " << std::setw(3) << f.pn << "  " << std::left << std::setw(10) << what << std::right
                           << (ok ? "ACCEPT" : "REJECT") << "\n";
    if (receiver.status() == SessionStatus::Cancelled) {
      const Bytes fresh = random_bytes(rng, 16);
      sender.rekey(fresh);
      receiver.rekey(fresh);
      transcript.push_back({{"event", "rekey"}});
      if (!a.json) std::cout << "session cancelled; both ends rekeyed\n";
    }
  };

  std::size_t next_replay = 0;
  for (std::size_t i = 0; i < a.frames; ++i) {
    Frame f = sender.send(Bytes{0x01}, random_bytes(rng, 16));
    sent.push_back(f);
    if (tampered[i]) f.ciphertext[rng() % f.ciphertext.size()] ^= static_cast<std::uint8_t>(1 + rng() % 255);
    deliver(f, tampered[i] ? "tampered" : "fresh");
    for (; next_replay < replay_after.size() && replay_after[next_replay] == i; ++next_replay)
      deliver(sent[rng() % sent.size()], "replay");
  }

  Json log = Json::array();
  for (const auto& e : receiver.error_log()) log.push_back(to_json(e));
  const auto summary = audit(receiver.error_log());
  if (!a.log_out.empty()) {
    std::ofstream out(a.log_out);
    if (!out) throw UsageError("cannot write " + a.log_out);
    out << log.dump(2) << "\n";
  }
  if (a.json) {
    std::cout << Json{{"transcript", transcript}, {"error_log", log}, {"audit", to_json(summary)}}.dump(2) << "\n";
  } else {
    std::cout << "--\n";
    print_audit(summary);
  }
  return kExitOk;
}

int run_audit(const std::string& path, bool json) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  Json j = Json::parse(in);
  if (j.is_object() && j.contains("error_log")) j = j.at("error_log");
  const auto summary = audit(error_log_from_json(j));
  if (json)
    std::cout << to_json(summary).dump(2) << "\n";
  else
    print_audit(summary);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Authenticated-encryption workbench: CCM, composition orders and the attacks that separate them."};
  app.require_subcommand(1);

  CcmArgs enc, dec;
  auto* ccm_enc = app.add_subcommand("ccm-encrypt", "CCM-encrypt a payload; prints ciphertext || tag as hex");
  ccm_enc->add_option("--key", enc.key, "AES-128 key (hex)")->required();
  ccm_enc->add_option("--nonce", enc.nonce, "nonce, 7..13 bytes (hex)")->required();
  ccm_enc->add_option("--adata", enc.adata, "associated data (hex)");
  ccm_enc->add_option("--payload", enc.data, "payload (hex)");
  ccm_enc->add_option("--tlen", enc.tlen, "tag length in bytes")->capture_default_str();

  auto* ccm_dec = app.add_subcommand("ccm-decrypt", "CCM-decrypt; prints the payload or INVALID (exit 1)");
  ccm_dec->add_option("--key", dec.key, "AES-128 key (hex)")->required();
  ccm_dec->add_option("--nonce", dec.nonce, "nonce (hex)")->required();
  ccm_dec->add_option("--adata", dec.adata, "associated data (hex)");
  ccm_dec->add_option("--ct", dec.data, "ciphertext || tag (hex)")->required();
  ccm_dec->add_option("--tlen", dec.tlen, "tag length in bytes")->capture_default_str();

  std::string vector_file;
  auto* vectors = app.add_subcommand("vectors", "check a CCM vector file in both directions");
  vectors->add_option("--file", vector_file, "vector file")->required();

  AttackArgs atk;
  auto* attack = app.add_subcommand("attack", "run one attack and print a JSON report");
  attack->add_option("--name", atk.name, "enck | enci | padding-oracle | replay | semantic-flip")->required();
  attack->add_option("--order", atk.order, "encrypt-only | afe | fae | fea");
  attack->add_option("--rule", atk.rule, "pad1 | pad2 | pad3 | enck | enci");
  attack->add_option("--cipher", atk.cipher, "otp | ctr | cbc");
  attack->add_option("--oracle", atk.oracle, "leaky | strict")->capture_default_str();
  attack->add_option("--bits", atk.bits, "plaintext length in bits");
  attack->add_option("--seed", atk.seed, "random seed")->capture_default_str();
  attack->add_flag("--unchecked-receiver", atk.unchecked_receiver, "replay: receiver skips the packet-number check");

  MatrixOptions mopt;
  bool matrix_json = false;
  auto* matrix = app.add_subcommand("matrix", "attack every order under both bit encodings");
  matrix->add_option("--seed", mopt.seed, "random seed")->capture_default_str();
  matrix->add_option("--trials", mopt.trials, "plaintexts per row")->capture_default_str();
  matrix->add_option("--manipulations", mopt.manipulations, "random forgeries per row")->capture_default_str();
  matrix->add_flag("--json", matrix_json, "JSON instead of a table");

  DemoArgs demo;
  auto* session = app.add_subcommand("session-demo", "send frames through a session with tampering and replays");
  session->add_option("--frames", demo.frames, "frames to send")->capture_default_str();
  session->add_option("--tamper", demo.tamper, "frames to corrupt in transit")->capture_default_str();
  session->add_option("--replay", demo.replay, "captured frames to re-deliver")->capture_default_str();
  session->add_option("--seed", demo.seed, "random seed")->capture_default_str();
  session->add_option("--log-out", demo.log_out, "write the receiver's error log (JSON) here");
  session->add_flag("--json", demo.json, "JSON instead of text");

  std::string audit_file;
  bool audit_json = false;
  auto* audit_cmd = app.add_subcommand("audit", "summarize a JSON error log");
  audit_cmd->add_option("--file", audit_file, "error log, or session-demo --json output")->required();
  audit_cmd->add_flag("--json", audit_json, "JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*ccm_enc) return run_ccm(enc, true);
    if (*ccm_dec) return run_ccm(dec, false);
    if (*vectors) return run_vectors(vector_file);
    if (*attack) return run_attack(atk);
    if (*matrix) return run_matrix_cmd(mopt, matrix_json);
    if (*session) return run_session_demo(demo);
    if (*audit_cmd) return run_audit(audit_file, audit_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
