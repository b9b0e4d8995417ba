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

#include "authenc/attacks.hpp"

#include <algorithm>
#include <stdexcept>

namespace authenc {

namespace {

AttackResult start(std::string name, const Oracle& oracle) {
  AttackResult r;
  r.attack = std::move(name);
  r.config = oracle.params();
  return r;
}

bool ask(Oracle& oracle, AttackResult& r, const WireMessage& m) {
  const auto obs = oracle.query(m);
  r.transcript.push_back(obs.symbol);
  ++r.queries_used;
  return obs.accepted();
}

// A receiver that answers every query the same way has told us nothing.
AttackResult finish(AttackResult r) {
  const bool constant = std::all_of(r.transcript.begin(), r.transcript.end(),
                                    [&](Symbol s) { return s == r.transcript.front(); });
  if (constant) {
    r.status = AttackStatus::Inconclusive;
    r.recovered = BitString();
  } else {
    r.status = AttackStatus::Success;
  }
  return r;
}

void check_pair(const WireMessage& w, std::size_t i) {
  if (2 * i + 1 >= w.body.size()) throw std::invalid_argument("attack: bit index outside the message");
}

bool keystream_cipher(CipherMode mode) { return mode == CipherMode::OTP || mode == CipherMode::CTR; }

Block length_block(std::size_t nbits) { return to_block(length_prefixed(BitString(nbits)).prefix(kBlockBits)); }

}  // namespace

std::string_view to_string(AttackStatus status) {
  switch (status) {
    case AttackStatus::Success: return "Success";
    case AttackStatus::Inconclusive: return "Inconclusive";
    case AttackStatus::Failed: return "Failed";
  }
  return "?";
}

void grade(AttackResult& result, const BitString& truth) {
  if (result.status == AttackStatus::Success && result.recovered != truth) result.status = AttackStatus::Failed;
}

std::vector<std::size_t> all_bits(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

WireMessage attack_semantic_flip(const WireMessage& w, CipherMode cipher, std::size_t offset,
                                 const BitString& known_old, const BitString& desired_new) {
  if (known_old.size() != desired_new.size()) throw std::invalid_argument("semantic flip: length mismatch");
  const BitString delta = xor_bits(known_old, desired_new);
  const std::size_t n = delta.size();
  if (offset + n > w.body.size()) throw std::invalid_argument("semantic flip: target outside the message");

  WireMessage m = w;
  if (keystream_cipher(cipher)) {
    for (std::size_t i = 0; i < n; ++i)
      if (delta[i]) m.body.flip(offset + i);
    return m;
  }
  if (n == 0) return m;
  const std::size_t block = offset / kBlockBits;
  if ((offset + n - 1) / kBlockBits != block) throw std::invalid_argument("semantic flip: CBC target spans blocks");
  const std::size_t within = offset % kBlockBits;
  if (block == 0 && !m.iv) throw std::invalid_argument("semantic flip: CBC message without IV");
  BitString& target = block == 0 ? *m.iv : m.body;
  const std::size_t base = block == 0 ? within : (block - 1) * kBlockBits + within;
  for (std::size_t i = 0; i < n; ++i)
    if (delta[i]) target.flip(base + i);
  return m;
}

AttackResult attack_enck_bits(Oracle& oracle, const WireMessage& w, const std::vector<std::size_t>& bit_indices) {
  auto r = start("enck", oracle);
  if (oracle.params().rule != FormatRule::EncK || !keystream_cipher(oracle.params().cipher)) {
    r.status = AttackStatus::Failed;
    return r;
  }
  for (auto i : bit_indices) {
    check_pair(w, i);
    WireMessage m = w;
    m.body.flip(2 * i);
    m.body.flip(2 * i + 1);
    // 00 -> 11 never decodes; 01 <-> 10 still reads as 1.
    r.recovered.push_back(ask(oracle, r, m));
  }
  return finish(std::move(r));
}

AttackResult attack_enci_bits(Oracle& oracle, const WireMessage& w, const std::vector<std::size_t>& bit_indices) {
  auto r = start("enci", oracle);
  if (oracle.params().rule != FormatRule::EncI || !keystream_cipher(oracle.params().cipher)) {
    r.status = AttackStatus::Failed;
    return r;
  }
  for (auto i : bit_indices) {
    check_pair(w, i);
    WireMessage first = w;
    first.body.flip(2 * i);
    if (ask(oracle, r, first)) {
      r.recovered.push_back(false);  // 00 or 10
      continue;
    }
    WireMessage second = w;
    second.body.flip(2 * i + 1);
    r.recovered.push_back(!ask(oracle, r, second));  // 01 accepts, 11 does not
  }
  return finish(std::move(r));
}

AttackResult attack_padding_oracle(Oracle& oracle, const WireMessage& w, std::size_t known_len) {
  auto r = start("padding-oracle", oracle);
  if (oracle.params().cipher != CipherMode::CBC || oracle.mode() != OracleMode::Leaky || !w.iv ||
      w.iv->size() != kBlockBits || w.body.size() % kBlockBits != 0 || w.body.size() < 2 * kBlockBits)
    return r;
  const auto blocks = split_blocks(w.body);
  const std::size_t data_blocks = blocks.size() - 1;
  if ((known_len + kBlockBits - 1) / kBlockBits != data_blocks) return r;  // not a Pad3 layout of that length

  const Block iv = to_block(*w.iv);
  const Block l0 = length_block(known_len);
  // IV that makes the first block decrypt to a length field of our choosing.
  auto steer = [&](std::size_t declared) { return xor_block(xor_block(iv, l0), length_block(declared)); };
  auto query = [&](const Block& iv2, std::vector<Block> body) {
    WireMessage m;
    m.iv = to_bits(iv2);
    m.body = join_blocks(body);
    return ask(oracle, r, m);
  };
  auto sweep = [&](auto&& accepts_with) {
    for (unsigned v = 0; v < 255; ++v)
      if (accepts_with(static_cast<std::uint8_t>(v))) return static_cast<std::uint8_t>(v);
    return std::uint8_t{255};
  };

  // Calibration: five data blocks declared, two sent. A receiver that
  // accepts this is not checking a length field.
  if (query(steer(5 * kBlockBits), {blocks[0], blocks[1], blocks[1]})) {
    r.recovered = BitString();
    return r;
  }

  BitString recovered;
  for (std::size_t t = 1; t <= data_blocks; ++t) {
    Block d{};  // D(C_t), filled from the right
    Block mask{};
    for (std::size_t pos = kBlockBytes - 1; pos >= 1; --pos) {
      const std::size_t k = kBlockBytes - pos;
      const Block iv2 = steer(2 * kBlockBits - 8 * k);  // last k bytes of the second data block must be zero
      for (std::size_t j = pos + 1; j < kBlockBytes; ++j) mask[j] = d[j];
      d[pos] = sweep([&](std::uint8_t v) {
        mask[pos] = v;
        return query(iv2, {blocks[0], mask, blocks[t]});
      });
    }
    // Byte 0: send C_t alone as the length block. With the rest of the IV
    // cancelling D(C_t), it validates only as an all-zero (empty) message.
    Block probe = d;
    d[0] = sweep([&](std::uint8_t v) {
      probe[0] = v;
      return query(probe, {blocks[t]});
    });
    recovered.append(to_bits(xor_block(d, blocks[t - 1])));
  }
  r.recovered = recovered.prefix(known_len);
  return finish(std::move(r));
}

AttackResult attack_replay(Session& receiver, const Frame& captured) {
  AttackResult r;
  r.attack = "replay";
  const bool accepted = receiver.receive(captured).has_value();
  r.queries_used = 1;
  r.transcript.push_back(accepted ? Symbol::Accept : Symbol::Reject);
  r.status = accepted ? AttackStatus::Success : AttackStatus::Failed;
  return r;
}

std::vector<MatrixRow> run_matrix(const MatrixOptions& options) {
  std::vector<MatrixRow> rows;
  std::uint64_t row_seed = options.seed;
  for (auto order : {SchemeOrder::EncryptOnly, SchemeOrder::AFE, SchemeOrder::FAE, SchemeOrder::FEA}) {
    for (auto rule : {FormatRule::EncK, FormatRule::EncI}) {
      Rng rng(row_seed++);
      Scheme scheme(make_config({order, rule, CipherMode::OTP, options.tag_bits}, rng), rng());
      Oracle oracle(scheme, OracleMode::Leaky);

      MatrixRow row;
      row.order = order;
      row.rule = rule;
      row.attack = rule == FormatRule::EncK ? "enck" : "enci";
      row.expected_secure = order == SchemeOrder::FAE || order == SchemeOrder::FEA ||
                            (order == SchemeOrder::EncryptOnly && rule == FormatRule::EncI);

      for (std::size_t trial = 0; trial < options.trials; ++trial) {
        const BitString p = random_bits(rng, options.plaintext_bits);
        const WireMessage w = scheme.protect(p, rng);
        const auto bits = all_bits(p.size());
        auto res = rule == FormatRule::EncK ? attack_enck_bits(oracle, w, bits) : attack_enci_bits(oracle, w, bits);
        grade(res, p);
        ++row.trials;
        row.bits_targeted += p.size();
        row.queries += res.queries_used;
        if (res.status == AttackStatus::Success) row.bits_recovered += res.recovered.size();
        if (res.status == AttackStatus::Failed) ++row.failed;
      }

      WireMessage w;
      while (row.manipulations < options.manipulations) {
        if (row.manipulations % 100 == 0) w = scheme.protect(random_bits(rng, options.plaintext_bits), rng);
        WireMessage m = w;
        const std::size_t flips = 1 + rng() % 8;
        for (std::size_t k = 0; k < flips; ++k) m.body.flip(rng() % m.body.size());
        if (m.body == w.body) continue;  // flips cancelled out
        ++row.manipulations;
        if (oracle.query(m).accepted()) ++row.forged_accepts;
      }

      row.secure = row.bits_recovered == 0 && (order == SchemeOrder::EncryptOnly || row.forged_accepts == 0);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace authenc
