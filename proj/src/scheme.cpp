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

#include "authenc/scheme.hpp"

#include <stdexcept>

namespace authenc {

namespace {

BitString index_bits(std::uint64_t index) {
  Bytes b(8);
  for (std::size_t i = 0; i < 8; ++i) b[7 - i] = static_cast<std::uint8_t>(index >> (8 * i));
  return BitString::from_bytes(b);
}

// Cipher calls made by authenticate() on `nbits` of data.
std::uint64_t mac_blocks(std::size_t nbits) { return 1 + (nbits + kBlockBits - 1) / kBlockBits; }

void charge_validation(WorkMeter& meter, const BitString& t) {
  meter.charge((t.size() + kBlockBits - 1) / kBlockBits);
}

}  // namespace

std::string_view to_string(SchemeOrder order) {
  switch (order) {
    case SchemeOrder::EncryptOnly: return "encrypt-only";
    case SchemeOrder::AFE: return "afe";
    case SchemeOrder::FAE: return "fae";
    case SchemeOrder::FEA: return "fea";
  }
  return "?";
}

std::string_view to_string(CipherMode mode) {
  switch (mode) {
    case CipherMode::OTP: return "otp";
    case CipherMode::CBC: return "cbc";
    case CipherMode::CTR: return "ctr";
  }
  return "?";
}

std::optional<SchemeOrder> parse_scheme_order(std::string_view token) {
  for (auto o : {SchemeOrder::EncryptOnly, SchemeOrder::AFE, SchemeOrder::FAE, SchemeOrder::FEA})
    if (token == to_string(o)) return o;
  return std::nullopt;
}

std::optional<CipherMode> parse_cipher_mode(std::string_view token) {
  for (auto m : {CipherMode::OTP, CipherMode::CBC, CipherMode::CTR})
    if (token == to_string(m)) return m;
  return std::nullopt;
}

std::string_view to_string(UnprotectOutcome::Kind kind) {
  switch (kind) {
    case UnprotectOutcome::Kind::Accept: return "ACCEPT";
    case UnprotectOutcome::Kind::Invalid: return "INVALID";
    case UnprotectOutcome::Kind::MacFailure: return "MAC_FAILURE";
  }
  return "?";
}

SchemeConfig make_config(const SchemeParams& params, Rng& rng) {
  return {params, CipherKey::aes128(random_bytes(rng, 16)), CipherKey::aes128(random_bytes(rng, 16))};
}

std::uint64_t PadLedger::issue(std::size_t nbits) {
  if (pads_.size() >= capacity_) throw Exhausted("pad ledger exhausted");
  pads_.push_back(Pad{random_bits(rng_, nbits)});
  return pads_.size() - 1;
}

const Pad* PadLedger::find(std::uint64_t index) const {
  return index < pads_.size() ? &pads_[index] : nullptr;
}

Scheme::Scheme(SchemeConfig config, std::uint64_t pad_seed)
    : config_(std::move(config)), pads_(pad_seed) {
  const auto& p = config_.params;
  if (p.order != SchemeOrder::EncryptOnly && (p.tag_bits < 32 || p.tag_bits > 128))
    throw std::invalid_argument("tag length must lie in [32, 128] bits");
  if (p.cipher == CipherMode::CBC) {
    if (!is_padding_rule(p.rule))
      throw std::invalid_argument("CBC needs a block-aligned padding rule");
    if (p.order == SchemeOrder::FAE && p.tag_bits % kBlockBits != 0)
      throw std::invalid_argument("FAE over CBC needs a full-block tag so T || M stays aligned");
  }
  mac_cipher_ = make_cipher(config_.mac_key);
  if (mac_cipher_->block_bits() != kBlockBits) throw std::invalid_argument("MAC cipher must have 128-bit blocks");
  if (p.cipher != CipherMode::OTP) {
    enc_cipher_ = make_cipher(config_.enc_key);
    if (enc_cipher_->block_bits() != kBlockBits)
      throw std::invalid_argument("encryption cipher must have 128-bit blocks");
  }
}

BitString Scheme::authenticate(const BitString& data, const BlockCipher& mac_cipher) const {
  return cbc_mac(mac_cipher, length_prefixed(data), config_.params.tag_bits);
}

WireMessage Scheme::encrypt(const BitString& x, Rng& rng) {
  WireMessage w;
  switch (config_.params.cipher) {
    case CipherMode::OTP: {
      const auto index = pads_.issue(x.size());
      w.pad_index = index;
      w.body = otp_crypt(*pads_.find(index), x);
      break;
    }
    case CipherMode::CTR: {
      Block ctr0 = random_block(rng);
      std::fill(ctr0.end() - 4, ctr0.end(), 0);  // 2^32 blocks before the counter wraps
      w.iv = to_bits(ctr0);
      w.body = ctr_crypt(*enc_cipher_, ctr0, x);
      break;
    }
    case CipherMode::CBC: {
      if (x.size() % kBlockBits != 0) throw LengthError("CBC input is not block aligned");
      w.iv = random_bits(rng, kBlockBits);
      w.body = cbc_encrypt(*enc_cipher_, *w.iv, x);
      break;
    }
  }
  return w;
}

std::optional<BitString> Scheme::decrypt(const WireMessage& w, const BitString& ciphertext,
                                         const BlockCipher& enc) const {
  switch (config_.params.cipher) {
    case CipherMode::OTP: {
      if (!w.pad_index) return std::nullopt;
      const Pad* pad = pads_.find(*w.pad_index);
      if (!pad || pad->bits.size() < ciphertext.size()) return std::nullopt;
      return otp_crypt(*pad, ciphertext);
    }
    case CipherMode::CTR:
      if (!w.iv || w.iv->size() != kBlockBits) return std::nullopt;
      return ctr_crypt(enc, to_block(*w.iv), ciphertext);
    case CipherMode::CBC:
      if (!w.iv || w.iv->size() != kBlockBits || ciphertext.size() % kBlockBits != 0) return std::nullopt;
      return cbc_decrypt(enc, *w.iv, ciphertext);
  }
  return std::nullopt;
}

BitString Scheme::wire_header(const WireMessage& w) const {
  BitString h;
  if (w.pad_index) h.append(index_bits(*w.pad_index));
  if (w.iv) h.append(*w.iv);
  return h;
}

WireMessage Scheme::protect(const BitString& plaintext, Rng& rng) {
  const auto& p = config_.params;
  if (p.order == SchemeOrder::AFE)
    return protect_formatted(format(p.rule, plaintext + authenticate(plaintext), rng).body, rng);
  return protect_formatted(format(p.rule, plaintext, rng).body, rng);
}

WireMessage Scheme::protect_formatted(const BitString& t, Rng& rng) {
  switch (config_.params.order) {
    case SchemeOrder::EncryptOnly:
    case SchemeOrder::AFE:
      return encrypt(t, rng);
    case SchemeOrder::FAE:
      return encrypt(t + authenticate(t), rng);
    case SchemeOrder::FEA: {
      WireMessage w = encrypt(t, rng);
      w.body.append(authenticate(wire_header(w) + w.body));
      return w;
    }
  }
  throw std::logic_error("unreachable");
}

UnprotectOutcome Scheme::unprotect(const WireMessage& w, Evaluation evaluation, WorkMeter* meter) const {
  WorkMeter scratch;
  WorkMeter& m = meter ? *meter : scratch;
  const bool exhaustive = evaluation == Evaluation::Exhaustive;
  const auto& p = config_.params;
  const std::size_t tag = p.tag_bits;

  IdentityCipher unused;
  MeteredCipher enc(enc_cipher_ ? *enc_cipher_ : static_cast<const BlockCipher&>(unused), m);
  MeteredCipher mac(*mac_cipher_, m);

  switch (p.order) {
    case SchemeOrder::EncryptOnly: {
      auto t = decrypt(w, w.body, enc);
      if (!t) return UnprotectOutcome::invalid();
      charge_validation(m, *t);
      auto v = validate(p.rule, *t);
      return v ? UnprotectOutcome::accept(std::move(*v)) : UnprotectOutcome::invalid();
    }

    case SchemeOrder::AFE: {
      // Decrypt, validate, then check the MAC over the recovered plaintext.
      auto t = decrypt(w, w.body, enc);
      if (!t) return UnprotectOutcome::mac_failure();
      charge_validation(m, *t);
      auto v = validate(p.rule, *t);
      if (!v && !exhaustive) return UnprotectOutcome::invalid();
      bool mac_ok = false;
      BitString plain;
      const std::uint64_t before = m.units();
      if (v && v->size() >= tag) {
        plain = v->prefix(v->size() - tag);
        mac_ok = tags_equal(authenticate(plain, mac), v->suffix_from(plain.size()));
      }
      if (exhaustive) {
        // Bring the MAC work up to what the longest plaintext this body can
        // carry would cost, so it no longer depends on where the padding ended.
        const std::size_t longest = is_padding_rule(p.rule) ? t->size() : t->size() / 2;
        const std::uint64_t target = mac_blocks(longest > tag ? longest - tag : 0);
        for (Block b{}; m.units() - before < target;) b = mac.encrypt_block(b);
      }
      if (!v) return UnprotectOutcome::invalid();
      if (!mac_ok) return UnprotectOutcome::mac_failure();
      return UnprotectOutcome::accept(std::move(plain));
    }

    case SchemeOrder::FAE: {
      // The format verdict is released only after the MAC over T verifies.
      auto x = decrypt(w, w.body, enc);
      if (!x || x->size() < tag) return UnprotectOutcome::mac_failure();
      BitString t = x->prefix(x->size() - tag);
      const bool mac_ok = tags_equal(authenticate(t, mac), x->suffix_from(t.size()));
      if (!mac_ok && !exhaustive) return UnprotectOutcome::mac_failure();
      charge_validation(m, t);
      auto v = validate(p.rule, t);
      if (!mac_ok) return UnprotectOutcome::mac_failure();
      if (!v) return UnprotectOutcome::invalid();
      return UnprotectOutcome::accept(std::move(*v));
    }

    case SchemeOrder::FEA: {
      if (w.body.size() < tag) return UnprotectOutcome::mac_failure();
      BitString c = w.body.prefix(w.body.size() - tag);
      const bool mac_ok = tags_equal(authenticate(wire_header(w) + c, mac), w.body.suffix_from(c.size()));
      if (!mac_ok && !exhaustive) return UnprotectOutcome::mac_failure();
      auto t = decrypt(w, c, enc);
      if (!t) return UnprotectOutcome::mac_failure();
      charge_validation(m, *t);
      auto v = validate(p.rule, *t);
      if (!mac_ok) return UnprotectOutcome::mac_failure();
      if (!v) return UnprotectOutcome::invalid();
      return UnprotectOutcome::accept(std::move(*v));
    }
  }
  return UnprotectOutcome::mac_failure();
}

}  // namespace authenc
