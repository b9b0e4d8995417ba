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

#include "authenc/ccm.hpp"

#include <algorithm>
#include <cctype>
#include <string_view>

#include "authenc/modes.hpp"

namespace authenc {

namespace {

void check_inputs(const BlockCipher& cipher, const CcmParams& params, std::span<const std::uint8_t> nonce,
                  std::size_t adata_len, std::size_t payload_len) {
  params.check();
  if (cipher.block_bytes() != kBlockBytes) throw CcmError("CCM: 128-bit block cipher required");
  if (nonce.size() != params.nonce_len) throw CcmError("CCM: nonce length does not match parameters");
  if (adata_len > kMaxCcmAdata) throw CcmError("CCM: associated data too long");
  const std::size_t q = params.q();
  if (q < 8 && payload_len >> (8 * q) != 0) throw CcmError("CCM: payload too long for the length field");
}

void append_padded(std::vector<Block>& out, std::span<const std::uint8_t> data) {
  for (std::size_t off = 0; off < data.size(); off += kBlockBytes) {
    Block b{};
    std::copy_n(data.begin() + static_cast<std::ptrdiff_t>(off), std::min(kBlockBytes, data.size() - off),
                b.begin());
    out.push_back(b);
  }
}

Block cbc_mac_blocks(const BlockCipher& cipher, const std::vector<Block>& blocks) {
  Block chain{};
  for (const auto& b : blocks) chain = cipher.encrypt_block(xor_block(chain, b));
  return chain;
}

// XORs data with S_1, S_2, ...
Bytes ctr_payload(const BlockCipher& cipher, const CcmParams& params, std::span<const std::uint8_t> nonce,
                  std::span<const std::uint8_t> data) {
  Bytes out(data.begin(), data.end());
  for (std::size_t off = 0, i = 1; off < out.size(); off += kBlockBytes, ++i) {
    const Block s = cipher.encrypt_block(ccm_counter_block(params, nonce, i));
    for (std::size_t j = 0; j < kBlockBytes && off + j < out.size(); ++j) out[off + j] ^= s[j];
  }
  return out;
}

Bytes masked_tag(const BlockCipher& cipher, const CcmParams& params, std::span<const std::uint8_t> nonce,
                 std::span<const std::uint8_t> adata, std::span<const std::uint8_t> payload,
                 std::uint64_t mask_index) {
  const Block mac = cbc_mac_blocks(cipher, ccm_format(params, nonce, adata, payload));
  const Block s = cipher.encrypt_block(ccm_counter_block(params, nonce, mask_index));
  Bytes tag(params.tag_len);
  for (std::size_t i = 0; i < tag.size(); ++i) tag[i] = mac[i] ^ s[i];
  return tag;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

void CcmParams::check() const {
  if (nonce_len < 7 || nonce_len > 13) throw CcmError("CCM: nonce length must be 7..13 bytes");
  if (tag_len < 4 || tag_len > 16 || tag_len % 2 != 0) throw CcmError("CCM: tag length must be 4,6,...,16 bytes");
}

std::vector<Block> ccm_format(const CcmParams& params, std::span<const std::uint8_t> nonce,
                              std::span<const std::uint8_t> adata, std::span<const std::uint8_t> payload) {
  params.check();
  if (nonce.size() != params.nonce_len) throw CcmError("CCM: nonce length does not match parameters");
  if (adata.size() > kMaxCcmAdata) throw CcmError("CCM: associated data too long");
  const std::size_t q = params.q();
  if (q < 8 && payload.size() >> (8 * q) != 0) throw CcmError("CCM: payload too long for the length field");

  std::vector<Block> out;
  Block b0{};
  b0[0] = static_cast<std::uint8_t>((adata.empty() ? 0 : 64) + 8 * ((params.tag_len - 2) / 2) + (q - 1));
  std::copy(nonce.begin(), nonce.end(), b0.begin() + 1);
  std::uint64_t len = payload.size();
  for (std::size_t i = 0; i < q; ++i, len >>= 8) b0[15 - i] = static_cast<std::uint8_t>(len & 0xff);
  out.push_back(b0);

  if (!adata.empty()) {
    Bytes encoded;
    encoded.reserve(adata.size() + 2);
    encoded.push_back(static_cast<std::uint8_t>(adata.size() >> 8));
    encoded.push_back(static_cast<std::uint8_t>(adata.size()));
    encoded.insert(encoded.end(), adata.begin(), adata.end());
    append_padded(out, encoded);
  }
  append_padded(out, payload);
  return out;
}

Block ccm_counter_block(const CcmParams& params, std::span<const std::uint8_t> nonce, std::uint64_t index) {
  params.check();
  if (nonce.size() != params.nonce_len) throw CcmError("CCM: nonce length does not match parameters");
  Block ctr{};
  const std::size_t q = params.q();
  ctr[0] = static_cast<std::uint8_t>(q - 1);
  std::copy(nonce.begin(), nonce.end(), ctr.begin() + 1);
  for (std::size_t i = 0; i < q && i < 8; ++i, index >>= 8) ctr[15 - i] = static_cast<std::uint8_t>(index & 0xff);
  return ctr;
}

namespace detail {

Bytes ccm_encrypt_masked_with(const BlockCipher& cipher, const CcmParams& params,
                              std::span<const std::uint8_t> nonce, std::span<const std::uint8_t> adata,
                              std::span<const std::uint8_t> payload, std::uint64_t mask_index) {
  check_inputs(cipher, params, nonce, adata.size(), payload.size());
  Bytes out = ctr_payload(cipher, params, nonce, payload);
  Bytes tag = masked_tag(cipher, params, nonce, adata, payload, mask_index);
  out.insert(out.end(), tag.begin(), tag.end());
  return out;
}

std::optional<Bytes> ccm_decrypt_masked_with(const BlockCipher& cipher, const CcmParams& params,
                                             std::span<const std::uint8_t> nonce,
                                             std::span<const std::uint8_t> adata,
                                             std::span<const std::uint8_t> ciphertext, std::uint64_t mask_index) {
  params.check();
  const bool long_enough = ciphertext.size() >= params.tag_len;
  const std::size_t body_len = long_enough ? ciphertext.size() - params.tag_len : ciphertext.size();
  const bool adata_ok = adata.size() <= kMaxCcmAdata;
  check_inputs(cipher, params, nonce, 0, body_len);

  // Structural defects still run the full decryption and MAC.
  auto body = ciphertext.first(body_len);
  Bytes payload = ctr_payload(cipher, params, nonce, body);
  Bytes expected = masked_tag(cipher, params, nonce, adata_ok ? adata : adata.first(0), payload, mask_index);

  std::uint8_t diff = long_enough && adata_ok ? 0 : 1;
  auto received = long_enough ? ciphertext.subspan(body_len) : std::span<const std::uint8_t>();
  for (std::size_t i = 0; i < expected.size(); ++i) diff |= expected[i] ^ (i < received.size() ? received[i] : 0);
  if (diff != 0) return std::nullopt;
  return payload;
}

}  // namespace detail

Bytes ccm_encrypt(const BlockCipher& cipher, const CcmParams& params, std::span<const std::uint8_t> nonce,
                  std::span<const std::uint8_t> adata, std::span<const std::uint8_t> payload) {
  return detail::ccm_encrypt_masked_with(cipher, params, nonce, adata, payload, 0);
}

std::optional<Bytes> ccm_decrypt(const BlockCipher& cipher, const CcmParams& params,
                                 std::span<const std::uint8_t> nonce, std::span<const std::uint8_t> adata,
                                 std::span<const std::uint8_t> ciphertext) {
  return detail::ccm_decrypt_masked_with(cipher, params, nonce, adata, ciphertext, 0);
}

std::vector<CcmVector> parse_ccm_vectors(std::istream& in) {
  std::vector<CcmVector> out;
  CcmVector cur;
  unsigned seen = 0;  // bit mask of Key, Nonce, Adata, Payload
  std::string raw;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("vector file line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected NAME = HEX");
    const std::string_view name = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    auto hex = [&]() {
      try {
        return from_hex(value);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      return Bytes{};
    };
    if (name == "Key") {
      cur.key = hex();
      seen |= 1;
    } else if (name == "Nonce") {
      cur.nonce = hex();
      seen |= 2;
    } else if (name == "Adata") {
      cur.adata = hex();
      seen |= 4;
    } else if (name == "Payload") {
      cur.payload = hex();
      seen |= 8;
    } else if (name == "CT") {
      if (seen != 15) fail("CT before Key, Nonce, Adata and Payload");
      cur.ct = hex();
      if (cur.ct.size() < cur.payload.size()) fail("CT shorter than Payload");
      cur.line = lineno;
      out.push_back(cur);
      // Key and Nonce carry over to the next record; the rest must be restated.
      seen = 3;
    }
  }
  return out;
}

CcmVectorResult run_ccm_vector(const CcmVector& v) {
  CcmVectorResult r;
  try {
    Aes128 aes(v.key);
    CcmParams params{v.nonce.size(), v.ct.size() - v.payload.size()};
    const Bytes ct = ccm_encrypt(aes, params, v.nonce, v.adata, v.payload);
    r.encrypt_ok = ct == v.ct;
    if (!r.encrypt_ok) r.detail = "encrypt produced " + to_hex(ct);
    const auto pt = ccm_decrypt(aes, params, v.nonce, v.adata, v.ct);
    r.decrypt_ok = pt.has_value() && *pt == v.payload;
    if (!r.decrypt_ok && r.detail.empty()) r.detail = pt ? "decrypt produced " + to_hex(*pt) : "decrypt: INVALID";
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

}  // namespace authenc
