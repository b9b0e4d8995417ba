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

#include "authenc/random.hpp"

namespace authenc {

Bytes random_bytes(Rng& rng, std::size_t nbytes) {
  Bytes out(nbytes);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < nbytes; ++i) {
    if (i % 8 == 0) word = rng();
    out[i] = static_cast<std::uint8_t>(word >> (8 * (i % 8)));
  }
  return out;
}

BitString random_bits(Rng& rng, std::size_t nbits) {
  return BitString::from_bytes(random_bytes(rng, (nbits + 7) / 8), nbits);
}

Block random_block(Rng& rng) {
  Block b{};
  auto bytes = random_bytes(rng, b.size());
  std::copy(bytes.begin(), bytes.end(), b.begin());
  return b;
}

}  // namespace authenc
