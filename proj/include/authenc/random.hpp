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

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "authenc/bitstring.hpp"

namespace authenc {

/// Every randomized operation takes a caller-owned, seedable engine.
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20061102;

BitString random_bits(Rng& rng, std::size_t nbits);
Bytes random_bytes(Rng& rng, std::size_t nbytes);
Block random_block(Rng& rng);

}  // namespace authenc
