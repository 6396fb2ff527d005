// Copyright 2026 The qswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSWITCH_RNG_HPP
#define QSWITCH_RNG_HPP

#include <cstdint>
#include <random>

namespace qswitch {

/// Seedable 64-bit generator owned by the caller.
using Rng = std::mt19937_64;

// The std distributions are implementation-defined, so draws are derived
// from the raw engine output to keep transcripts identical across
// standard libraries.

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection; bound must be positive.
inline std::uint64_t uniform_index(Rng &rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = rng();
    while (x >= limit) {
        x = rng();
    }
    return x % bound;
}

}  // namespace qswitch

#endif  // QSWITCH_RNG_HPP
