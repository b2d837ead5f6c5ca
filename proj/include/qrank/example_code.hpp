// Copyright 2026 The qrank authors
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

#include <array>
#include <cstdint>

#include "qrank/f2linalg.hpp"

// The worked [[8, 4, 2]] construction (m = 2, k = 1 over GF(2^4)) used by
// the `example` subcommand and the regression suite. The expected values
// are frozen here so every build re-derives them and compares.

namespace qrank::example842 {

inline constexpr unsigned degree = 4;
inline constexpr uint64_t modulus = 0x13;  // x^4 + x + 1

// Self-dual basis (w^3, w^7, w^12, w^13) for w a root of the modulus.
inline constexpr std::array<uint64_t, 4> alpha = {0x8, 0xb, 0xf, 0xd};

// Normal-basis generator theta = w^3; orbit (w^3, w^6, w^12, w^9).
inline constexpr uint64_t theta = 0x8;
inline constexpr std::array<uint64_t, 4> theta_orbit = {0x8, 0xc, 0xf, 0xa};

inline MatF2 expected_t_form() {
    return MatF2::from_text(
        "0100\n"
        "1001\n"
        "0001\n"
        "0110\n");
}

inline MatF2 expected_d() {
    return MatF2::from_text(
        "1000\n"
        "0010\n"
        "0100\n"
        "1001\n");
}

// The four stabilizer generators of the resulting code.
inline constexpr std::array<const char*, 4> stabilizer_strings = {
    "XI | YX | IX | IY",
    "ZX | XY | IY | YY",
    "YZ | XZ | YY | ZY",
    "ZI | XX | ZY | IZ",
};

inline constexpr unsigned expected_n = 8;
inline constexpr unsigned expected_k = 4;
inline constexpr unsigned expected_d_r = 2;

}  // namespace qrank::example842
