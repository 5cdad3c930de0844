// Copyright 2026 The ghzsig Authors
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

#ifndef GHZSIG_BITS_H
#define GHZSIG_BITS_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ghzsig {

/// A classical bit string. Each element is 0 or 1; element 0 is the leftmost bit.
using Bits = std::vector<std::uint8_t>;

/// Parses a string of '0'/'1' characters. Throws std::invalid_argument otherwise.
Bits parse_bits(std::string_view text);

std::string to_string(std::span<const std::uint8_t> bits);

/// Element-wise XOR. Throws std::invalid_argument on length mismatch.
Bits xor_bits(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

std::size_t hamming_weight(std::span<const std::uint8_t> bits);

/// Throws std::invalid_argument on length mismatch.
std::size_t hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

/// 1-based positions of the set bits, ascending.
std::vector<std::size_t> set_positions(std::span<const std::uint8_t> bits);

/// Mask of length n with the given 1-based positions set.
/// Throws std::invalid_argument for positions outside 1..n.
Bits mask_from_positions(std::size_t n, std::span<const std::size_t> positions);

}  // namespace ghzsig

#endif
