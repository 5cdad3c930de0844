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

#include "ghzsig/bits.h"

#include <stdexcept>

namespace ghzsig {

Bits parse_bits(std::string_view text) {
    Bits out;
    out.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string may only contain '0' and '1': \"" + std::string(text) + "\"");
        }
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

std::string to_string(std::span<const std::uint8_t> bits) {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

Bits xor_bits(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("xor_bits: length mismatch");
    }
    Bits out(a.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        out[i] = a[i] ^ b[i];
    }
    return out;
}

std::size_t hamming_weight(std::span<const std::uint8_t> bits) {
    std::size_t w = 0;
    for (auto b : bits) {
        w += b != 0;
    }
    return w;
}

std::size_t hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("hamming_distance: length mismatch");
    }
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        d += (a[i] != 0) != (b[i] != 0);
    }
    return d;
}

std::vector<std::size_t> set_positions(std::span<const std::uint8_t> bits) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bits.size(); i++) {
        if (bits[i]) {
            out.push_back(i + 1);
        }
    }
    return out;
}

Bits mask_from_positions(std::size_t n, std::span<const std::size_t> positions) {
    Bits mask(n, 0);
    for (auto p : positions) {
        if (p < 1 || p > n) {
            throw std::invalid_argument(
                "position " + std::to_string(p) + " outside 1.." + std::to_string(n));
        }
        mask[p - 1] = 1;
    }
    return mask;
}

}  // namespace ghzsig
