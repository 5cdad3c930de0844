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

#ifndef GHZSIG_LINEAR_CODE_H
#define GHZSIG_LINEAR_CODE_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ghzsig/bits.h"
#include "json.hpp"

namespace ghzsig {

/// Binary linear code E: {0,1}^n -> {0,1}^m given by an m x n generator
/// matrix over GF(2). m is always a power of two and strictly greater than n,
/// and the generator always has full column rank n.
class LinearCode {
   public:
    /// Largest n accepted by min_distance().
    static constexpr std::size_t kMaxExhaustiveInputBits = 16;

    /// Seeded pseudorandom full-rank code with m the smallest power of two at
    /// or above c_requested * n (and above n).
    ///
    /// Throws std::invalid_argument for n == 0 or c_requested <= 1, and
    /// ConstructionError if no full-rank draw is found within the retry budget.
    static LinearCode make(std::size_t n, double c_requested, std::uint64_t seed);

    /// Code from explicit generator rows (m rows of n bits). Used for fixtures
    /// and deserialization; validates shape and rank.
    static LinearCode from_generator(std::vector<Bits> rows, double c_requested, std::uint64_t seed);

    /// Each input bit copied m/n times: row i carries input bit i / (m/n).
    /// m must be a power of two and a multiple of n, with m > n.
    static LinearCode repetition(std::size_t n, std::size_t m);

    std::size_t n() const {
        return n_;
    }
    std::size_t m() const {
        return rows_.size();
    }
    /// Effective expansion ratio m / n.
    double c() const {
        return static_cast<double>(m()) / static_cast<double>(n_);
    }
    double c_requested() const {
        return c_requested_;
    }
    std::uint64_t seed() const {
        return seed_;
    }
    const std::vector<Bits>& generator() const {
        return rows_;
    }

    /// generator * x over GF(2). Throws std::invalid_argument if |x| != n.
    Bits encode(std::span<const std::uint8_t> x) const;

    bool operator==(const LinearCode& other) const = default;

   private:
    LinearCode(std::size_t n, double c_requested, std::uint64_t seed, std::vector<Bits> rows);

    std::size_t n_;
    double c_requested_;
    std::uint64_t seed_;
    std::vector<Bits> rows_;
};

/// Rank over GF(2) of a set of equal-length bit rows.
std::size_t gf2_rank(std::vector<Bits> rows);

/// Smallest power of two >= max(ceil(c_requested * n), n + 1).
std::size_t codeword_length(std::size_t n, double c_requested);

/// Minimum Hamming weight over nonzero codewords, by enumerating all 2^n - 1
/// nonzero inputs. Throws CapabilityError if n exceeds kMaxExhaustiveInputBits.
std::size_t min_distance(const LinearCode& code);

/// {n, m, c_requested, seed, generator: [m bit strings]}.
nlohmann::ordered_json to_json(const LinearCode& code);
LinearCode linear_code_from_json(const nlohmann::json& j);

}  // namespace ghzsig

#endif
