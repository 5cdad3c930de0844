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

#ifndef GHZSIG_RNG_H
#define GHZSIG_RNG_H

#include <cstdint>
#include <random>
#include <string_view>

namespace ghzsig {

/// Seedable, splittable random source.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the standard.
/// The conversions to doubles and bounded integers are done here rather than
/// through <random> distributions, whose algorithms are implementation defined,
/// so a seed reproduces the same outcomes on every standard library.
///
/// split() derives an independent child stream from (seed, label) without
/// advancing the parent. Every stochastic routine in the library takes an
/// explicit Rng&.
class Rng {
   public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed);

    std::uint64_t seed() const {
        return seed_;
    }

    std::uint64_t next_u64() {
        return engine_();
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Uniform integer in [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound);

    bool coin() {
        return (engine_() >> 63) != 0;
    }

    Rng split(std::uint64_t stream) const;
    Rng split(std::string_view label) const;

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return ~result_type{0};
    }
    result_type operator()() {
        return engine_();
    }

   private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

}  // namespace ghzsig

#endif
