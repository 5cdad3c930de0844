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

#ifndef GHZSIG_QKD_H
#define GHZSIG_QKD_H

#include <cstddef>

#include "ghzsig/otp.h"
#include "ghzsig/rng.h"
#include "json.hpp"

namespace ghzsig {

struct Bb84Options {
    static constexpr std::size_t kMinRawCount = 16;

    std::size_t raw_count = 1024;
    /// Full intercept-resend by Eve on every qubit.
    bool eve_present = false;
    /// Fraction of sifted positions disclosed for error estimation, in (0, 1).
    double sample_fraction = 0.25;
    /// Abort if the estimated QBER exceeds this.
    double qber_threshold = 0.11;
};

struct Bb84Report {
    std::size_t raw_count = 0;
    std::size_t sifted_count = 0;
    std::size_t sample_count = 0;
    std::size_t sample_mismatches = 0;
    double qber = 0;
    bool eve_present = false;
    bool aborted = false;
    /// Alice's copy of the key; empty when aborted.
    Key final_key;
    /// Bob's copy. Equal to final_key unless the channel was disturbed.
    Key bob_key;
};

/// Prepare-and-measure BB84 over single-qubit states. Alice sends random bits
/// in random rectilinear/diagonal bases; Bob measures in random bases; the
/// parties sift to matching bases, compare a random sample to estimate the
/// QBER, and keep the rest as key unless the QBER exceeds the threshold.
///
/// Throws std::invalid_argument if raw_count < kMinRawCount or
/// sample_fraction is outside (0, 1).
Bb84Report bb84_exchange(const Bb84Options& options, Rng& rng);

/// All report fields except key material; only the key length is written.
nlohmann::ordered_json to_json(const Bb84Report& report);

}  // namespace ghzsig

#endif
