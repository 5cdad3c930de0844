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

#include "ghzsig/qkd.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ghzsig/state_vector.h"

namespace ghzsig {

namespace {

enum class Basis : std::uint8_t { Rectilinear, Diagonal };

constexpr QubitIndex kQubit{1};

StateVector prepare(std::uint8_t bit, Basis basis) {
    StateVector s(1);
    if (bit) {
        s.apply_pauli_x(kQubit);
    }
    if (basis == Basis::Diagonal) {
        s.apply_hadamard(kQubit);
    }
    return s;
}

std::uint8_t measure_in(StateVector& s, Basis basis, Rng& rng) {
    if (basis == Basis::Diagonal) {
        s.apply_hadamard(kQubit);
    }
    std::array<QubitIndex, 1> q{kQubit};
    return measure_computational(s, q, rng).bits[0];
}

Basis random_basis(Rng& rng) {
    return rng.coin() ? Basis::Diagonal : Basis::Rectilinear;
}

}  // namespace

Bb84Report bb84_exchange(const Bb84Options& options, Rng& rng) {
    if (options.raw_count < Bb84Options::kMinRawCount) {
        throw std::invalid_argument("BB84 raw_count must be at least " + std::to_string(Bb84Options::kMinRawCount));
    }
    if (!(options.sample_fraction > 0.0 && options.sample_fraction < 1.0)) {
        throw std::invalid_argument("BB84 sample_fraction must lie in (0, 1)");
    }

    Bb84Report report;
    report.raw_count = options.raw_count;
    report.eve_present = options.eve_present;

    Bits alice_sifted;
    Bits bob_sifted;
    for (std::size_t i = 0; i < options.raw_count; i++) {
        std::uint8_t bit = rng.coin() ? 1 : 0;
        Basis alice_basis = random_basis(rng);
        StateVector photon = prepare(bit, alice_basis);

        if (options.eve_present) {
            Basis eve_basis = random_basis(rng);
            std::uint8_t seen = measure_in(photon, eve_basis, rng);
            photon = prepare(seen, eve_basis);
        }

        Basis bob_basis = random_basis(rng);
        std::uint8_t got = measure_in(photon, bob_basis, rng);
        if (bob_basis == alice_basis) {
            alice_sifted.push_back(bit);
            bob_sifted.push_back(got);
        }
    }
    report.sifted_count = alice_sifted.size();

    // Too few sifted positions to both estimate and keep anything.
    if (report.sifted_count < 2) {
        report.aborted = true;
        return report;
    }

    auto sample_count = static_cast<std::size_t>(std::llround(options.sample_fraction * report.sifted_count));
    sample_count = std::clamp<std::size_t>(sample_count, 1, report.sifted_count - 1);
    report.sample_count = sample_count;

    // Partial Fisher-Yates: the first sample_count entries become the sample.
    std::vector<std::size_t> order(report.sifted_count);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = 0; i < sample_count; i++) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(order.size() - i));
        std::swap(order[i], order[j]);
    }
    std::vector<bool> sampled(report.sifted_count, false);
    for (std::size_t i = 0; i < sample_count; i++) {
        std::size_t pos = order[i];
        sampled[pos] = true;
        report.sample_mismatches += alice_sifted[pos] != bob_sifted[pos];
    }
    report.qber = static_cast<double>(report.sample_mismatches) / static_cast<double>(sample_count);

    if (report.qber > options.qber_threshold) {
        report.aborted = true;
        return report;
    }

    Bits alice_key;
    Bits bob_key;
    for (std::size_t pos = 0; pos < report.sifted_count; pos++) {
        if (!sampled[pos]) {
            alice_key.push_back(alice_sifted[pos]);
            bob_key.push_back(bob_sifted[pos]);
        }
    }
    report.final_key = Key(std::move(alice_key));
    report.bob_key = Key(std::move(bob_key));
    return report;
}

nlohmann::ordered_json to_json(const Bb84Report& report) {
    nlohmann::ordered_json j;
    j["raw_count"] = report.raw_count;
    j["sifted_count"] = report.sifted_count;
    j["sample_count"] = report.sample_count;
    j["sample_mismatches"] = report.sample_mismatches;
    j["qber"] = report.qber;
    j["eve_present"] = report.eve_present;
    j["aborted"] = report.aborted;
    j["final_key_length"] = report.final_key.length();
    return j;
}

}  // namespace ghzsig
