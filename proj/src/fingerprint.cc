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

#include "ghzsig/fingerprint.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ghzsig/errors.h"

namespace ghzsig {

namespace {

void check_same_code(const FingerprintState& a, const FingerprintState& b) {
    if (a.code() != b.code() && !(*a.code() == *b.code())) {
        throw std::invalid_argument("fingerprints were built from different codes");
    }
}

}  // namespace

FingerprintState::FingerprintState(StateVector state, std::shared_ptr<const LinearCode> code)
    : state_(std::move(state)), code_(std::move(code)) {
}

std::size_t fingerprint_qubits(std::size_t m) {
    if (m < 2 || !std::has_single_bit(m)) {
        throw std::invalid_argument("codeword length must be a power of two >= 2");
    }
    return static_cast<std::size_t>(std::countr_zero(m)) + 1;
}

FingerprintState make_fingerprint(std::shared_ptr<const LinearCode> code, std::span<const std::uint8_t> x) {
    if (!code) {
        throw std::invalid_argument("make_fingerprint: null code");
    }
    Bits word = code->encode(x);
    std::size_t m = code->m();
    std::size_t k = fingerprint_qubits(m);
    if (k > StateVector::kMaxQubits) {
        throw std::invalid_argument("fingerprint would need " + std::to_string(k) + " qubits");
    }
    std::vector<Amplitude> amps(std::size_t{1} << k, 0.0);
    double weight = 1.0 / std::sqrt(static_cast<double>(m));
    for (std::size_t i = 0; i < m; i++) {
        amps[(i << 1) | word[i]] = weight;
    }
    return FingerprintState(StateVector::from_amplitudes(std::move(amps)), std::move(code));
}

double overlap(const FingerprintState& a, const FingerprintState& b) {
    check_same_code(a, b);
    return inner_product(a.state(), b.state()).real();
}

double swap_accept_probability(double overlap) {
    return (1.0 + overlap * overlap) / 2.0;
}

bool swap_test(FingerprintState a, FingerprintState b, Rng& rng) {
    check_same_code(a, b);
    std::size_t k = a.num_qubits();
    StateVector reg = tensor(tensor(StateVector(1), a.state_), b.state_);
    const QubitIndex ancilla{1};
    reg.apply_hadamard(ancilla);
    for (std::size_t j = 1; j <= k; j++) {
        reg.apply_cswap(ancilla, QubitIndex{1 + j}, QubitIndex{1 + k + j});
    }
    reg.apply_hadamard(ancilla);
    std::array<QubitIndex, 1> measured{ancilla};
    return measure_computational(reg, measured, rng).bits[0] == 0;
}

Comparison repeated_swap_test(const FingerprintSupplier& source_a, const FingerprintSupplier& source_b,
                              std::size_t rounds, Rng& rng) {
    if (rounds == 0) {
        throw std::invalid_argument("repeated_swap_test needs at least one round");
    }
    for (std::size_t round = 0; round < rounds; round++) {
        auto a = source_a();
        auto b = source_b();
        if (!a || !b) {
            throw ResourceError("fingerprint supply exhausted after " + std::to_string(round) + " of " +
                                std::to_string(rounds) + " swap tests");
        }
        if (!swap_test(std::move(*a), std::move(*b), rng)) {
            return Comparison::Unequal;
        }
    }
    return Comparison::Equal;
}

}  // namespace ghzsig
