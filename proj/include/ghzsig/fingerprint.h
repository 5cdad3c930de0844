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

#ifndef GHZSIG_FINGERPRINT_H
#define GHZSIG_FINGERPRINT_H

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>

#include "ghzsig/linear_code.h"
#include "ghzsig/rng.h"
#include "ghzsig/state_vector.h"

namespace ghzsig {

/// Default number of swap-test rounds when comparing fingerprints.
inline constexpr std::size_t kDefaultSwapRepetitions = 16;

/// The state (1/sqrt(m)) sum_i |i-1>|E_i(x)> over log2(m) + 1 qubits.
///
/// The index register holds i-1 in binary, most significant qubit first; the
/// final qubit holds codeword bit i. Fingerprints are move-only: a copy has to
/// be prepared again from the classical input by whoever holds it.
class FingerprintState {
   public:
    FingerprintState(const FingerprintState&) = delete;
    FingerprintState& operator=(const FingerprintState&) = delete;
    FingerprintState(FingerprintState&&) = default;
    FingerprintState& operator=(FingerprintState&&) = default;

    const StateVector& state() const {
        return state_;
    }
    const std::shared_ptr<const LinearCode>& code() const {
        return code_;
    }
    std::size_t num_qubits() const {
        return state_.num_qubits();
    }

   private:
    friend FingerprintState make_fingerprint(std::shared_ptr<const LinearCode> code, std::span<const std::uint8_t> x);
    friend bool swap_test(FingerprintState a, FingerprintState b, Rng& rng);

    FingerprintState(StateVector state, std::shared_ptr<const LinearCode> code);

    StateVector state_;
    std::shared_ptr<const LinearCode> code_;
};

/// Qubits in a fingerprint for codeword length m (a power of two): log2(m) + 1.
std::size_t fingerprint_qubits(std::size_t m);

/// Throws std::invalid_argument if |x| != code->n() or code is null.
FingerprintState make_fingerprint(std::shared_ptr<const LinearCode> code, std::span<const std::uint8_t> x);

/// <f(x)|f(y)> from the state vectors; equals 1 - d_H(E(x), E(y)) / m.
/// Throws std::invalid_argument if the two were built from different codes.
double overlap(const FingerprintState& a, const FingerprintState& b);

/// (1 + s^2) / 2.
double swap_accept_probability(double overlap);

/// Runs the swap-test circuit on |0> (x) a (x) b: H on the ancilla, a
/// controlled-SWAP of each register qubit pair, H on the ancilla, then an
/// ancilla measurement. Returns true (accept) on outcome 0. Both inputs are
/// consumed.
bool swap_test(FingerprintState a, FingerprintState b, Rng& rng);

enum class Comparison { Equal, Unequal };

/// Hands out a fresh fingerprint per call, or nullopt once exhausted.
using FingerprintSupplier = std::function<std::optional<FingerprintState>()>;

/// Up to `rounds` swap tests on fresh copies; Unequal as soon as one rejects.
/// Throws std::invalid_argument for rounds == 0 and ResourceError if a
/// supplier runs dry.
Comparison repeated_swap_test(const FingerprintSupplier& source_a, const FingerprintSupplier& source_b,
                              std::size_t rounds, Rng& rng);

}  // namespace ghzsig

#endif
