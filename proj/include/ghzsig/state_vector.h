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

#ifndef GHZSIG_STATE_VECTOR_H
#define GHZSIG_STATE_VECTOR_H

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ghzsig/bits.h"
#include "ghzsig/rng.h"

namespace ghzsig {

using Amplitude = std::complex<double>;

/// 1-based qubit position. Qubit 1 is the leftmost ket position and the most
/// significant bit of the amplitude index, so |q1 q2 ... qk> reads directly as
/// a binary number.
class QubitIndex {
   public:
    constexpr explicit QubitIndex(std::size_t one_based) : value_(one_based) {
    }
    constexpr std::size_t value() const {
        return value_;
    }
    friend constexpr bool operator==(QubitIndex, QubitIndex) = default;

   private:
    std::size_t value_;
};

enum class BellOutcome { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

std::string_view name(BellOutcome outcome);

struct MeasurementResult {
    Bits bits;           // one entry per measured qubit, in request order
    double probability;  // Born probability of this outcome before collapse
};

struct BellMeasurement {
    BellOutcome outcome;
    double probability;
};

/// Dense pure state over k qubits.
///
/// Invariants: amplitudes().size() == 2^k and the L2 norm is 1 (checked at
/// construction to 1e-9; every gate is unitary). Gates mutate in place.
class StateVector {
   public:
    static constexpr std::size_t kMaxQubits = 20;

    /// |0...0> on num_qubits qubits.
    explicit StateVector(std::size_t num_qubits);

    /// Throws std::invalid_argument unless the length is a power of two
    /// (at least 2) and the norm is 1 within 1e-9.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::span<const Amplitude> amplitudes() const {
        return amplitudes_;
    }
    Amplitude amplitude(std::size_t basis_index) const {
        return amplitudes_.at(basis_index);
    }
    /// Amplitude of the basis state spelled by a k-character bit string.
    Amplitude amplitude(std::string_view bits) const;

    double norm() const;

    void apply_pauli_x(QubitIndex q);
    void apply_pauli_z(QubitIndex q);
    void apply_hadamard(QubitIndex q);
    void apply_cnot(QubitIndex control, QubitIndex target);
    void apply_cswap(QubitIndex control, QubitIndex a, QubitIndex b);

    /// One line per nonzero amplitude, "bits: re+imi" with 12 significant digits.
    std::string dump() const;

    /// Bit mask of qubit q within a basis index. Throws std::invalid_argument
    /// if q is outside 1..num_qubits().
    std::size_t mask_of(QubitIndex q) const;

   private:
    friend StateVector tensor(const StateVector& left, const StateVector& right);
    friend MeasurementResult measure_computational(StateVector&, std::span<const QubitIndex>, Rng&);
    friend BellMeasurement bell_measure(StateVector&, QubitIndex, QubitIndex, Rng&);

    StateVector(std::size_t num_qubits, std::vector<Amplitude> amplitudes);

    std::size_t num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

StateVector make_basis_state(std::size_t num_qubits, std::string_view bits);

/// (|000> + |111>)/sqrt(2).
StateVector make_ghz();

/// left (x) right; the qubits of `left` come first.
StateVector tensor(const StateVector& left, const StateVector& right);

/// <a|b>. Throws std::invalid_argument if qubit counts differ.
Amplitude inner_product(const StateVector& a, const StateVector& b);

/// ||a - b||_2 with no phase adjustment.
double l2_distance(const StateVector& a, const StateVector& b);

/// min over theta of ||a - e^{i theta} b||_2.
double distance_up_to_phase(const StateVector& a, const StateVector& b);

/// Samples the listed qubits in the computational basis and collapses `state`
/// onto the outcome. Throws std::invalid_argument for repeated or invalid
/// qubits and ConsistencyError if the norm has drifted more than 1e-6.
MeasurementResult measure_computational(StateVector& state, std::span<const QubitIndex> qubits, Rng& rng);

/// Outcome probabilities for projecting (q1, q2) onto the Bell basis, indexed
/// by static_cast<int>(BellOutcome).
std::array<double, 4> bell_probabilities(const StateVector& state, QubitIndex q1, QubitIndex q2);

/// Projective measurement of (q1, q2) onto |Phi+>, |Phi->, |Psi+>, |Psi->.
/// The measured pair is left in exactly the observed Bell state.
BellMeasurement bell_measure(StateVector& state, QubitIndex q1, QubitIndex q2, Rng& rng);

}  // namespace ghzsig

#endif
