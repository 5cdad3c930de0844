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

#include "ghzsig/state_vector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "ghzsig/errors.h"

namespace ghzsig {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_qubit_count(std::size_t k) {
    if (k < 1 || k > StateVector::kMaxQubits) {
        throw std::invalid_argument(
            "qubit count must be in 1.." + std::to_string(StateVector::kMaxQubits) + ", got " + std::to_string(k));
    }
}

void check_norm_for_measurement(const StateVector& state) {
    double n = state.norm();
    if (std::abs(n - 1.0) > 1e-6) {
        throw ConsistencyError("cannot measure a state with norm " + std::to_string(n));
    }
}

}  // namespace

std::string_view name(BellOutcome outcome) {
    switch (outcome) {
        case BellOutcome::PhiPlus:
            return "PhiPlus";
        case BellOutcome::PhiMinus:
            return "PhiMinus";
        case BellOutcome::PsiPlus:
            return "PsiPlus";
        case BellOutcome::PsiMinus:
            return "PsiMinus";
    }
    return "?";
}

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits);
    amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(std::size_t num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    std::size_t size = amplitudes.size();
    if (size < 2 || (size & (size - 1)) != 0) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2, got " + std::to_string(size));
    }
    std::size_t k = static_cast<std::size_t>(std::countr_zero(size));
    check_qubit_count(k);
    StateVector out(k, std::move(amplitudes));
    double n = out.norm();
    if (std::abs(n - 1.0) > 1e-9) {
        throw std::invalid_argument("amplitudes are not normalized (norm " + std::to_string(n) + ")");
    }
    return out;
}

Amplitude StateVector::amplitude(std::string_view bits) const {
    if (bits.size() != num_qubits_) {
        throw std::invalid_argument("basis label length does not match qubit count");
    }
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("basis label may only contain '0' and '1'");
        }
        index = (index << 1) | static_cast<std::size_t>(c - '0');
    }
    return amplitudes_[index];
}

double StateVector::norm() const {
    double total = 0;
    for (const auto& a : amplitudes_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

std::size_t StateVector::mask_of(QubitIndex q) const {
    if (q.value() < 1 || q.value() > num_qubits_) {
        throw std::invalid_argument(
            "qubit index " + std::to_string(q.value()) + " outside 1.." + std::to_string(num_qubits_));
    }
    return std::size_t{1} << (num_qubits_ - q.value());
}

void StateVector::apply_pauli_x(QubitIndex q) {
    std::size_t m = mask_of(q);
    for (std::size_t i = 0; i < amplitudes_.size(); i++) {
        if (!(i & m)) {
            std::swap(amplitudes_[i], amplitudes_[i | m]);
        }
    }
}

void StateVector::apply_pauli_z(QubitIndex q) {
    std::size_t m = mask_of(q);
    for (std::size_t i = 0; i < amplitudes_.size(); i++) {
        if (i & m) {
            amplitudes_[i] = -amplitudes_[i];
        }
    }
}

void StateVector::apply_hadamard(QubitIndex q) {
    std::size_t m = mask_of(q);
    for (std::size_t i = 0; i < amplitudes_.size(); i++) {
        if (!(i & m)) {
            Amplitude a0 = amplitudes_[i];
            Amplitude a1 = amplitudes_[i | m];
            amplitudes_[i] = (a0 + a1) * kInvSqrt2;
            amplitudes_[i | m] = (a0 - a1) * kInvSqrt2;
        }
    }
}

void StateVector::apply_cnot(QubitIndex control, QubitIndex target) {
    std::size_t c = mask_of(control);
    std::size_t t = mask_of(target);
    if (c == t) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    for (std::size_t i = 0; i < amplitudes_.size(); i++) {
        if ((i & c) && !(i & t)) {
            std::swap(amplitudes_[i], amplitudes_[i | t]);
        }
    }
}

void StateVector::apply_cswap(QubitIndex control, QubitIndex a, QubitIndex b) {
    std::size_t c = mask_of(control);
    std::size_t ma = mask_of(a);
    std::size_t mb = mask_of(b);
    if (c == ma || c == mb || ma == mb) {
        throw std::invalid_argument("controlled-SWAP qubits must be pairwise distinct");
    }
    for (std::size_t i = 0; i < amplitudes_.size(); i++) {
        // Visit each |..1..a=1..b=0..> once and exchange it with its partner.
        if ((i & c) && (i & ma) && !(i & mb)) {
            std::swap(amplitudes_[i], amplitudes_[(i & ~ma) | mb]);
        }
    }
}

std::string StateVector::dump() const {
    std::string out;
    char buf[96];
    for (std::size_t i = 0; i < amplitudes_.size(); i++) {
        const Amplitude& a = amplitudes_[i];
        // Treat rounding residue from cancelling paths as zero.
        if (std::abs(a) <= 1e-15) {
            continue;
        }
        for (std::size_t q = num_qubits_; q-- > 0;) {
            out.push_back(((i >> q) & 1) ? '1' : '0');
        }
        std::snprintf(buf, sizeof(buf), ": %.12g%+.12gi\n", a.real(), a.imag());
        out += buf;
    }
    return out;
}

StateVector make_basis_state(std::size_t num_qubits, std::string_view bits) {
    if (bits.size() != num_qubits) {
        throw std::invalid_argument(
            "basis state needs " + std::to_string(num_qubits) + " bits, got " + std::to_string(bits.size()));
    }
    StateVector s(num_qubits);
    for (std::size_t q = 1; q <= num_qubits; q++) {
        char c = bits[q - 1];
        if (c == '1') {
            s.apply_pauli_x(QubitIndex{q});
        } else if (c != '0') {
            throw std::invalid_argument("basis state bits may only contain '0' and '1'");
        }
    }
    return s;
}

StateVector make_ghz() {
    std::vector<Amplitude> amps(8, 0.0);
    amps[0b000] = kInvSqrt2;
    amps[0b111] = kInvSqrt2;
    return StateVector::from_amplitudes(std::move(amps));
}

StateVector tensor(const StateVector& left, const StateVector& right) {
    std::size_t k = left.num_qubits_ + right.num_qubits_;
    check_qubit_count(k);
    std::vector<Amplitude> amps(std::size_t{1} << k);
    std::size_t rsize = right.amplitudes_.size();
    for (std::size_t i = 0; i < left.amplitudes_.size(); i++) {
        if (left.amplitudes_[i] == Amplitude{0.0, 0.0}) {
            continue;
        }
        for (std::size_t j = 0; j < rsize; j++) {
            amps[i * rsize + j] = left.amplitudes_[i] * right.amplitudes_[j];
        }
    }
    return StateVector(k, std::move(amps));
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner_product: qubit counts differ");
    }
    Amplitude total{0.0, 0.0};
    auto aa = a.amplitudes();
    auto bb = b.amplitudes();
    for (std::size_t i = 0; i < aa.size(); i++) {
        total += std::conj(aa[i]) * bb[i];
    }
    return total;
}

double l2_distance(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("l2_distance: qubit counts differ");
    }
    double total = 0;
    auto aa = a.amplitudes();
    auto bb = b.amplitudes();
    for (std::size_t i = 0; i < aa.size(); i++) {
        total += std::norm(aa[i] - bb[i]);
    }
    return std::sqrt(total);
}

double distance_up_to_phase(const StateVector& a, const StateVector& b) {
    // ||a - e^{it} b||^2 = |a|^2 + |b|^2 - 2 Re(e^{it} <a|b>), minimized at |<a|b>|.
    double na = a.norm();
    double nb = b.norm();
    double sq = na * na + nb * nb - 2 * std::abs(inner_product(a, b));
    return std::sqrt(std::max(0.0, sq));
}

MeasurementResult measure_computational(StateVector& state, std::span<const QubitIndex> qubits, Rng& rng) {
    std::vector<std::size_t> masks;
    masks.reserve(qubits.size());
    for (auto q : qubits) {
        std::size_t m = state.mask_of(q);
        for (auto seen : masks) {
            if (seen == m) {
                throw std::invalid_argument("measure_computational: repeated qubit " + std::to_string(q.value()));
            }
        }
        masks.push_back(m);
    }
    if (masks.empty()) {
        throw std::invalid_argument("measure_computational: no qubits given");
    }
    check_norm_for_measurement(state);

    auto outcome_of = [&](std::size_t basis_index) {
        std::size_t o = 0;
        for (auto m : masks) {
            o = (o << 1) | ((basis_index & m) ? 1 : 0);
        }
        return o;
    };

    std::vector<double> probs(std::size_t{1} << masks.size(), 0.0);
    for (std::size_t i = 0; i < state.amplitudes_.size(); i++) {
        probs[outcome_of(i)] += std::norm(state.amplitudes_[i]);
    }

    double u = rng.uniform();
    std::size_t chosen = probs.size();
    double acc = 0;
    for (std::size_t o = 0; o < probs.size(); o++) {
        if (probs[o] <= 0) {
            continue;
        }
        acc += probs[o];
        chosen = o;
        if (u < acc) {
            break;
        }
    }
    // If u lands past the accumulated total through rounding, `chosen` is the
    // last outcome with nonzero probability.

    double p = probs[chosen];
    double scale = 1.0 / std::sqrt(p);
    for (std::size_t i = 0; i < state.amplitudes_.size(); i++) {
        if (outcome_of(i) == chosen) {
            state.amplitudes_[i] *= scale;
        } else {
            state.amplitudes_[i] = 0.0;
        }
    }

    MeasurementResult result{Bits(masks.size()), p};
    for (std::size_t j = 0; j < masks.size(); j++) {
        result.bits[j] = static_cast<std::uint8_t>((chosen >> (masks.size() - 1 - j)) & 1);
    }
    return result;
}

namespace {

struct BellPair {
    std::size_t m1;
    std::size_t m2;
};

BellPair bell_masks(const StateVector& state, QubitIndex q1, QubitIndex q2) {
    std::size_t m1 = state.mask_of(q1);
    std::size_t m2 = state.mask_of(q2);
    if (m1 == m2) {
        throw std::invalid_argument("Bell measurement needs two distinct qubits");
    }
    return {m1, m2};
}

// Coefficient of the Bell vector `b` on the pair, for the rest of the register
// fixed at basis index `base` (which has both pair bits clear).
Amplitude bell_coefficient(std::span<const Amplitude> amps, std::size_t base, BellPair p, BellOutcome b) {
    Amplitude a00 = amps[base];
    Amplitude a01 = amps[base | p.m2];
    Amplitude a10 = amps[base | p.m1];
    Amplitude a11 = amps[base | p.m1 | p.m2];
    switch (b) {
        case BellOutcome::PhiPlus:
            return (a00 + a11) * kInvSqrt2;
        case BellOutcome::PhiMinus:
            return (a00 - a11) * kInvSqrt2;
        case BellOutcome::PsiPlus:
            return (a01 + a10) * kInvSqrt2;
        case BellOutcome::PsiMinus:
            return (a01 - a10) * kInvSqrt2;
    }
    return 0.0;
}

constexpr std::array<BellOutcome, 4> kBellOrder = {
    BellOutcome::PhiPlus, BellOutcome::PhiMinus, BellOutcome::PsiPlus, BellOutcome::PsiMinus};

}  // namespace

std::array<double, 4> bell_probabilities(const StateVector& state, QubitIndex q1, QubitIndex q2) {
    BellPair p = bell_masks(state, q1, q2);
    std::array<double, 4> probs{};
    auto amps = state.amplitudes();
    for (std::size_t base = 0; base < amps.size(); base++) {
        if (base & (p.m1 | p.m2)) {
            continue;
        }
        for (auto b : kBellOrder) {
            probs[static_cast<int>(b)] += std::norm(bell_coefficient(amps, base, p, b));
        }
    }
    return probs;
}

BellMeasurement bell_measure(StateVector& state, QubitIndex q1, QubitIndex q2, Rng& rng) {
    BellPair p = bell_masks(state, q1, q2);
    check_norm_for_measurement(state);
    auto probs = bell_probabilities(state, q1, q2);

    double u = rng.uniform();
    BellOutcome chosen = BellOutcome::PhiPlus;
    double acc = 0;
    for (auto b : kBellOrder) {
        double pb = probs[static_cast<int>(b)];
        if (pb <= 0) {
            continue;
        }
        acc += pb;
        chosen = b;
        if (u < acc) {
            break;
        }
    }

    double prob = probs[static_cast<int>(chosen)];
    double scale = kInvSqrt2 / std::sqrt(prob);
    auto& amps = state.amplitudes_;
    for (std::size_t base = 0; base < amps.size(); base++) {
        if (base & (p.m1 | p.m2)) {
            continue;
        }
        Amplitude c = bell_coefficient(amps, base, p, chosen) * scale;
        Amplitude& a00 = amps[base];
        Amplitude& a01 = amps[base | p.m2];
        Amplitude& a10 = amps[base | p.m1];
        Amplitude& a11 = amps[base | p.m1 | p.m2];
        switch (chosen) {
            case BellOutcome::PhiPlus:
                a00 = c, a11 = c, a01 = 0.0, a10 = 0.0;
                break;
            case BellOutcome::PhiMinus:
                a00 = c, a11 = -c, a01 = 0.0, a10 = 0.0;
                break;
            case BellOutcome::PsiPlus:
                a01 = c, a10 = c, a00 = 0.0, a11 = 0.0;
                break;
            case BellOutcome::PsiMinus:
                a01 = c, a10 = -c, a00 = 0.0, a11 = 0.0;
                break;
        }
    }
    return {chosen, prob};
}

}  // namespace ghzsig
