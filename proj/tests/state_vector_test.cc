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

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "ghzsig/errors.h"
#include "test_util.h"

using namespace ghzsig;
using namespace ghzsig::testing;

namespace {

constexpr double kTol = 1e-12;
const double kInvSqrt2 = 1 / std::sqrt(2.0);

StateVector bell_state(BellOutcome which) {
    std::vector<Amplitude> a(4, 0.0);
    switch (which) {
        case BellOutcome::PhiPlus:
            a[0] = kInvSqrt2;
            a[3] = kInvSqrt2;
            break;
        case BellOutcome::PhiMinus:
            a[0] = kInvSqrt2;
            a[3] = -kInvSqrt2;
            break;
        case BellOutcome::PsiPlus:
            a[1] = kInvSqrt2;
            a[2] = kInvSqrt2;
            break;
        case BellOutcome::PsiMinus:
            a[1] = kInvSqrt2;
            a[2] = -kInvSqrt2;
            break;
    }
    return StateVector::from_amplitudes(a);
}

}  // namespace

TEST(StateVector, zero_state) {
    StateVector s(3);
    EXPECT_EQ(s.num_qubits(), 3u);
    EXPECT_EQ(s.amplitudes().size(), 8u);
    EXPECT_EQ(s.amplitude("000"), Amplitude(1.0));
    EXPECT_NEAR(s.norm(), 1.0, kTol);
}

TEST(StateVector, rejects_bad_sizes) {
    EXPECT_THROW(StateVector(0), std::invalid_argument);
    EXPECT_THROW(StateVector(StateVector::kMaxQubits + 1), std::invalid_argument);
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(StateVector::from_amplitudes({1.0}), std::invalid_argument);
}

TEST(StateVector, qubit_one_is_most_significant) {
    StateVector s = make_basis_state(3, "100");
    EXPECT_EQ(s.amplitude(4), Amplitude(1.0));
    EXPECT_EQ(s.mask_of(QubitIndex{1}), 4u);
    EXPECT_EQ(s.mask_of(QubitIndex{3}), 1u);
    EXPECT_THROW(s.mask_of(QubitIndex{0}), std::invalid_argument);
    EXPECT_THROW(s.mask_of(QubitIndex{4}), std::invalid_argument);
}

TEST(StateVector, invalid_gate_arguments) {
    StateVector s(3);
    EXPECT_THROW(s.apply_pauli_x(QubitIndex{4}), std::invalid_argument);
    EXPECT_THROW(s.apply_cnot(QubitIndex{2}, QubitIndex{2}), std::invalid_argument);
    EXPECT_THROW(s.apply_cswap(QubitIndex{1}, QubitIndex{1}, QubitIndex{2}), std::invalid_argument);
    EXPECT_THROW(s.apply_cswap(QubitIndex{1}, QubitIndex{2}, QubitIndex{2}), std::invalid_argument);
    EXPECT_THROW(make_basis_state(2, "012"), std::invalid_argument);
    EXPECT_THROW(make_basis_state(2, "0"), std::invalid_argument);
}

TEST(StateVector, ghz) {
    StateVector g = make_ghz();
    EXPECT_NEAR(g.amplitude("000").real(), kInvSqrt2, kTol);
    EXPECT_NEAR(g.amplitude("111").real(), kInvSqrt2, kTol);
    EXPECT_NEAR(std::abs(g.amplitude("010")), 0.0, kTol);
}

TEST(StateVector, ghz_transform_identities) {
    StateVector g = make_ghz();
    g.apply_cnot(QubitIndex{2}, QubitIndex{1});
    EXPECT_LT(l2_distance(g, tensor(make_basis_state(1, "0"), bell_state(BellOutcome::PhiPlus))), kTol);

    StateVector h = make_ghz();
    h.apply_pauli_x(QubitIndex{3});
    h.apply_cnot(QubitIndex{2}, QubitIndex{1});
    EXPECT_LT(l2_distance(h, tensor(make_basis_state(1, "0"), bell_state(BellOutcome::PsiPlus))), kTol);
}

TEST(StateVector, gates_match_matrix_oracles) {
    Rng rng(11);
    for (std::size_t k = 1; k <= 4; k++) {
        for (int trial = 0; trial < 20; trial++) {
            StateVector s = random_state(k, rng);
            std::vector<Amplitude> before(s.amplitudes().begin(), s.amplitudes().end());
            std::size_t q = 1 + rng.below(k);
            int gate = static_cast<int>(rng.below(k >= 3 ? 5 : (k == 2 ? 4 : 3)));
            Matrix m;
            if (gate == 0) {
                s.apply_pauli_x(QubitIndex{q});
                m = embed_single(pauli_x_matrix(), q, k);
            } else if (gate == 1) {
                s.apply_pauli_z(QubitIndex{q});
                m = embed_single(pauli_z_matrix(), q, k);
            } else if (gate == 2) {
                s.apply_hadamard(QubitIndex{q});
                m = embed_single(hadamard_matrix(), q, k);
            } else if (gate == 3) {
                std::size_t t = 1 + (q + rng.below(k - 1)) % k;
                s.apply_cnot(QubitIndex{q}, QubitIndex{t});
                m = cnot_matrix(q, t, k);
            } else {
                std::size_t a = 1 + q % k;
                std::size_t b = 1 + a % k;
                s.apply_cswap(QubitIndex{q}, QubitIndex{a}, QubitIndex{b});
                m = cswap_matrix(q, a, b, k);
            }
            auto expected = matvec(m, before);
            EXPECT_LT(max_abs_diff(s.amplitudes(), expected), kTol) << "k=" << k << " gate=" << gate;
        }
    }
}

TEST(StateVector, gates_are_self_inverse) {
    Rng rng(5);
    StateVector s = random_state(3, rng);
    StateVector original = s;
    s.apply_hadamard(QubitIndex{2});
    s.apply_hadamard(QubitIndex{2});
    s.apply_cnot(QubitIndex{1}, QubitIndex{3});
    s.apply_cnot(QubitIndex{1}, QubitIndex{3});
    s.apply_cswap(QubitIndex{3}, QubitIndex{1}, QubitIndex{2});
    s.apply_cswap(QubitIndex{3}, QubitIndex{1}, QubitIndex{2});
    EXPECT_LT(l2_distance(s, original), kTol);
}

TEST(StateVector, tensor_order) {
    StateVector t = tensor(make_basis_state(1, "1"), make_basis_state(2, "01"));
    EXPECT_EQ(t.amplitude("101"), Amplitude(1.0));
}

TEST(StateVector, inner_product_and_phase) {
    StateVector a = make_basis_state(2, "01");
    StateVector b = a;
    b.apply_pauli_z(QubitIndex{2});  // -|01>
    EXPECT_NEAR(inner_product(a, b).real(), -1.0, kTol);
    EXPECT_NEAR(l2_distance(a, b), 2.0, kTol);
    EXPECT_NEAR(distance_up_to_phase(a, b), 0.0, kTol);
    EXPECT_THROW(inner_product(a, StateVector(3)), std::invalid_argument);
}

TEST(StateVector, dump) {
    StateVector s(2);
    s.apply_hadamard(QubitIndex{1});
    EXPECT_EQ(s.dump(), "00: 0.707106781187+0i\n10: 0.707106781187+0i\n");
}

TEST(Measurement, deterministic_basis_state) {
    Rng rng(1);
    StateVector s = make_basis_state(3, "101");
    std::vector<QubitIndex> qs = {QubitIndex{3}, QubitIndex{1}};
    auto r = measure_computational(s, qs, rng);
    EXPECT_EQ(r.bits, (Bits{1, 1}));
    EXPECT_NEAR(r.probability, 1.0, kTol);
}

TEST(Measurement, collapse_on_ghz) {
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        Rng rng(seed);
        StateVector g = make_ghz();
        std::vector<QubitIndex> first = {QubitIndex{1}};
        auto r = measure_computational(g, first, rng);
        EXPECT_NEAR(r.probability, 0.5, kTol);
        std::vector<QubitIndex> rest = {QubitIndex{2}, QubitIndex{3}};
        auto r2 = measure_computational(g, rest, rng);
        EXPECT_EQ(r2.bits, (Bits{r.bits[0], r.bits[0]}));
        EXPECT_NEAR(r2.probability, 1.0, kTol);
        EXPECT_NEAR(g.norm(), 1.0, kTol);
    }
}

TEST(Measurement, rejects_repeated_qubits) {
    Rng rng(1);
    StateVector s(2);
    std::vector<QubitIndex> qs = {QubitIndex{1}, QubitIndex{1}};
    EXPECT_THROW(measure_computational(s, qs, rng), std::invalid_argument);
}

TEST(Measurement, frequencies_follow_born_rule) {
    Rng rng(3);
    int ones = 0;
    const int trials = 20000;
    for (int i = 0; i < trials; i++) {
        StateVector s(1);
        s.apply_hadamard(QubitIndex{1});
        std::vector<QubitIndex> q = {QubitIndex{1}};
        ones += measure_computational(s, q, rng).bits[0];
    }
    double se = std::sqrt(0.25 / trials);
    EXPECT_NEAR(static_cast<double>(ones) / trials, 0.5, 4 * se);
}

TEST(Measurement, same_seed_same_outcomes) {
    auto run = [](std::uint64_t seed) {
        Rng rng(seed);
        Bits out;
        for (int i = 0; i < 64; i++) {
            StateVector s(2);
            s.apply_hadamard(QubitIndex{1});
            s.apply_hadamard(QubitIndex{2});
            std::vector<QubitIndex> q = {QubitIndex{1}, QubitIndex{2}};
            auto r = measure_computational(s, q, rng);
            out.insert(out.end(), r.bits.begin(), r.bits.end());
        }
        return out;
    };
    EXPECT_EQ(run(9), run(9));
    EXPECT_NE(run(9), run(10));
}

TEST(BellMeasurement, each_bell_state_is_deterministic) {
    for (auto which : {BellOutcome::PhiPlus, BellOutcome::PhiMinus, BellOutcome::PsiPlus, BellOutcome::PsiMinus}) {
        StateVector s = bell_state(which);
        auto probs = bell_probabilities(s, QubitIndex{1}, QubitIndex{2});
        for (int i = 0; i < 4; i++) {
            EXPECT_NEAR(probs[i], i == static_cast<int>(which) ? 1.0 : 0.0, kTol);
        }
        Rng rng(0);
        auto m = bell_measure(s, QubitIndex{1}, QubitIndex{2}, rng);
        EXPECT_EQ(m.outcome, which) << name(which);
        EXPECT_NEAR(m.probability, 1.0, kTol);
    }
}

TEST(BellMeasurement, leaves_exact_bell_state) {
    for (std::uint64_t seed = 0; seed < 30; seed++) {
        Rng rng(seed);
        StateVector s = random_state(3, rng);
        auto m = bell_measure(s, QubitIndex{2}, QubitIndex{3}, rng);
        EXPECT_NEAR(s.norm(), 1.0, 1e-12);
        auto probs = bell_probabilities(s, QubitIndex{2}, QubitIndex{3});
        EXPECT_NEAR(probs[static_cast<int>(m.outcome)], 1.0, 1e-12);
    }
}

TEST(BellMeasurement, probabilities_sum_to_one) {
    Rng rng(21);
    for (int i = 0; i < 30; i++) {
        StateVector s = random_state(4, rng);
        auto p = bell_probabilities(s, QubitIndex{4}, QubitIndex{1});
        EXPECT_NEAR(p[0] + p[1] + p[2] + p[3], 1.0, 1e-12);
    }
}

TEST(BellMeasurement, non_adjacent_reversed_pair) {
    // |Psi-> on qubits (3, 1) with qubit 2 in |1>.
    StateVector s = StateVector::from_amplitudes({0, 0, 0, kInvSqrt2, 0, 0, -kInvSqrt2, 0});
    // Equals -|Psi-> on the ordered pair (3, 1).
    Rng rng(0);
    auto m = bell_measure(s, QubitIndex{3}, QubitIndex{1}, rng);
    EXPECT_EQ(m.outcome, BellOutcome::PsiMinus);
}
