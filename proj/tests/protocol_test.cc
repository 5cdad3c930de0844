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


#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "ghzsig/arbitration.h"
#include "ghzsig/errors.h"
#include "ghzsig/signature.h"
#include "ghzsig/transcript.h"

using namespace ghzsig;

namespace {

Bits random_bits(std::size_t n, Rng& rng) {
    Bits b(n);
    for (auto& x : b) {
        x = rng.coin() ? 1 : 0;
    }
    return b;
}

struct SignedSession {
    GhzSession session;
    Transcript transcript;
    SignatureRecord record;
};

SignedSession signed_session(const Bits& message, std::uint64_t seed) {
    Rng rng(seed);
    SignedSession s{GhzSession::init(message.size(), rng), {}, {}};
    s.session.send_particles_to_alice(s.transcript);
    s.record = s.session.sign(message);
    return s;
}

}  // namespace

TEST(Transcript, totals) {
    Transcript t;
    t.log(Party::Bob, Party::Alice, Carrier::Qubit, 5, "a");
    t.log(Party::Alice, Party::Bob, Carrier::Qubit, 5, "b");
    t.log(Party::Alice, Party::Bob, Carrier::Qubit, 2, "c");
    t.log(Party::Alice, Party::Bob, Carrier::ClassicalBit, 5, "d");
    EXPECT_EQ(t.total(Party::Alice, Party::Bob, Carrier::Qubit), 7u);
    EXPECT_EQ(t.total(Party::Alice, Party::Trent, Carrier::Qubit), 0u);
    EXPECT_EQ(t.total_sent(Party::Alice, Carrier::Qubit), 7u);
    EXPECT_EQ(t.total_received(Party::Alice, Carrier::Qubit), 5u);
    EXPECT_EQ(t.entries().size(), 4u);
    EXPECT_THROW(t.log(Party::Bob, Party::Bob, Carrier::Qubit, 1, "x"), std::invalid_argument);
    auto j = totals_json(t);
    EXPECT_EQ(j["qubits"]["alice_to_bob"], 7);
    EXPECT_EQ(j["classical_bits"]["alice_to_bob"], 5);
}

TEST(GhzSession, honest_flow) {
    Bits message = parse_bits("1011001");
    auto s = signed_session(message, 4);
    for (std::size_t i = 0; i < message.size(); i++) {
        EXPECT_EQ(s.session.custody(i)[2], Holder::Alice);
        EXPECT_EQ(s.session.custody(i)[0], Holder::Bob);
        EXPECT_EQ(s.record.operations_applied[i], message[i] ? SignOp::SigmaX : SignOp::Identity);
    }
    s.session.return_particles_to_bob(s.record, s.transcript);
    EXPECT_EQ(s.session.custody(0)[2], Holder::Bob);
    Rng rng(1);
    auto auth = s.session.authenticate(rng);
    EXPECT_EQ(auth.recovered, message);
    EXPECT_TRUE(auth.anomaly_positions.empty());
    for (double p : auth.outcome_probabilities) {
        EXPECT_NEAR(p, 1.0, 1e-9);
    }
    EXPECT_EQ(s.session.phase(), Phase::Authenticated);
    EXPECT_EQ(s.session.phase_history(),
              (std::vector<Phase>{Phase::Initialized, Phase::ParticlesSentToAlice, Phase::Signed,
                                  Phase::ReturnedToBob, Phase::Authenticated}));
    EXPECT_EQ(s.transcript.total(Party::Bob, Party::Alice, Carrier::Qubit), message.size());
    EXPECT_EQ(s.transcript.total(Party::Alice, Party::Bob, Carrier::Qubit), message.size());
}

TEST(GhzSession, order_enforced_and_state_untouched) {
    Rng rng(0);
    Transcript t;
    auto session = GhzSession::init(3, rng);
    EXPECT_THROW(session.sign(Bits{1, 0, 1}), ProtocolOrderError);
    EXPECT_THROW(session.authenticate(rng), ProtocolOrderError);
    EXPECT_THROW(session.mark_arbitrated(), ProtocolOrderError);
    EXPECT_EQ(session.phase_history().size(), 1u);
    session.send_particles_to_alice(t);
    EXPECT_THROW(session.send_particles_to_alice(t), ProtocolOrderError);
    EXPECT_EQ(t.entries().size(), 1u);
    StateVector before = session.triplet(0);
    EXPECT_THROW(session.sign(Bits{1, 0}), std::invalid_argument);
    EXPECT_THROW(session.sign(Bits{1, 0, 2}), std::invalid_argument);
    EXPECT_EQ(session.phase(), Phase::ParticlesSentToAlice);
    EXPECT_LT(l2_distance(session.triplet(0), before), 1e-15);
    auto rec = session.sign(Bits{1, 0, 1});
    SignatureRecord foreign = rec;
    foreign.session_id ^= 1;
    EXPECT_THROW(session.return_particles_to_bob(foreign, t), std::invalid_argument);
    EXPECT_EQ(t.entries().size(), 1u);
    EXPECT_THROW(GhzSession::init(0, rng), std::invalid_argument);
}

TEST(GhzSession, initial_triplets_are_ghz) {
    Rng rng(3);
    auto session = GhzSession::init(4, rng);
    for (std::size_t i = 0; i < 4; i++) {
        EXPECT_LT(l2_distance(session.triplet(i), make_ghz()), 1e-12);
    }
}

TEST(GhzSession, eve_bit_flip_and_phase_flip) {
    Bits message = parse_bits("0110");
    for (bool phase : {false, true}) {
        auto s = signed_session(message, 9);
        s.session.return_particles_to_bob(s.record, s.transcript, [&](ParticleInTransit& p) {
            if (p.position() == 2) {
                phase ? p.apply_pauli_z() : p.apply_pauli_x();
            }
        });
        Rng rng(2);
        auto auth = s.session.authenticate(rng);
        if (phase) {
            EXPECT_EQ(auth.recovered, message);
            EXPECT_EQ(auth.anomaly_positions, (std::vector<std::size_t>{2}));
            EXPECT_EQ(auth.outcomes[1], BellOutcome::PsiMinus);
        } else {
            EXPECT_EQ(auth.recovered, parse_bits("0010"));
            EXPECT_TRUE(auth.anomaly_positions.empty());
        }
    }
}

TEST(Verify, mismatch_positions) {
    auto v = verify(parse_bits("1010"), parse_bits("1001"));
    EXPECT_FALSE(v.accept);
    EXPECT_EQ(v.mismatch_positions, (std::vector<std::size_t>{3, 4}));
    EXPECT_TRUE(verify(parse_bits("11"), parse_bits("11")).accept);
    EXPECT_THROW(verify(parse_bits("1"), parse_bits("11")), std::invalid_argument);
}

TEST(Arbitration, deposit_logs_qubits) {
    Transcript t;
    FingerprintParams params;
    params.copies = 3;
    auto record = deposit_fingerprint(parse_bits("10110011"), params, t);
    EXPECT_EQ(record.copies_held(), 3u);
    EXPECT_EQ(record.code()->m(), 16u);
    EXPECT_EQ(t.total(Party::Alice, Party::Trent, Carrier::Qubit), 3u * 5u);
    EXPECT_EQ(record.verdict(), Verdict::NotInvoked);
}

TEST(Arbitration, genuine_is_valid) {
    Rng rng(6);
    for (int i = 0; i < 50; i++) {
        Transcript t;
        Bits m = random_bits(8, rng);
        auto record = deposit_fingerprint(m, FingerprintParams{}, t);
        EXPECT_EQ(arbitrate(record, m, rng, &t), Verdict::Valid);
        EXPECT_EQ(record.copies_held(), 0u);
        EXPECT_EQ(t.total(Party::Alice, Party::Trent, Carrier::Qubit), 2u * 16u * 5u);
    }
}

TEST(Arbitration, forgeries_mostly_invalid) {
    Rng rng(7);
    int invalid = 0;
    for (int i = 0; i < 50; i++) {
        Transcript t;
        Bits m = random_bits(8, rng);
        auto record = deposit_fingerprint(m, FingerprintParams{}, t);
        Bits forged = m;
        forged[rng.below(8)] ^= 1;
        invalid += arbitrate(record, forged, rng) == Verdict::Invalid;
    }
    // Each single-bit forgery escapes with probability at most ((1 + s^2)/2)^16
    // with s <= 1 - d_min/m; for these codes that is well under 10%.
    EXPECT_GE(invalid, 40);
}

TEST(Arbitration, errors) {
    Rng rng(0);
    Transcript t;
    FingerprintParams params;
    params.copies = 2;
    auto record = deposit_fingerprint(parse_bits("1011"), params, t);
    EXPECT_THROW(arbitrate(record, parse_bits("101"), rng), std::invalid_argument);
    EXPECT_EQ(arbitrate(record, parse_bits("1011"), rng), Verdict::Valid);
    EXPECT_THROW(arbitrate(record, parse_bits("1011"), rng), ResourceError);
    params.copies = 0;
    EXPECT_THROW(deposit_fingerprint(parse_bits("1011"), params, t), std::invalid_argument);
}
