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


#include "ghzsig/scenario.h"

#include <gtest/gtest.h>

#include <stdexcept>

#include "ghzsig/errors.h"

using namespace ghzsig;

namespace {

ScenarioConfig config_for(std::size_t n, std::uint64_t seed, Attack attack = NoAttack{}) {
    ScenarioConfig c;
    c.n_bits = n;
    c.master_seed = seed;
    c.attack = std::move(attack);
    return c;
}

}  // namespace

TEST(Scenario, honest_accepts) {
    for (std::uint64_t seed = 0; seed < 10; seed++) {
        auto r = run_honest(config_for(16, seed));
        EXPECT_TRUE(r.accepted);
        EXPECT_TRUE(r.recovered_equals_message);
        EXPECT_EQ(r.recovered, r.message);
        EXPECT_FALSE(r.attack_detected);
        EXPECT_EQ(r.arbitration_verdict, Verdict::NotInvoked);
        EXPECT_EQ(r.bell_outcomes.size(), 16u);
    }
}

TEST(Scenario, explicit_message) {
    auto c = config_for(6, 1);
    c.message = parse_bits("110010");
    auto r = run_scenario(c);
    EXPECT_EQ(to_string(r.recovered), "110010");
}

TEST(Scenario, deterministic_report) {
    auto c = config_for(12, 99, EveFlip{mask_from_positions(12, std::vector<std::size_t>{3, 7})});
    EXPECT_EQ(to_json(run_scenario(c)).dump(), to_json(run_scenario(c)).dump());
    auto d = config_for(12, 100);
    EXPECT_NE(to_json(run_scenario(d)).dump(), to_json(run_scenario(config_for(12, 101))).dump());
}

TEST(Scenario, eve_flip_positions) {
    Bits mask = mask_from_positions(10, std::vector<std::size_t>{1, 4, 10});
    auto r = run_scenario(config_for(10, 5, EveFlip{mask}));
    EXPECT_FALSE(r.accepted);
    EXPECT_TRUE(r.attack_detected);
    EXPECT_EQ(r.mismatch_positions, (std::vector<std::size_t>{1, 4, 10}));
    EXPECT_TRUE(r.anomaly_positions.empty());
}

TEST(Scenario, eve_flip_with_ciphertext_tamper_goes_unnoticed) {
    Bits mask = mask_from_positions(10, std::vector<std::size_t>{2, 3});
    auto r = run_scenario(config_for(10, 5, EveFlip{mask, true}));
    EXPECT_TRUE(r.accepted);
    EXPECT_FALSE(r.attack_detected);
    EXPECT_EQ(r.recovered, xor_bits(r.message, mask));
}

TEST(Scenario, eve_phase_positions) {
    Bits mask = mask_from_positions(10, std::vector<std::size_t>{5, 6});
    auto r = run_scenario(config_for(10, 5, EvePhase{mask}));
    EXPECT_FALSE(r.accepted);
    EXPECT_TRUE(r.attack_detected);
    EXPECT_TRUE(r.recovered_equals_message);
    EXPECT_EQ(r.anomaly_positions, (std::vector<std::size_t>{5, 6}));
}

TEST(Scenario, bob_forge) {
    auto r = run_scenario(config_for(8, 3, BobForge{}));
    ASSERT_TRUE(r.disputed_message.has_value());
    EXPECT_EQ(hamming_distance(*r.disputed_message, r.message), 1u);
    EXPECT_TRUE(r.accepted);
    EXPECT_EQ(r.attack_detected, r.arbitration_verdict == Verdict::Invalid);
    EXPECT_EQ(r.phase_history.back(), Phase::Arbitrated);
}

TEST(Scenario, alice_disavow) {
    auto r = run_scenario(config_for(8, 3, AliceDisavow{}));
    EXPECT_EQ(r.arbitration_verdict, Verdict::Valid);
    EXPECT_TRUE(r.attack_detected);
    EXPECT_EQ(*r.disputed_message, r.message);
}

TEST(Scenario, validation) {
    auto c = config_for(4, 0);
    c.message = parse_bits("101");
    EXPECT_THROW(run_scenario(c), std::invalid_argument);
    EXPECT_THROW(run_scenario(config_for(4, 0, EveFlip{Bits(4, 0)})), std::invalid_argument);
    EXPECT_THROW(run_scenario(config_for(4, 0, EvePhase{Bits(3, 1)})), std::invalid_argument);
    auto r0 = config_for(4, 0);
    r0.r_copies = 0;
    EXPECT_THROW(run_scenario(r0), std::invalid_argument);
    auto big = config_for(1000, 0);
    EXPECT_THROW(run_scenario(big), std::invalid_argument);
}

TEST(Scenario, key_exchange_abort_is_scenario_error) {
    auto c = config_for(64, 0);
    c.bb84_raw_count = 16;  // far too few sifted bits for 64
    EXPECT_THROW(run_scenario(c), ScenarioError);
}

TEST(Scenario, transcript_counts) {
    auto c = config_for(64, 0);
    c.r_copies = 1;
    auto r = run_scenario(c);
    EXPECT_EQ(r.transcript.total(Party::Alice, Party::Bob, Carrier::Qubit), 64u);
    EXPECT_EQ(r.transcript.total(Party::Bob, Party::Alice, Carrier::Qubit), 64u);
    EXPECT_EQ(r.transcript.total(Party::Alice, Party::Trent, Carrier::Qubit), 8u);
    EXPECT_EQ(r.transcript.total(Party::Alice, Party::Bob, Carrier::ClassicalBit), 64u);
}

TEST(Table1, rows) {
    EXPECT_EQ(table1_row(64, 2.0), (Table1Row{64, 64, 8}));
    EXPECT_EQ(table1_row(64, 2.0, 16), (Table1Row{64, 64, 128}));
    EXPECT_EQ(table1_row(100, 2.0), (Table1Row{100, 100, 9}));
    auto refs = table1_reference_schemes(10);
    ASSERT_EQ(refs.size(), 3u);
    EXPECT_EQ(refs[0].alice_to_bob, 30u);
    EXPECT_EQ(refs[0].arbitrator_to_bob, 51u);
    EXPECT_EQ(refs[1].arbitrator_to_bob, 32u);
    EXPECT_EQ(refs[2].arbitrator_to_bob, 41u);
}

TEST(Scenario, json_shape) {
    auto j = to_json(run_honest(config_for(4, 0)));
    EXPECT_FALSE(j.contains("wall_time_seconds"));
    EXPECT_EQ(j["scenario"], "honest");
    EXPECT_TRUE(to_json(run_honest(config_for(4, 0)), true).contains("wall_time_seconds"));
}
