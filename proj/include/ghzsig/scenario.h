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

#ifndef GHZSIG_SCENARIO_H
#define GHZSIG_SCENARIO_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ghzsig/arbitration.h"
#include "ghzsig/bits.h"
#include "ghzsig/qkd.h"
#include "ghzsig/signature.h"
#include "ghzsig/transcript.h"
#include "json.hpp"

namespace ghzsig {

struct NoAttack {};

/// Eve applies sigma_x to the masked particles 3 on their way back to Bob.
struct EveFlip {
    Bits mask;
    /// Also flip the same bits of E_K{M}. Off by default.
    bool tamper_ciphertext = false;
};

/// Eve applies sigma_z to the masked particles 3 on their way back to Bob.
struct EvePhase {
    Bits mask;
};

/// After an honest run Bob claims Alice signed message XOR mask. An empty mask
/// picks one random position to flip.
struct BobForge {
    Bits mask;
};

/// After an honest run Alice denies having signed.
struct AliceDisavow {};

using Attack = std::variant<NoAttack, EveFlip, EvePhase, BobForge, AliceDisavow>;

struct ScenarioConfig {
    std::size_t n_bits = 64;
    /// nullopt draws a random message from the master seed.
    std::optional<Bits> message;
    double c_requested = 2.0;
    std::uint64_t code_seed = 0;
    std::size_t r_copies = kDefaultSwapRepetitions;
    std::uint64_t master_seed = 0;
    Attack attack = NoAttack{};
    /// nullopt means max(16, 8 * n_bits).
    std::optional<std::size_t> bb84_raw_count;
};

/// Throws std::invalid_argument for inconsistent configs (message or mask
/// length != n_bits, empty Eve masks, r_copies == 0, c <= 1, ...).
void validate(const ScenarioConfig& config);

struct ScenarioReport {
    std::string scenario;
    std::size_t n_bits = 0;
    std::uint64_t master_seed = 0;
    Bits message;
    Bits recovered;
    /// Bob's verdict: M' equals the decrypted M and no Bell anomaly was seen.
    bool accepted = false;
    bool recovered_equals_message = false;
    std::vector<std::size_t> mismatch_positions;
    std::vector<std::size_t> anomaly_positions;
    Verdict arbitration_verdict = Verdict::NotInvoked;
    /// The message put before Trent, when a dispute was raised.
    std::optional<Bits> disputed_message;
    /// Whether the protocol caught the attack. Always false for NoAttack.
    bool attack_detected = false;
    double qber = 0;
    Bb84Report key_exchange;
    Transcript transcript;
    std::vector<Phase> phase_history;
    std::vector<BellOutcome> bell_outcomes;
    /// Born probability of each observed Bell outcome.
    std::vector<double> bell_outcome_probabilities;
    /// Never part of the default JSON, so that reports stay seed-determined.
    double wall_time_seconds = 0;
};

ScenarioReport run_honest(const ScenarioConfig& config);
ScenarioReport run_eve_attack(const ScenarioConfig& config);
ScenarioReport run_bob_forge(const ScenarioConfig& config);
ScenarioReport run_alice_disavow(const ScenarioConfig& config);

/// Dispatches on config.attack.
ScenarioReport run_scenario(const ScenarioConfig& config);

/// Field order is fixed. wall_time_seconds is included only on request.
nlohmann::ordered_json to_json(const ScenarioReport& report, bool include_timing = false);

/// Qubits per channel for one signed n-bit message.
struct Table1Row {
    std::size_t alice_to_bob = 0;
    std::size_t bob_to_alice = 0;
    std::size_t alice_to_trent = 0;

    bool operator==(const Table1Row&) const = default;
};

/// {n, n, r * (log2(m) + 1)} with m the power-of-two codeword length for (n, c).
Table1Row table1_row(std::size_t n, double c, std::size_t r = 1);

/// Channel counts for the arbitrated GHZ schemes the protocol is compared
/// against. These are formulas quoted for comparison, not simulated.
struct ReferenceScheme {
    std::string name;
    std::size_t alice_to_bob;
    std::size_t bob_to_arbitrator;
    std::size_t arbitrator_to_bob;
};
std::vector<ReferenceScheme> table1_reference_schemes(std::size_t n);

nlohmann::ordered_json to_json(const Table1Row& row);

}  // namespace ghzsig

#endif
