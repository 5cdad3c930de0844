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

#include <chrono>
#include <stdexcept>
#include <string>
#include <utility>

#include "ghzsig/errors.h"
#include "ghzsig/linear_code.h"
#include "ghzsig/otp.h"

namespace ghzsig {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_mask(const Bits& mask, std::size_t n, std::string_view what, bool allow_empty) {
    if (mask.empty() && allow_empty) {
        return;
    }
    if (mask.size() != n) {
        throw std::invalid_argument(std::string(what) + " mask has " + std::to_string(mask.size()) +
                                    " bits, message has " + std::to_string(n));
    }
    for (auto b : mask) {
        if (b > 1) {
            throw std::invalid_argument(std::string(what) + " mask bits must be 0 or 1");
        }
    }
    if (!allow_empty && hamming_weight(mask) == 0) {
        throw std::invalid_argument(std::string(what) + " mask must select at least one position");
    }
}

// Everything a scenario needs after the signed particles have reached Bob.
struct ProtocolRun {
    ScenarioReport report;
    std::optional<ArbitrationRecord> deposit;
    std::optional<GhzSession> session;
    Key bob_key;
    Ciphertext ciphertext;
    Rng swap_rng{0};
    Rng forge_rng{0};
};

ProtocolRun run_protocol(const ScenarioConfig& config, std::string scenario, const TransitHook& hook,
                         const Bits* ciphertext_flips) {
    validate(config);
    ProtocolRun run;
    ScenarioReport& report = run.report;
    report.scenario = std::move(scenario);
    report.n_bits = config.n_bits;
    report.master_seed = config.master_seed;

    Rng master(config.master_seed);
    Rng bb84_rng = master.split("bb84");
    Rng message_rng = master.split("message");
    Rng ghz_rng = master.split("ghz");
    run.swap_rng = master.split("swap");
    run.forge_rng = master.split("forge");

    if (config.message) {
        report.message = *config.message;
    } else {
        report.message.resize(config.n_bits);
        for (auto& b : report.message) {
            b = message_rng.coin() ? 1 : 0;
        }
    }
    const Bits& message = report.message;

    // Initial phase: shared key K.
    Bb84Options bb84;
    bb84.raw_count = config.bb84_raw_count.value_or(std::max<std::size_t>(Bb84Options::kMinRawCount, 8 * config.n_bits));
    report.key_exchange = bb84_exchange(bb84, bb84_rng);
    report.qber = report.key_exchange.qber;
    if (report.key_exchange.aborted) {
        throw ScenarioError("key exchange aborted (QBER " + std::to_string(report.key_exchange.qber) + ")");
    }
    if (report.key_exchange.final_key.length() < config.n_bits) {
        throw ScenarioError("key exchange produced " + std::to_string(report.key_exchange.final_key.length()) +
                            " key bits, message needs " + std::to_string(config.n_bits));
    }
    Key alice_key = report.key_exchange.final_key;
    run.bob_key = report.key_exchange.bob_key;

    // Signature phase.
    run.session.emplace(GhzSession::init(config.n_bits, ghz_rng));
    GhzSession& session = *run.session;
    session.send_particles_to_alice(report.transcript);
    SignatureRecord signature = session.sign(message);
    session.return_particles_to_bob(signature, report.transcript, hook);

    run.ciphertext = otp_encrypt(alice_key, message);
    if (ciphertext_flips) {
        run.ciphertext.bits = xor_bits(run.ciphertext.bits, *ciphertext_flips);
    }
    report.transcript.log(Party::Alice, Party::Bob, Carrier::ClassicalBit, config.n_bits, "E_K{M}");

    // Alice lodges |f(M)>_T with Trent before the exchange completes.
    FingerprintParams params{config.c_requested, config.code_seed, config.r_copies};
    run.deposit.emplace(deposit_fingerprint(message, params, report.transcript));

    // Authentication phase.
    AuthenticationResult auth = session.authenticate(ghz_rng);
    Bits decrypted = otp_decrypt(run.bob_key, run.ciphertext);
    VerifyResult verdict = verify(decrypted, auth.recovered);

    report.recovered = auth.recovered;
    report.bell_outcomes = auth.outcomes;
    report.bell_outcome_probabilities = auth.outcome_probabilities;
    report.anomaly_positions = auth.anomaly_positions;
    report.mismatch_positions = verdict.mismatch_positions;
    report.accepted = verdict.accept && auth.anomaly_positions.empty();
    report.recovered_equals_message = auth.recovered == message;
    return run;
}

void finish(ProtocolRun& run) {
    run.report.phase_history = run.session->phase_history();
}

void settle_dispute(ProtocolRun& run, const Bits& disputed) {
    ScenarioReport& report = run.report;
    report.disputed_message = disputed;
    report.arbitration_verdict = arbitrate(*run.deposit, disputed, run.swap_rng, &report.transcript);
    run.session->mark_arbitrated();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

nlohmann::ordered_json positions_json(const std::vector<std::size_t>& positions) {
    auto out = nlohmann::ordered_json::array();
    for (auto p : positions) {
        out.push_back(p);
    }
    return out;
}

}  // namespace

void validate(const ScenarioConfig& config) {
    if (config.n_bits == 0) {
        throw std::invalid_argument("n_bits must be >= 1");
    }
    if (config.message) {
        if (config.message->size() != config.n_bits) {
            throw std::invalid_argument("message has " + std::to_string(config.message->size()) +
                                        " bits, n_bits is " + std::to_string(config.n_bits));
        }
        for (auto b : *config.message) {
            if (b > 1) {
                throw std::invalid_argument("message bits must be 0 or 1");
            }
        }
    }
    if (config.r_copies == 0) {
        throw std::invalid_argument("r_copies must be >= 1");
    }
    // Also rejects c <= 1.
    std::size_t m = codeword_length(config.n_bits, config.c_requested);
    if (fingerprint_qubits(m) * 2 + 1 > StateVector::kMaxQubits) {
        throw std::invalid_argument("n_bits * c is too large for the swap-test register");
    }
    if (config.bb84_raw_count && *config.bb84_raw_count < Bb84Options::kMinRawCount) {
        throw std::invalid_argument("bb84_raw_count must be at least " + std::to_string(Bb84Options::kMinRawCount));
    }
    std::visit(overloaded{
                   [](const NoAttack&) {},
                   [&](const EveFlip& a) { check_mask(a.mask, config.n_bits, "EveFlip", false); },
                   [&](const EvePhase& a) { check_mask(a.mask, config.n_bits, "EvePhase", false); },
                   [&](const BobForge& a) { check_mask(a.mask, config.n_bits, "BobForge", true); },
                   [](const AliceDisavow&) {},
               },
               config.attack);
}

ScenarioReport run_honest(const ScenarioConfig& config) {
    if (!std::holds_alternative<NoAttack>(config.attack)) {
        throw std::invalid_argument("run_honest needs attack = None");
    }
    auto start = std::chrono::steady_clock::now();
    ProtocolRun run = run_protocol(config, "honest", {}, nullptr);
    finish(run);
    run.report.wall_time_seconds = seconds_since(start);
    return std::move(run.report);
}

ScenarioReport run_eve_attack(const ScenarioConfig& config) {
    const Bits* mask = nullptr;
    bool phase_flip = false;
    bool tamper_ciphertext = false;
    if (auto* flip = std::get_if<EveFlip>(&config.attack)) {
        mask = &flip->mask;
        tamper_ciphertext = flip->tamper_ciphertext;
    } else if (auto* phase = std::get_if<EvePhase>(&config.attack)) {
        mask = &phase->mask;
        phase_flip = true;
    } else {
        throw std::invalid_argument("run_eve_attack needs an EveFlip or EvePhase attack");
    }
    auto start = std::chrono::steady_clock::now();

    TransitHook eve = [&](ParticleInTransit& particle) {
        if (!(*mask)[particle.position() - 1]) {
            return;
        }
        if (phase_flip) {
            particle.apply_pauli_z();
        } else {
            particle.apply_pauli_x();
        }
    };
    ProtocolRun run = run_protocol(config, phase_flip ? "eve_phase" : "eve_flip", eve,
                                   tamper_ciphertext ? mask : nullptr);
    finish(run);
    run.report.attack_detected = !run.report.accepted;
    run.report.wall_time_seconds = seconds_since(start);
    return std::move(run.report);
}

ScenarioReport run_bob_forge(const ScenarioConfig& config) {
    auto* forge = std::get_if<BobForge>(&config.attack);
    if (!forge) {
        throw std::invalid_argument("run_bob_forge needs a BobForge attack");
    }
    auto start = std::chrono::steady_clock::now();
    ProtocolRun run = run_protocol(config, "bob_forge", {}, nullptr);
    ScenarioReport& report = run.report;

    Bits mask = forge->mask;
    if (mask.empty()) {
        mask.assign(config.n_bits, 0);
        mask[run.forge_rng.below(config.n_bits)] = 1;
    }
    Bits forged = xor_bits(report.message, mask);

    // Bob holds K, so he can produce E_K{M_forged} for the same key segment
    // himself. A forger is not bound by the one-time discipline of his Key
    // object, so the pad is read directly.
    const Bits& key_bits = run.bob_key.bits();
    Bits pad(key_bits.begin() + static_cast<std::ptrdiff_t>(run.ciphertext.key_offset),
             key_bits.begin() + static_cast<std::ptrdiff_t>(run.ciphertext.key_offset + config.n_bits));
    Ciphertext forged_ciphertext{xor_bits(forged, pad), run.ciphertext.key_offset};
    if (xor_bits(forged_ciphertext.bits, pad) != forged) {
        throw ConsistencyError("forged ciphertext does not decrypt to the forged message");
    }

    // Alice contests; Trent tests the disputed message against his deposit.
    settle_dispute(run, forged);
    report.attack_detected = report.arbitration_verdict == Verdict::Invalid;
    finish(run);
    report.wall_time_seconds = seconds_since(start);
    return std::move(report);
}

ScenarioReport run_alice_disavow(const ScenarioConfig& config) {
    if (!std::holds_alternative<AliceDisavow>(config.attack)) {
        throw std::invalid_argument("run_alice_disavow needs an AliceDisavow attack");
    }
    auto start = std::chrono::steady_clock::now();
    ProtocolRun run = run_protocol(config, "alice_disavow", {}, nullptr);
    ScenarioReport& report = run.report;

    // Bob asks Trent to rule on the message Alice now denies.
    settle_dispute(run, report.message);
    report.attack_detected = report.arbitration_verdict == Verdict::Valid;
    finish(run);
    report.wall_time_seconds = seconds_since(start);
    return std::move(report);
}

ScenarioReport run_scenario(const ScenarioConfig& config) {
    return std::visit(overloaded{
                          [&](const NoAttack&) { return run_honest(config); },
                          [&](const EveFlip&) { return run_eve_attack(config); },
                          [&](const EvePhase&) { return run_eve_attack(config); },
                          [&](const BobForge&) { return run_bob_forge(config); },
                          [&](const AliceDisavow&) { return run_alice_disavow(config); },
                      },
                      config.attack);
}

nlohmann::ordered_json to_json(const ScenarioReport& report, bool include_timing) {
    nlohmann::ordered_json j;
    j["scenario"] = report.scenario;
    j["n_bits"] = report.n_bits;
    j["master_seed"] = report.master_seed;
    j["message"] = to_string(report.message);
    j["recovered"] = to_string(report.recovered);
    j["accepted"] = report.accepted;
    j["recovered_equals_message"] = report.recovered_equals_message;
    j["mismatch_positions"] = positions_json(report.mismatch_positions);
    j["anomaly_positions"] = positions_json(report.anomaly_positions);
    j["arbitration_verdict"] = name(report.arbitration_verdict);
    if (report.disputed_message) {
        j["disputed_message"] = to_string(*report.disputed_message);
    } else {
        j["disputed_message"] = nullptr;
    }
    j["attack_detected"] = report.attack_detected;
    j["qber"] = report.qber;
    j["key_exchange"] = to_json(report.key_exchange);
    j["transcript"] = totals_json(report.transcript);
    j["transcript_entries"] = entries_json(report.transcript);
    auto phases = nlohmann::ordered_json::array();
    for (auto p : report.phase_history) {
        phases.push_back(name(p));
    }
    j["phase_history"] = std::move(phases);
    auto outcomes = nlohmann::ordered_json::array();
    for (auto o : report.bell_outcomes) {
        outcomes.push_back(name(o));
    }
    j["bell_outcomes"] = std::move(outcomes);
    if (include_timing) {
        j["wall_time_seconds"] = report.wall_time_seconds;
    }
    return j;
}

Table1Row table1_row(std::size_t n, double c, std::size_t r) {
    if (r == 0) {
        throw std::invalid_argument("table1_row: r must be >= 1");
    }
    std::size_t m = codeword_length(n, c);
    return Table1Row{n, n, r * fingerprint_qubits(m)};
}

std::vector<ReferenceScheme> table1_reference_schemes(std::size_t n) {
    return {
        {"zeng_keitel_arbitrated", 3 * n, 3 * n, 5 * n + 1},
        {"lee_arbitrated_public_board", 2 * n, 3 * n, 3 * n + 2},
        {"lee_arbitrated_no_public_board", 2 * n, 3 * n, 4 * n + 1},
    };
}

nlohmann::ordered_json to_json(const Table1Row& row) {
    nlohmann::ordered_json j;
    j["alice_to_bob"] = row.alice_to_bob;
    j["bob_to_alice"] = row.bob_to_alice;
    j["alice_to_trent"] = row.alice_to_trent;
    return j;
}

}  // namespace ghzsig
