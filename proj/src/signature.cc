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

#include "ghzsig/signature.h"

#include <stdexcept>
#include <string>

#include "ghzsig/errors.h"

namespace ghzsig {

namespace {

constexpr QubitIndex kParticle1{1};
constexpr QubitIndex kParticle2{2};
constexpr QubitIndex kParticle3{3};

}  // namespace

std::string_view name(Phase phase) {
    switch (phase) {
        case Phase::Initialized:
            return "Initialized";
        case Phase::ParticlesSentToAlice:
            return "ParticlesSentToAlice";
        case Phase::Signed:
            return "Signed";
        case Phase::ReturnedToBob:
            return "ReturnedToBob";
        case Phase::Authenticated:
            return "Authenticated";
        case Phase::Arbitrated:
            return "Arbitrated";
    }
    return "?";
}

std::string_view name(Holder holder) {
    switch (holder) {
        case Holder::Alice:
            return "Alice";
        case Holder::Bob:
            return "Bob";
        case Holder::InTransit:
            return "InTransit";
    }
    return "?";
}

GhzSession::GhzSession(std::uint64_t id, std::size_t n_bits)
    : id_(id),
      triplets_(n_bits, make_ghz()),
      custody_(n_bits, {Holder::Bob, Holder::Bob, Holder::Bob}),
      phase_history_{Phase::Initialized} {
}

GhzSession GhzSession::init(std::size_t n_bits, Rng& rng) {
    if (n_bits == 0) {
        throw std::invalid_argument("a session needs at least one triplet");
    }
    return GhzSession(rng.next_u64(), n_bits);
}

void GhzSession::require_phase(Phase expected, std::string_view operation) const {
    if (phase() != expected) {
        throw ProtocolOrderError(std::string(operation) + " requires phase " + std::string(name(expected)) +
                                 ", session is in " + std::string(name(phase())));
    }
}

void GhzSession::set_particle3(Holder holder) {
    for (auto& c : custody_) {
        c[2] = holder;
    }
}

void GhzSession::send_particles_to_alice(Transcript& transcript) {
    require_phase(Phase::Initialized, "send_particles_to_alice");
    set_particle3(Holder::InTransit);
    transcript.log(Party::Bob, Party::Alice, Carrier::Qubit, n_bits(), "particles 3");
    set_particle3(Holder::Alice);
    phase_history_.push_back(Phase::ParticlesSentToAlice);
}

SignatureRecord GhzSession::sign(std::span<const std::uint8_t> message) {
    require_phase(Phase::ParticlesSentToAlice, "sign");
    if (message.size() != n_bits()) {
        throw std::invalid_argument("sign: message has " + std::to_string(message.size()) + " bits, session has " +
                                    std::to_string(n_bits()) + " triplets");
    }
    for (auto b : message) {
        if (b > 1) {
            throw std::invalid_argument("sign: message bits must be 0 or 1");
        }
    }
    SignatureRecord record;
    record.session_id = id_;
    record.operations_applied.reserve(n_bits());
    for (std::size_t i = 0; i < n_bits(); i++) {
        if (message[i]) {
            triplets_[i].apply_pauli_x(kParticle3);
            record.operations_applied.push_back(SignOp::SigmaX);
        } else {
            record.operations_applied.push_back(SignOp::Identity);
        }
    }
    phase_history_.push_back(Phase::Signed);
    return record;
}

void GhzSession::return_particles_to_bob(const SignatureRecord& record, Transcript& transcript,
                                         const TransitHook& hook) {
    require_phase(Phase::Signed, "return_particles_to_bob");
    if (record.session_id != id_ || record.operations_applied.size() != n_bits()) {
        throw std::invalid_argument("signature record does not belong to this session");
    }
    set_particle3(Holder::InTransit);
    transcript.log(Party::Alice, Party::Bob, Carrier::Qubit, n_bits(), "signature |S>");
    if (hook) {
        for (std::size_t i = 0; i < n_bits(); i++) {
            ParticleInTransit particle(i + 1, triplets_[i]);
            hook(particle);
        }
    }
    set_particle3(Holder::Bob);
    phase_history_.push_back(Phase::ReturnedToBob);
}

AuthenticationResult GhzSession::authenticate(Rng& rng) {
    require_phase(Phase::ReturnedToBob, "authenticate");
    AuthenticationResult result;
    result.recovered.reserve(n_bits());
    result.outcomes.reserve(n_bits());
    result.outcome_probabilities.reserve(n_bits());

    // One child stream per triplet keeps outcomes independent of evaluation order.
    Rng base(rng.next_u64());
    for (std::size_t i = 0; i < n_bits(); i++) {
        StateVector& t = triplets_[i];
        t.apply_cnot(kParticle2, kParticle1);
        Rng local = base.split(static_cast<std::uint64_t>(i));
        BellMeasurement m = bell_measure(t, kParticle2, kParticle3, local);
        result.outcomes.push_back(m.outcome);
        result.outcome_probabilities.push_back(m.probability);
        switch (m.outcome) {
            case BellOutcome::PhiPlus:
                result.recovered.push_back(0);
                break;
            case BellOutcome::PsiPlus:
                result.recovered.push_back(1);
                break;
            case BellOutcome::PhiMinus:
                result.recovered.push_back(0);
                result.anomaly_positions.push_back(i + 1);
                break;
            case BellOutcome::PsiMinus:
                result.recovered.push_back(1);
                result.anomaly_positions.push_back(i + 1);
                break;
        }
    }
    phase_history_.push_back(Phase::Authenticated);
    return result;
}

void GhzSession::mark_arbitrated() {
    require_phase(Phase::Authenticated, "mark_arbitrated");
    phase_history_.push_back(Phase::Arbitrated);
}

VerifyResult verify(std::span<const std::uint8_t> decrypted, std::span<const std::uint8_t> recovered) {
    if (decrypted.size() != recovered.size()) {
        throw std::invalid_argument("verify: M has " + std::to_string(decrypted.size()) + " bits, M' has " +
                                    std::to_string(recovered.size()));
    }
    VerifyResult result;
    for (std::size_t i = 0; i < decrypted.size(); i++) {
        if ((decrypted[i] != 0) != (recovered[i] != 0)) {
            result.mismatch_positions.push_back(i + 1);
        }
    }
    result.accept = result.mismatch_positions.empty();
    return result;
}

nlohmann::ordered_json session_trace_json(const GhzSession& session, const AuthenticationResult* auth,
                                          const Transcript& transcript) {
    nlohmann::ordered_json j;
    j["session_id"] = session.id();
    j["n_bits"] = session.n_bits();
    auto phases = nlohmann::ordered_json::array();
    for (auto p : session.phase_history()) {
        phases.push_back(name(p));
    }
    j["phase_history"] = std::move(phases);
    auto outcomes = nlohmann::ordered_json::array();
    auto anomalies = nlohmann::ordered_json::array();
    if (auth) {
        for (auto o : auth->outcomes) {
            outcomes.push_back(name(o));
        }
        for (auto p : auth->anomaly_positions) {
            anomalies.push_back(p);
        }
    }
    j["bell_outcomes"] = std::move(outcomes);
    j["anomaly_positions"] = std::move(anomalies);
    j["transcript"] = totals_json(transcript);
    return j;
}

}  // namespace ghzsig
