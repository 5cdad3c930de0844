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

#ifndef GHZSIG_SIGNATURE_H
#define GHZSIG_SIGNATURE_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "ghzsig/bits.h"
#include "ghzsig/rng.h"
#include "ghzsig/state_vector.h"
#include "ghzsig/transcript.h"
#include "json.hpp"

namespace ghzsig {

/// Session phases, in the only order they may occur.
enum class Phase { Initialized, ParticlesSentToAlice, Signed, ReturnedToBob, Authenticated, Arbitrated };

enum class Holder { Alice, Bob, InTransit };

enum class SignOp { Identity, SigmaX };

std::string_view name(Phase phase);
std::string_view name(Holder holder);

/// The operations Alice applied to each particle 3. SigmaX exactly where the
/// message bit is 1.
struct SignatureRecord {
    std::vector<SignOp> operations_applied;
    std::uint64_t session_id = 0;
};

/// Restricted handle on one particle 3 while it travels Alice -> Bob. Only
/// local operations on that particle are possible.
class ParticleInTransit {
   public:
    ParticleInTransit(std::size_t position, StateVector& triplet) : position_(position), triplet_(triplet) {
    }
    /// 1-based triplet position.
    std::size_t position() const {
        return position_;
    }
    void apply_pauli_x() {
        triplet_.apply_pauli_x(QubitIndex{3});
    }
    void apply_pauli_z() {
        triplet_.apply_pauli_z(QubitIndex{3});
    }

   private:
    std::size_t position_;
    StateVector& triplet_;
};

/// Called once per particle on the Alice -> Bob leg.
using TransitHook = std::function<void(ParticleInTransit&)>;

struct AuthenticationResult {
    /// M'. PhiPlus/PhiMinus read as 0, PsiPlus/PsiMinus as 1.
    Bits recovered;
    std::vector<BellOutcome> outcomes;
    /// Born probability of each observed outcome.
    std::vector<double> outcome_probabilities;
    /// 1-based positions that produced PhiMinus or PsiMinus.
    std::vector<std::size_t> anomaly_positions;
};

/// N GHZ triplets prepared by Bob, together with who holds which particle and
/// how far the protocol has progressed.
///
/// Each triplet is simulated as its own 3-qubit state; the protocol never
/// entangles different triplets. Every operation validates its phase and
/// arguments before touching any state, so a throwing call leaves the session
/// exactly as it was.
class GhzSession {
   public:
    /// Throws std::invalid_argument for n_bits == 0.
    static GhzSession init(std::size_t n_bits, Rng& rng);

    /// Bob -> Alice: every particle 3. Logs n_bits qubits.
    void send_particles_to_alice(Transcript& transcript);

    /// Alice applies sigma_x to particle 3 of triplet i iff message[i] == 1.
    SignatureRecord sign(std::span<const std::uint8_t> message);

    /// Alice -> Bob: the signed particles 3 (the signature |S>). `hook`, when
    /// set, sees every particle in transit. Logs n_bits qubits.
    void return_particles_to_bob(const SignatureRecord& record, Transcript& transcript,
                                 const TransitHook& hook = {});

    /// Per triplet: CNOT with qubit 2 as control and qubit 1 as target, then a
    /// Bell measurement of qubits (2, 3).
    AuthenticationResult authenticate(Rng& rng);

    /// Records that a dispute over this session went to arbitration.
    void mark_arbitrated();

    std::uint64_t id() const {
        return id_;
    }
    std::size_t n_bits() const {
        return triplets_.size();
    }
    Phase phase() const {
        return phase_history_.back();
    }
    const std::vector<Phase>& phase_history() const {
        return phase_history_;
    }
    /// 0-based index.
    const StateVector& triplet(std::size_t index) const {
        return triplets_.at(index);
    }
    /// Holders of particles 1, 2, 3 of triplet `index` (0-based).
    const std::array<Holder, 3>& custody(std::size_t index) const {
        return custody_.at(index);
    }

   private:
    GhzSession(std::uint64_t id, std::size_t n_bits);

    void require_phase(Phase expected, std::string_view operation) const;
    void set_particle3(Holder holder);

    std::uint64_t id_;
    std::vector<StateVector> triplets_;
    std::vector<std::array<Holder, 3>> custody_;
    std::vector<Phase> phase_history_;
};

struct VerifyResult {
    bool accept = false;
    /// 1-based positions where the two strings differ.
    std::vector<std::size_t> mismatch_positions;
};

/// Compares the decrypted message M with the recovered M'.
/// Throws std::invalid_argument on length mismatch.
VerifyResult verify(std::span<const std::uint8_t> decrypted, std::span<const std::uint8_t> recovered);

/// Phase history, per-triplet Bell outcomes, anomaly positions and transcript totals.
nlohmann::ordered_json session_trace_json(const GhzSession& session, const AuthenticationResult* auth,
                                          const Transcript& transcript);

}  // namespace ghzsig

#endif
