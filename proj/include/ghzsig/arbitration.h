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

#ifndef GHZSIG_ARBITRATION_H
#define GHZSIG_ARBITRATION_H

#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <span>
#include <string_view>

#include "ghzsig/fingerprint.h"
#include "ghzsig/rng.h"
#include "ghzsig/transcript.h"

namespace ghzsig {

/// Alice's private fingerprinting parameters. c_requested and code_seed pick
/// the code; copies is how many fingerprints Trent receives and how many swap
/// tests a dispute runs.
struct FingerprintParams {
    double c_requested = 2.0;
    std::uint64_t code_seed = 0;
    std::size_t copies = kDefaultSwapRepetitions;
};

enum class Verdict { NotInvoked, Valid, Invalid };

std::string_view name(Verdict verdict);

/// What Trent holds for one signed message: the deposited copies of |f(M)>_T
/// and the outcome of any dispute.
class ArbitrationRecord {
   public:
    std::size_t n_bits() const {
        return code_->n();
    }
    const FingerprintParams& params() const {
        return params_;
    }
    const std::shared_ptr<const LinearCode>& code() const {
        return code_;
    }
    std::size_t copies_held() const {
        return deposit_.size();
    }
    /// Next deposited copy, without consuming it.
    const FingerprintState& peek() const {
        return deposit_.at(0);
    }
    Verdict verdict() const {
        return verdict_;
    }

   private:
    friend ArbitrationRecord deposit_fingerprint(std::span<const std::uint8_t> message,
                                                 const FingerprintParams& alice_params, Transcript& transcript);
    friend Verdict arbitrate(ArbitrationRecord& record, std::span<const std::uint8_t> claimed_message, Rng& rng,
                             Transcript* transcript);

    ArbitrationRecord(FingerprintParams params, std::shared_ptr<const LinearCode> code);

    FingerprintParams params_;
    std::shared_ptr<const LinearCode> code_;
    std::deque<FingerprintState> deposit_;
    Verdict verdict_ = Verdict::NotInvoked;
};

/// Alice builds `copies` fingerprints of the message with a code of n = |message|
/// and sends them to Trent. Logs copies * (log2(m) + 1) qubits Alice -> Trent.
ArbitrationRecord deposit_fingerprint(std::span<const std::uint8_t> message, const FingerprintParams& alice_params,
                                      Transcript& transcript);

/// Settles a dispute over `claimed_message`. Alice regenerates |f(claimed)>_A
/// from her private parameters and Trent swap-tests it against his deposited
/// copies, params().copies rounds at most. Valid iff every round accepts.
///
/// Throws std::invalid_argument if the claim has the wrong length and
/// ResourceError if Trent holds fewer than params().copies fingerprints.
/// When a transcript is given, the A-side fingerprints actually used are
/// logged Alice -> Trent.
Verdict arbitrate(ArbitrationRecord& record, std::span<const std::uint8_t> claimed_message, Rng& rng,
                  Transcript* transcript = nullptr);

}  // namespace ghzsig

#endif
