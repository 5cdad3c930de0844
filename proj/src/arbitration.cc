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

#include "ghzsig/arbitration.h"

#include <stdexcept>
#include <string>
#include <utility>

#include "ghzsig/errors.h"

namespace ghzsig {

std::string_view name(Verdict verdict) {
    switch (verdict) {
        case Verdict::NotInvoked:
            return "NotInvoked";
        case Verdict::Valid:
            return "Valid";
        case Verdict::Invalid:
            return "Invalid";
    }
    return "?";
}

ArbitrationRecord::ArbitrationRecord(FingerprintParams params, std::shared_ptr<const LinearCode> code)
    : params_(params), code_(std::move(code)) {
}

ArbitrationRecord deposit_fingerprint(std::span<const std::uint8_t> message, const FingerprintParams& alice_params,
                                      Transcript& transcript) {
    if (alice_params.copies == 0) {
        throw std::invalid_argument("deposit needs at least one fingerprint copy");
    }
    auto code = std::make_shared<const LinearCode>(
        LinearCode::make(message.size(), alice_params.c_requested, alice_params.code_seed));
    ArbitrationRecord record(alice_params, code);
    for (std::size_t i = 0; i < alice_params.copies; i++) {
        record.deposit_.push_back(make_fingerprint(code, message));
    }
    std::size_t qubits = alice_params.copies * fingerprint_qubits(code->m());
    transcript.log(Party::Alice, Party::Trent, Carrier::Qubit, qubits, "fingerprint |f(M)>_T");
    return record;
}

Verdict arbitrate(ArbitrationRecord& record, std::span<const std::uint8_t> claimed_message, Rng& rng,
                  Transcript* transcript) {
    if (claimed_message.size() != record.n_bits()) {
        throw std::invalid_argument("arbitrate: claimed message has " + std::to_string(claimed_message.size()) +
                                    " bits, deposit is for " + std::to_string(record.n_bits()));
    }
    std::size_t rounds = record.params_.copies;
    if (record.deposit_.size() < rounds) {
        throw ResourceError("Trent holds " + std::to_string(record.deposit_.size()) + " fingerprint copies, " +
                            std::to_string(rounds) + " needed");
    }

    // Alice regenerates her code from the private parameters alone.
    auto alice_code = std::make_shared<const LinearCode>(
        LinearCode::make(claimed_message.size(), record.params_.c_requested, record.params_.code_seed));
    Bits claimed(claimed_message.begin(), claimed_message.end());
    std::size_t produced = 0;
    FingerprintSupplier alice_side = [&]() -> std::optional<FingerprintState> {
        produced++;
        return make_fingerprint(alice_code, claimed);
    };
    FingerprintSupplier trent_side = [&]() -> std::optional<FingerprintState> {
        if (record.deposit_.empty()) {
            return std::nullopt;
        }
        FingerprintState next = std::move(record.deposit_.front());
        record.deposit_.pop_front();
        return next;
    };

    Comparison result = repeated_swap_test(alice_side, trent_side, rounds, rng);
    if (transcript) {
        transcript->log(Party::Alice, Party::Trent, Carrier::Qubit, produced * fingerprint_qubits(alice_code->m()),
                        "fingerprint |f(M)>_A");
    }
    record.verdict_ = result == Comparison::Equal ? Verdict::Valid : Verdict::Invalid;
    return record.verdict_;
}

}  // namespace ghzsig
