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

#ifndef GHZSIG_TRANSCRIPT_H
#define GHZSIG_TRANSCRIPT_H

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "json.hpp"

namespace ghzsig {

enum class Party { Alice, Bob, Trent, Eve };

enum class Carrier { Qubit, ClassicalBit };

std::string_view name(Party party);

struct TranscriptEntry {
    Party from;
    Party to;
    Carrier kind;
    std::size_t count;
    std::string label;

    bool operator==(const TranscriptEntry&) const = default;
};

/// Append-only log of everything sent between parties, with running totals
/// per (from, to, kind).
class Transcript {
   public:
    using ChannelKey = std::tuple<Party, Party, Carrier>;

    /// Throws std::invalid_argument if from == to.
    void log(Party from, Party to, Carrier kind, std::size_t count, std::string label);

    const std::vector<TranscriptEntry>& entries() const {
        return entries_;
    }
    const std::map<ChannelKey, std::size_t>& totals() const {
        return totals_;
    }
    std::size_t total(Party from, Party to, Carrier kind) const;
    std::size_t total_sent(Party from, Carrier kind) const;
    std::size_t total_received(Party to, Carrier kind) const;

   private:
    std::vector<TranscriptEntry> entries_;
    std::map<ChannelKey, std::size_t> totals_;
};

/// {"qubits": {"bob_to_alice": n, ...}, "classical_bits": {...}}; channel
/// names are "<from>_to_<to>" in lower case.
nlohmann::ordered_json totals_json(const Transcript& transcript);

nlohmann::ordered_json entries_json(const Transcript& transcript);

}  // namespace ghzsig

#endif
