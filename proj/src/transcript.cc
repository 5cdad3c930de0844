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

#include "ghzsig/transcript.h"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace ghzsig {

namespace {

std::string lower_name(Party p) {
    std::string s(name(p));
    for (auto& c : s) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return s;
}

std::string channel_name(Party from, Party to) {
    return lower_name(from) + "_to_" + lower_name(to);
}

}  // namespace

std::string_view name(Party party) {
    switch (party) {
        case Party::Alice:
            return "Alice";
        case Party::Bob:
            return "Bob";
        case Party::Trent:
            return "Trent";
        case Party::Eve:
            return "Eve";
    }
    return "?";
}

void Transcript::log(Party from, Party to, Carrier kind, std::size_t count, std::string label) {
    if (from == to) {
        throw std::invalid_argument("transcript entry needs distinct sender and receiver");
    }
    entries_.push_back({from, to, kind, count, std::move(label)});
    totals_[{from, to, kind}] += count;
}

std::size_t Transcript::total(Party from, Party to, Carrier kind) const {
    auto it = totals_.find({from, to, kind});
    return it == totals_.end() ? 0 : it->second;
}

std::size_t Transcript::total_sent(Party from, Carrier kind) const {
    std::size_t sum = 0;
    for (const auto& [key, count] : totals_) {
        if (std::get<0>(key) == from && std::get<2>(key) == kind) {
            sum += count;
        }
    }
    return sum;
}

std::size_t Transcript::total_received(Party to, Carrier kind) const {
    std::size_t sum = 0;
    for (const auto& [key, count] : totals_) {
        if (std::get<1>(key) == to && std::get<2>(key) == kind) {
            sum += count;
        }
    }
    return sum;
}

nlohmann::ordered_json totals_json(const Transcript& transcript) {
    nlohmann::ordered_json qubits = nlohmann::ordered_json::object();
    nlohmann::ordered_json classical = nlohmann::ordered_json::object();
    for (const auto& [key, count] : transcript.totals()) {
        auto& target = std::get<2>(key) == Carrier::Qubit ? qubits : classical;
        target[channel_name(std::get<0>(key), std::get<1>(key))] = count;
    }
    nlohmann::ordered_json j;
    j["qubits"] = std::move(qubits);
    j["classical_bits"] = std::move(classical);
    return j;
}

nlohmann::ordered_json entries_json(const Transcript& transcript) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& e : transcript.entries()) {
        nlohmann::ordered_json j;
        j["from"] = name(e.from);
        j["to"] = name(e.to);
        j["kind"] = e.kind == Carrier::Qubit ? "qubit" : "classical_bit";
        j["count"] = e.count;
        j["label"] = e.label;
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace ghzsig
