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

#include "ghzsig/linear_code.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "ghzsig/errors.h"
#include "ghzsig/rng.h"

namespace ghzsig {

namespace {

constexpr int kMaxRankAttempts = 64;

bool is_power_of_two(std::size_t v) {
    return v != 0 && (v & (v - 1)) == 0;
}

void check_ratio(double c_requested) {
    if (!(c_requested > 1.0) || !std::isfinite(c_requested)) {
        throw std::invalid_argument("expansion ratio c must be a finite number > 1, got " + std::to_string(c_requested));
    }
}

}  // namespace

std::size_t codeword_length(std::size_t n, double c_requested) {
    if (n == 0) {
        throw std::invalid_argument("code input length n must be >= 1");
    }
    check_ratio(c_requested);
    double target = c_requested * static_cast<double>(n);
    if (target > static_cast<double>(std::size_t{1} << 40)) {
        throw std::invalid_argument("codeword length c*n is too large");
    }
    // Absorb representation error so that e.g. 2.0 * 64 lands on 128, not 129.
    auto needed = static_cast<std::size_t>(std::ceil(target - 1e-9));
    needed = std::max(needed, n + 1);
    std::size_t m = 1;
    while (m < needed) {
        m <<= 1;
    }
    return std::max<std::size_t>(m, 2);
}

std::size_t gf2_rank(std::vector<Bits> rows) {
    if (rows.empty()) {
        return 0;
    }
    std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); col++) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot][col]) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); r++) {
            if (r != rank && rows[r][col]) {
                for (std::size_t c = col; c < cols; c++) {
                    rows[r][c] ^= rows[rank][c];
                }
            }
        }
        rank++;
    }
    return rank;
}

LinearCode::LinearCode(std::size_t n, double c_requested, std::uint64_t seed, std::vector<Bits> rows)
    : n_(n), c_requested_(c_requested), seed_(seed), rows_(std::move(rows)) {
}

LinearCode LinearCode::make(std::size_t n, double c_requested, std::uint64_t seed) {
    std::size_t m = codeword_length(n, c_requested);
    Rng base(seed);
    for (int attempt = 0; attempt < kMaxRankAttempts; attempt++) {
        Rng rng = base.split(static_cast<std::uint64_t>(attempt));
        std::vector<Bits> rows(m, Bits(n));
        for (auto& row : rows) {
            for (auto& bit : row) {
                bit = rng.coin() ? 1 : 0;
            }
        }
        if (gf2_rank(rows) == n) {
            return LinearCode(n, c_requested, seed, std::move(rows));
        }
    }
    throw ConstructionError("no full-rank generator found for n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                            " after " + std::to_string(kMaxRankAttempts) + " attempts");
}

LinearCode LinearCode::from_generator(std::vector<Bits> rows, double c_requested, std::uint64_t seed) {
    check_ratio(c_requested);
    if (rows.empty() || !is_power_of_two(rows.size()) || rows.size() < 2) {
        throw std::invalid_argument("generator must have a power-of-two number of rows (>= 2)");
    }
    std::size_t n = rows[0].size();
    if (n == 0 || n >= rows.size()) {
        throw std::invalid_argument("generator must have 1 <= n < m columns");
    }
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw std::invalid_argument("generator rows have differing lengths");
        }
        for (auto b : row) {
            if (b > 1) {
                throw std::invalid_argument("generator entries must be 0 or 1");
            }
        }
    }
    if (gf2_rank(rows) != n) {
        throw std::invalid_argument("generator is not full rank over GF(2)");
    }
    return LinearCode(n, c_requested, seed, std::move(rows));
}

LinearCode LinearCode::repetition(std::size_t n, std::size_t m) {
    if (n == 0 || !is_power_of_two(m) || m <= n || m % n != 0) {
        throw std::invalid_argument("repetition code needs m a power of two, a multiple of n, and m > n");
    }
    std::size_t copies = m / n;
    std::vector<Bits> rows(m, Bits(n, 0));
    for (std::size_t i = 0; i < m; i++) {
        rows[i][i / copies] = 1;
    }
    return from_generator(std::move(rows), static_cast<double>(m) / static_cast<double>(n), 0);
}

Bits LinearCode::encode(std::span<const std::uint8_t> x) const {
    if (x.size() != n_) {
        throw std::invalid_argument(
            "encode: input has " + std::to_string(x.size()) + " bits, code expects " + std::to_string(n_));
    }
    Bits out(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); i++) {
        std::uint8_t parity = 0;
        const auto& row = rows_[i];
        for (std::size_t j = 0; j < n_; j++) {
            parity ^= row[j] & x[j];
        }
        out[i] = parity & 1;
    }
    return out;
}

std::size_t min_distance(const LinearCode& code) {
    std::size_t n = code.n();
    if (n > LinearCode::kMaxExhaustiveInputBits) {
        throw CapabilityError("min_distance enumerates 2^n inputs; n=" + std::to_string(n) + " exceeds " +
                              std::to_string(LinearCode::kMaxExhaustiveInputBits));
    }
    // Walk the inputs in Gray-code order so each step XORs in one generator column.
    std::size_t m = code.m();
    std::vector<Bits> columns(n, Bits(m));
    for (std::size_t i = 0; i < m; i++) {
        for (std::size_t j = 0; j < n; j++) {
            columns[j][i] = code.generator()[i][j];
        }
    }
    Bits word(m, 0);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < total; step++) {
        int flip = std::countr_zero(step);
        // Gray code: input bit `flip` toggles between consecutive inputs.
        const Bits& col = columns[static_cast<std::size_t>(flip)];
        for (std::size_t i = 0; i < m; i++) {
            word[i] ^= col[i];
        }
        best = std::min(best, hamming_weight(word));
    }
    return best;
}

nlohmann::ordered_json to_json(const LinearCode& code) {
    nlohmann::ordered_json j;
    j["n"] = code.n();
    j["m"] = code.m();
    j["c_requested"] = code.c_requested();
    j["seed"] = code.seed();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : code.generator()) {
        rows.push_back(to_string(row));
    }
    j["generator"] = std::move(rows);
    return j;
}

LinearCode linear_code_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("linear code JSON must be an object");
    }
    try {
        auto n = j.at("n").get<std::size_t>();
        auto m = j.at("m").get<std::size_t>();
        auto c_requested = j.at("c_requested").get<double>();
        auto seed = j.at("seed").get<std::uint64_t>();
        std::vector<Bits> rows;
        for (const auto& row : j.at("generator")) {
            rows.push_back(parse_bits(row.get<std::string>()));
        }
        if (rows.size() != m) {
            throw std::invalid_argument("generator row count does not match m");
        }
        LinearCode code = LinearCode::from_generator(std::move(rows), c_requested, seed);
        if (code.n() != n) {
            throw std::invalid_argument("generator column count does not match n");
        }
        return code;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed linear code JSON: ") + e.what());
    }
}

}  // namespace ghzsig
