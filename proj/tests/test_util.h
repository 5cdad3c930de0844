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


#ifndef GHZSIG_TESTS_TEST_UTIL_H
#define GHZSIG_TESTS_TEST_UTIL_H

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ghzsig/rng.h"
#include "ghzsig/state_vector.h"

namespace ghzsig::testing {

// Dense matrix oracles. Built from explicit 2x2 / 4x4 / 8x8 gate matrices and
// Kronecker products, independent of the index arithmetic in StateVector.

using Matrix = std::vector<std::vector<Amplitude>>;

inline Matrix identity(std::size_t dim) {
    Matrix m(dim, std::vector<Amplitude>(dim, 0.0));
    for (std::size_t i = 0; i < dim; i++) {
        m[i][i] = 1.0;
    }
    return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    std::size_t ra = a.size();
    std::size_t rb = b.size();
    Matrix out(ra * rb, std::vector<Amplitude>(ra * rb, 0.0));
    for (std::size_t i = 0; i < ra; i++) {
        for (std::size_t j = 0; j < ra; j++) {
            for (std::size_t k = 0; k < rb; k++) {
                for (std::size_t l = 0; l < rb; l++) {
                    out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return out;
}

inline Matrix pauli_x_matrix() {
    return {{0.0, 1.0}, {1.0, 0.0}};
}

inline Matrix pauli_z_matrix() {
    return {{1.0, 0.0}, {0.0, -1.0}};
}

inline Matrix hadamard_matrix() {
    double h = 1 / std::sqrt(2.0);
    return {{h, h}, {h, -h}};
}

// I (x) ... (x) g (x) ... (x) I with g on 1-based qubit q of k.
inline Matrix embed_single(const Matrix& g, std::size_t q, std::size_t k) {
    Matrix out = {{1.0}};
    for (std::size_t i = 1; i <= k; i++) {
        out = kron(out, i == q ? g : identity(2));
    }
    return out;
}

// Permutation matrix of a classical reversible map on basis bit strings.
// `f` maps a vector of k bits (qubit 1 first) to another.
template <class F>
Matrix permutation_matrix(std::size_t k, F f) {
    std::size_t dim = std::size_t{1} << k;
    Matrix out(dim, std::vector<Amplitude>(dim, 0.0));
    for (std::size_t col = 0; col < dim; col++) {
        std::vector<int> bits(k);
        for (std::size_t i = 0; i < k; i++) {
            bits[i] = static_cast<int>((col >> (k - 1 - i)) & 1);
        }
        auto image = f(bits);
        std::size_t row = 0;
        for (std::size_t i = 0; i < k; i++) {
            row = (row << 1) | static_cast<std::size_t>(image[i]);
        }
        out[row][col] = 1.0;
    }
    return out;
}

inline Matrix cnot_matrix(std::size_t control, std::size_t target, std::size_t k) {
    return permutation_matrix(k, [&](std::vector<int> b) {
        if (b[control - 1]) {
            b[target - 1] ^= 1;
        }
        return b;
    });
}

inline Matrix cswap_matrix(std::size_t control, std::size_t a, std::size_t b, std::size_t k) {
    return permutation_matrix(k, [&](std::vector<int> bits) {
        if (bits[control - 1]) {
            std::swap(bits[a - 1], bits[b - 1]);
        }
        return bits;
    });
}

inline std::vector<Amplitude> matvec(const Matrix& m, std::span<const Amplitude> v) {
    std::vector<Amplitude> out(m.size(), 0.0);
    for (std::size_t i = 0; i < m.size(); i++) {
        for (std::size_t j = 0; j < v.size(); j++) {
            out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

inline double max_abs_diff(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

// Haar-ish random state: complex Gaussian amplitudes, normalized.
inline StateVector random_state(std::size_t k, Rng& rng) {
    std::vector<Amplitude> amps(std::size_t{1} << k);
    double norm2 = 0;
    for (auto& a : amps) {
        double u1 = 1 - rng.uniform();
        double u2 = rng.uniform();
        double r = std::sqrt(-2 * std::log(u1));
        a = {r * std::cos(2 * M_PI * u2), r * std::sin(2 * M_PI * u2)};
        norm2 += std::norm(a);
    }
    for (auto& a : amps) {
        a /= std::sqrt(norm2);
    }
    return StateVector::from_amplitudes(std::move(amps));
}

}  // namespace ghzsig::testing

#endif
