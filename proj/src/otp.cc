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

#include "ghzsig/otp.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "ghzsig/errors.h"

namespace ghzsig {

Key::Key(Bits bits) : bits_(std::move(bits)), used_(bits_.size(), false) {
    for (auto b : bits_) {
        if (b > 1) {
            throw std::invalid_argument("key bits must be 0 or 1");
        }
    }
}

Bits Key::consume(std::size_t offset, std::size_t length) {
    if (offset > bits_.size() || length > bits_.size() - offset) {
        throw KeyExhaustedError("key segment [" + std::to_string(offset) + ", " + std::to_string(offset + length) +
                                ") exceeds key length " + std::to_string(bits_.size()));
    }
    for (std::size_t i = offset; i < offset + length; i++) {
        if (used_[i]) {
            throw OneTimeViolationError("key bit " + std::to_string(i) + " was already used");
        }
    }
    for (std::size_t i = offset; i < offset + length; i++) {
        used_[i] = true;
    }
    cursor_ = std::max(cursor_, offset + length);
    return Bits(bits_.begin() + static_cast<std::ptrdiff_t>(offset),
                bits_.begin() + static_cast<std::ptrdiff_t>(offset + length));
}

Ciphertext otp_encrypt(Key& key, std::span<const std::uint8_t> message) {
    return otp_encrypt(key, message, key.cursor());
}

Ciphertext otp_encrypt(Key& key, std::span<const std::uint8_t> message, std::size_t key_offset) {
    for (auto b : message) {
        if (b > 1) {
            throw std::invalid_argument("message bits must be 0 or 1");
        }
    }
    Bits pad = key.consume(key_offset, message.size());
    return Ciphertext{xor_bits(message, pad), key_offset};
}

Bits otp_decrypt(Key& key, const Ciphertext& ciphertext) {
    Bits pad = key.consume(ciphertext.key_offset, ciphertext.bits.size());
    return xor_bits(ciphertext.bits, pad);
}

}  // namespace ghzsig
