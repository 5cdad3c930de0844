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

#ifndef GHZSIG_OTP_H
#define GHZSIG_OTP_H

#include <cstddef>
#include <span>
#include <vector>

#include "ghzsig/bits.h"

namespace ghzsig {

/// One party's copy of a shared secret key. Tracks which positions have
/// been used so that no key bit pads two messages.
class Key {
   public:
    Key() = default;
    explicit Key(Bits bits);

    std::size_t length() const {
        return bits_.size();
    }
    const Bits& bits() const {
        return bits_;
    }
    /// Position where the next encryption starts.
    std::size_t cursor() const {
        return cursor_;
    }
    std::size_t remaining() const {
        return bits_.size() - cursor_;
    }
    bool is_consumed(std::size_t position) const {
        return used_.at(position);
    }

    /// Marks [offset, offset + length) used and returns those bits.
    /// Throws KeyExhaustedError if the segment runs past the end and
    /// OneTimeViolationError if any bit in it was used before. On error the
    /// key is left unchanged.
    Bits consume(std::size_t offset, std::size_t length);

    bool operator==(const Key&) const = default;

   private:
    Bits bits_;
    std::vector<bool> used_;
    std::size_t cursor_ = 0;
};

/// E_K{M}. key_offset says where in the key stream the pad started; it is
/// public metadata.
struct Ciphertext {
    Bits bits;
    std::size_t key_offset = 0;

    bool operator==(const Ciphertext&) const = default;
};

/// message XOR the next |message| unused key bits (starting at key.cursor()).
Ciphertext otp_encrypt(Key& key, std::span<const std::uint8_t> message);

/// message XOR key[key_offset, key_offset + |message|).
Ciphertext otp_encrypt(Key& key, std::span<const std::uint8_t> message, std::size_t key_offset);

/// Inverse of otp_encrypt, consuming the same segment of this party's key copy.
Bits otp_decrypt(Key& key, const Ciphertext& ciphertext);

}  // namespace ghzsig

#endif
