// Copyright 2026 The bbcover Authors
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

#ifndef BBCOVER_BIT_VECTOR_H
#define BBCOVER_BIT_VECTOR_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace bbcover {

/// A fixed-length vector over GF(2), packed 64 bits per word.
///
/// Bit j lives in word j / 64 at position j % 64 (least significant first).
/// Bits at positions >= size() are always zero, so word-wise equality,
/// hashing and popcount need no masking.
class BitVec {
   public:
    using word_t = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVec() = default;
    explicit BitVec(std::size_t num_bits) : num_bits_(num_bits), words_(num_words_for(num_bits), 0) {
    }

    static std::size_t num_words_for(std::size_t num_bits) {
        return (num_bits + kWordBits - 1) / kWordBits;
    }

    /// Builds a vector of length `num_bits` with ones at `positions`.
    /// Repeated positions cancel.
    static BitVec from_support(std::size_t num_bits, const std::vector<std::size_t> &positions);

    std::size_t size() const {
        return num_bits_;
    }
    std::size_t num_words() const {
        return words_.size();
    }
    const word_t *data() const {
        return words_.data();
    }
    word_t *data() {
        return words_.data();
    }
    const std::vector<word_t> &words() const {
        return words_;
    }

    bool get(std::size_t j) const {
        return (words_[j / kWordBits] >> (j % kWordBits)) & 1;
    }
    void set(std::size_t j, bool value = true) {
        word_t mask = word_t{1} << (j % kWordBits);
        if (value) {
            words_[j / kWordBits] |= mask;
        } else {
            words_[j / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t j) {
        words_[j / kWordBits] ^= word_t{1} << (j % kWordBits);
    }

    BitVec &operator^=(const BitVec &other);
    BitVec operator^(const BitVec &other) const {
        BitVec out = *this;
        out ^= other;
        return out;
    }
    BitVec &operator&=(const BitVec &other);

    std::size_t popcount() const {
        std::size_t total = 0;
        for (word_t w : words_) {
            total += static_cast<std::size_t>(std::popcount(w));
        }
        return total;
    }
    bool is_zero() const {
        for (word_t w : words_) {
            if (w != 0) {
                return false;
            }
        }
        return true;
    }
    /// Parity of the overlap, i.e. the GF(2) inner product.
    bool dot(const BitVec &other) const;

    /// Index of the lowest set bit, or size() when zero.
    std::size_t first_one() const;
    /// Positions of the set bits, ascending.
    std::vector<std::size_t> support() const;

    /// Sub-vector [begin, begin + length).
    BitVec slice(std::size_t begin, std::size_t length) const;
    /// Concatenation: this vector followed by `tail`.
    BitVec concat(const BitVec &tail) const;

    bool operator==(const BitVec &other) const = default;
    /// Total order: by length, then by the lowest differing bit (a vector with
    /// a one where the other has a zero sorts later).
    bool operator<(const BitVec &other) const;

    /// Hex rendering; hex digit d holds bits 4d..4d+3, bit 4d in the lowest
    /// position of the digit.
    std::string to_hex() const;
    static BitVec from_hex(std::string_view hex, std::size_t num_bits);
    /// '0'/'1' characters in index order.
    std::string to_bit_string() const;

   private:
    std::size_t num_bits_ = 0;
    std::vector<word_t> words_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec &v) const {
        std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ v.size();
        for (std::uint64_t w : v.words()) {
            h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace bbcover

#endif
