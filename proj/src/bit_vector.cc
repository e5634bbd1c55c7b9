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

#include "bbcover/bit_vector.h"

#include <stdexcept>

#include "bbcover/errors.h"

namespace bbcover {

BitVec BitVec::from_support(std::size_t num_bits, const std::vector<std::size_t> &positions) {
    BitVec out(num_bits);
    for (std::size_t p : positions) {
        if (p >= num_bits) {
            throw RefusalError("support position " + std::to_string(p) + " out of range for length " +
                               std::to_string(num_bits));
        }
        out.flip(p);
    }
    return out;
}

BitVec &BitVec::operator^=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw RefusalError("bit-vector length mismatch: " + std::to_string(num_bits_) + " vs " +
                           std::to_string(other.num_bits_));
    }
    for (std::size_t i = 0; i < words_.size(); i++) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw RefusalError("bit-vector length mismatch: " + std::to_string(num_bits_) + " vs " +
                           std::to_string(other.num_bits_));
    }
    for (std::size_t i = 0; i < words_.size(); i++) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

bool BitVec::dot(const BitVec &other) const {
    if (other.num_bits_ != num_bits_) {
        throw RefusalError("bit-vector length mismatch: " + std::to_string(num_bits_) + " vs " +
                           std::to_string(other.num_bits_));
    }
    word_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); i++) {
        acc ^= words_[i] & other.words_[i];
    }
    return std::popcount(acc) & 1;
}

std::size_t BitVec::first_one() const {
    for (std::size_t i = 0; i < words_.size(); i++) {
        if (words_[i]) {
            return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
        }
    }
    return num_bits_;
}

std::vector<std::size_t> BitVec::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); i++) {
        word_t w = words_[i];
        while (w) {
            out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

BitVec BitVec::slice(std::size_t begin, std::size_t length) const {
    if (begin + length > num_bits_) {
        throw RefusalError("slice out of range");
    }
    BitVec out(length);
    for (std::size_t j = 0; j < length; j++) {
        if (get(begin + j)) {
            out.set(j);
        }
    }
    return out;
}

BitVec BitVec::concat(const BitVec &tail) const {
    BitVec out(num_bits_ + tail.num_bits_);
    for (std::size_t i = 0; i < words_.size(); i++) {
        out.words_[i] = words_[i];
    }
    for (std::size_t j : tail.support()) {
        out.set(num_bits_ + j);
    }
    return out;
}

bool BitVec::operator<(const BitVec &other) const {
    if (num_bits_ != other.num_bits_) {
        return num_bits_ < other.num_bits_;
    }
    for (std::size_t i = 0; i < words_.size(); i++) {
        word_t diff = words_[i] ^ other.words_[i];
        if (diff) {
            word_t low = diff & (~diff + 1);
            return (other.words_[i] & low) != 0;
        }
    }
    return false;
}

std::string BitVec::to_hex() const {
    static const char digits[] = "0123456789abcdef";
    std::size_t n_digits = (num_bits_ + 3) / 4;
    std::string out(n_digits, '0');
    for (std::size_t d = 0; d < n_digits; d++) {
        std::size_t bit = 4 * d;
        unsigned nibble = static_cast<unsigned>((words_[bit / kWordBits] >> (bit % kWordBits)) & 0xF);
        out[d] = digits[nibble];
    }
    return out;
}

BitVec BitVec::from_hex(std::string_view hex, std::size_t num_bits) {
    std::size_t n_digits = (num_bits + 3) / 4;
    if (hex.size() != n_digits) {
        throw ParseError("expected " + std::to_string(n_digits) + " hex digits, got " + std::to_string(hex.size()),
                         0);
    }
    BitVec out(num_bits);
    for (std::size_t d = 0; d < n_digits; d++) {
        char c = hex[d];
        unsigned nibble;
        if (c >= '0' && c <= '9') {
            nibble = static_cast<unsigned>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            nibble = static_cast<unsigned>(c - 'a' + 10);
        } else if (c >= 'A' && c <= 'F') {
            nibble = static_cast<unsigned>(c - 'A' + 10);
        } else {
            throw ParseError(std::string("bad hex digit '") + c + "'", d);
        }
        for (std::size_t b = 0; b < 4; b++) {
            if ((nibble >> b) & 1) {
                std::size_t j = 4 * d + b;
                if (j >= num_bits) {
                    throw ParseError("hex digit sets a bit past the end", d);
                }
                out.set(j);
            }
        }
    }
    return out;
}

std::string BitVec::to_bit_string() const {
    std::string out(num_bits_, '0');
    for (std::size_t j = 0; j < num_bits_; j++) {
        if (get(j)) {
            out[j] = '1';
        }
    }
    return out;
}

}  // namespace bbcover
