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

#include <gtest/gtest.h>

#include "bbcover/bit_vector.h"
#include "bbcover/errors.h"

using bbcover::BitVec;

TEST(BitVec, SetGetFlipAcrossWords) {
    BitVec v(130);
    v.set(0);
    v.set(64);
    v.set(129);
    EXPECT_TRUE(v.get(64));
    EXPECT_EQ(v.popcount(), 3u);
    v.flip(64);
    EXPECT_FALSE(v.get(64));
    EXPECT_EQ(v.support(), (std::vector<std::size_t>{0, 129}));
    EXPECT_EQ(v.first_one(), 0u);
}

TEST(BitVec, FromSupportCancelsRepeats) {
    BitVec v = BitVec::from_support(10, {3, 5, 3});
    EXPECT_EQ(v.support(), (std::vector<std::size_t>{5}));
}

TEST(BitVec, DotIsOverlapParity) {
    BitVec a = BitVec::from_support(70, {1, 2, 65});
    BitVec b = BitVec::from_support(70, {2, 65, 66});
    EXPECT_FALSE(a.dot(b));
    b.set(1);
    EXPECT_TRUE(a.dot(b));
}

TEST(BitVec, SliceAndConcat) {
    BitVec v = BitVec::from_support(100, {0, 63, 64, 99});
    BitVec s = v.slice(60, 10);
    EXPECT_EQ(s.support(), (std::vector<std::size_t>{3, 4}));
    BitVec c = s.concat(BitVec::from_support(3, {2}));
    EXPECT_EQ(c.size(), 13u);
    EXPECT_EQ(c.support(), (std::vector<std::size_t>{3, 4, 12}));
}

TEST(BitVec, HexRoundTrip) {
    BitVec v = BitVec::from_support(9, {0, 4, 8});
    EXPECT_EQ(v.to_hex(), "111");
    EXPECT_EQ(BitVec::from_hex("111", 9), v);
    BitVec w = BitVec::from_support(7, {1, 6});
    EXPECT_EQ(BitVec::from_hex(w.to_hex(), 7), w);
    EXPECT_THROW(BitVec::from_hex("1z", 8), bbcover::RefusalError);
}

TEST(BitVec, OrderIsByLowestDifferingBit) {
    BitVec a = BitVec::from_support(5, {1});
    BitVec b = BitVec::from_support(5, {0});
    // a has a zero at bit 0 where b has a one
    EXPECT_TRUE(a < b);
    EXPECT_FALSE(b < a);
    EXPECT_FALSE(a < a);
}

TEST(BitVec, BitStringIndexOrder) {
    EXPECT_EQ(BitVec::from_support(4, {0, 3}).to_bit_string(), "1001");
}
