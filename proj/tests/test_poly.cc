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

#include <random>

#include "bbcover/errors.h"
#include "bbcover/poly.h"
#include "oracles.h"

using namespace bbcover;

TEST(Poly, MonomialProducts) {
    RingContext c5{5, 1};
    EXPECT_EQ(mono_mul({1, 0}, {4, 0}, c5), (Monomial{0, 0}));
    RingContext c66{6, 6};
    EXPECT_EQ(mono_mul({3, 1}, {3, 5}, c66), (Monomial{0, 0}));
    RingContext c126{12, 6};
    EXPECT_EQ(mono_mul({9, 2}, {5, 5}, c126), (Monomial{2, 1}));
}

TEST(Poly, Products) {
    RingContext c33{3, 3};
    Poly p = parse_poly("x+xy^2+y", c33);
    EXPECT_EQ(poly_mul(p, Poly::one(c33)), p);
    EXPECT_TRUE(poly_mul(parse_poly("1+y+y^2", c33), parse_poly("1+y", c33)).is_zero());
    RingContext c21{2, 1};
    EXPECT_TRUE(poly_mul(parse_poly("1+x", c21), parse_poly("1+x", c21)).is_zero());
}

TEST(Poly, Transpose) {
    RingContext c66{6, 6};
    EXPECT_EQ(poly_transpose(Poly::one(c66)), Poly::one(c66));
    EXPECT_EQ(render(poly_transpose(parse_poly("x^3+y+y^2", c66))), "y^4+y^5+x^3");
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; i++) {
        Poly p = oracle::random_poly(rng, c66);
        EXPECT_EQ(poly_transpose(poly_transpose(p)), p);
    }
}

TEST(Poly, ToMatrix) {
    RingContext c66{6, 6};
    EXPECT_EQ(poly_to_matrix(Poly::one(c66)), BinMatrix::identity(36));
    RingContext c21{2, 1};
    EXPECT_EQ(poly_to_matrix(parse_poly("x", c21)), BinMatrix::permutation({1, 0}));
    Poly a = parse_poly("x^3+y+y^2", c66);
    EXPECT_EQ(poly_to_matrix(a), oracle::poly_matrix(a));
}

TEST(Poly, ParseExamples) {
    RingContext c33{3, 3};
    EXPECT_EQ(parse_poly("1 + x + x^2", c33).terms(), (std::vector<Monomial>{{0, 0}, {1, 0}, {2, 0}}));
    RingContext c66{6, 6};
    EXPECT_EQ(parse_poly("x^3 + y + y^2", c66).terms(), (std::vector<Monomial>{{0, 1}, {0, 2}, {3, 0}}));
    RingContext c61{6, 1};
    EXPECT_TRUE(parse_poly("x^7 + x^7", c61).is_zero());
    EXPECT_EQ(render(parse_poly("x^27", RingContext{12, 1})), "x^3");
    EXPECT_EQ(render(parse_poly("x*y^2 + x^2y", c33)), "xy^2+x^2y");
    EXPECT_EQ(render(parse_poly("0", c33)), "0");
}

TEST(Poly, ParseErrorsCarryOffsets) {
    RingContext c33{3, 3};
    auto offset = [&](const char *text) -> std::size_t {
        try {
            parse_poly(text, c33);
        } catch (const ParseError &e) {
            return e.position();
        }
        return 999;
    };
    EXPECT_EQ(offset("1+x^"), 4u);
    EXPECT_EQ(offset("1+z"), 2u);
    EXPECT_EQ(offset("x^-1"), 2u);
    EXPECT_EQ(offset(""), 0u);
    EXPECT_EQ(offset("1 x"), 2u);
}

TEST(Poly, VectorRoundTrip) {
    RingContext c{4, 3};
    std::mt19937_64 rng(2);
    for (int i = 0; i < 30; i++) {
        Poly p = oracle::random_poly(rng, c);
        EXPECT_EQ(poly_from_vec(c, poly_to_vec(p)), p);
        EXPECT_EQ(parse_poly(render(p), c), p);
    }
}

TEST(Poly, Monomials) {
    RingContext c{4, 3};
    EXPECT_EQ(make_monomial(c, -1, 7), (Monomial{3, 1}));
    EXPECT_EQ(monomial_index(c, {2, 1}), 7u);
    EXPECT_EQ(monomial_at(c, 7), (Monomial{2, 1}));
    EXPECT_EQ(render(Monomial{1, 2}), "xy^2");
    EXPECT_EQ(parse_monomial("x^5y", c), (Monomial{1, 1}));
    EXPECT_THROW(parse_monomial("x+y", c), ParseError);
}

TEST(Poly, MixedRingsRefused) {
    EXPECT_THROW(poly_add(Poly::one({2, 2}), Poly::one({2, 3})), RefusalError);
}

TEST(PolyProperty, MatrixIsRingHomomorphism) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; i++) {
        RingContext c{1 + rng() % 8, 1 + rng() % 8};
        Poly p = oracle::random_poly(rng, c), q = oracle::random_poly(rng, c);
        ASSERT_EQ(poly_to_matrix(poly_mul(p, q)), mat_mul(poly_to_matrix(p), poly_to_matrix(q)));
        ASSERT_EQ(poly_to_matrix(poly_add(p, q)), poly_to_matrix(p) + poly_to_matrix(q));
        ASSERT_EQ(poly_to_matrix(poly_transpose(p)), transpose(poly_to_matrix(p)));
        ASSERT_EQ(poly_mul(p, q), oracle::poly_product(p, q));
    }
}

TEST(PolyProperty, RowWeightEqualsTermCount) {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 50; i++) {
        RingContext c{1 + rng() % 8, 1 + rng() % 8};
        Poly p = oracle::random_poly(rng, c);
        ASSERT_LE(p.size(), c.size());
        BinMatrix m = poly_to_matrix(p);
        for (const BitVec &row : m.rows()) {
            ASSERT_EQ(row.popcount(), p.size());
        }
    }
}
