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
#include <set>

#include "bbcover/cover.h"
#include "bbcover/errors.h"

using namespace bbcover;

namespace {

BBCode base72() {
    return build_code("x^3+y+y^2", "y^3+x+x^2", 6, 6);
}
BBCode base18() {
    return build_code("1+y+y^2", "1+x+x^2", 3, 3);
}
BBCode gross() {
    return build_code("x^3+y+y^2", "y^3+x+x^2", 12, 6);
}

}  // namespace

TEST(Cover, CheckCoverExamples) {
    CoverCheck g = check_cover(base72(), gross());
    ASSERT_TRUE(g.ok());
    EXPECT_EQ(g.witness->u, 2u);
    EXPECT_EQ(g.witness->t, 1u);
    EXPECT_EQ(g.witness->h, 2u);

    CoverCheck triple = check_cover(base18(), build_code("x^3+y+y^2", "1+x+x^2", 9, 3));
    ASSERT_TRUE(triple.ok());
    EXPECT_EQ(triple.witness->h, 3u);
    // the same polynomials over l~=6 give a 2-cover with n=36
    CoverCheck six = check_cover(base18(), build_code("x^3+y+y^2", "1+x+x^2", 6, 3));
    ASSERT_TRUE(six.ok());
    EXPECT_EQ(six.witness->h, 2u);
    EXPECT_EQ(six.witness->cover.n(), 36u);

    CoverCheck self = check_cover(base72(), base72());
    ASSERT_TRUE(self.ok());
    EXPECT_EQ(self.witness->h, 1u);
}

TEST(Cover, CheckCoverFailures) {
    EXPECT_EQ(check_cover(base72(), build_code("x^3+y+y^2", "y^3+x+x^2", 7, 6)).failed_condition, 1);
    EXPECT_EQ(check_cover(base72(), build_code("x^3+y+y^2", "y^3+x+x^2", 6, 9)).failed_condition, 2);
    EXPECT_EQ(check_cover(base72(), build_code("x^4+y+y^2", "y^3+x+x^2", 12, 6)).failed_condition, 3);
    EXPECT_EQ(check_cover(base72(), build_code("x^3+y+y^2", "y^3+x+x^3", 12, 6)).failed_condition, 4);
    EXPECT_THROW(require_cover(base72(), build_code("x^3+y+y^2", "y^3+x+x^2", 7, 6)), RefusalError);
}

TEST(Cover, TermMatchingIgnoresOrder) {
    // x^9 projects to x^3 and y^7 to y in the 6x6 base
    CoverCheck c = check_cover(base72(), build_code("y^7+x^9+y^2", "y^3+x+x^2", 12, 12));
    ASSERT_TRUE(c.ok());
    EXPECT_EQ(c.witness->h, 4u);
}

TEST(Cover, Projection) {
    RingContext base{6, 6};
    EXPECT_EQ(project_monomial(base, {7, 3}), (Monomial{1, 3}));
    RingContext cover{12, 6};
    Poly f = parse_poly("1+x+x^2+x^3+xy^3+x^5y^3+x^6+x^7+x^8+x^9+x^7y^3+x^11y^3", cover);
    EXPECT_TRUE(project_poly(base, f).is_zero());
}

TEST(Cover, EnumerationHistograms) {
    EXPECT_EQ(enumerate_covers(base18(), 6, 3).k_histogram, (std::map<std::size_t, std::size_t>{{8, 3}, {16, 1}}));
    EXPECT_EQ(enumerate_covers(base72(), 12, 6).k_histogram, (std::map<std::size_t, std::size_t>{{12, 16}}));
    EXPECT_EQ(enumerate_covers(build_code("1+x^2+x^3", "1+x^2+x^3", 7, 1), 7, 2).k_histogram,
              (std::map<std::size_t, std::size_t>{{6, 15}, {12, 1}}));
}

TEST(Cover, EnumerationFlags) {
    CoverEnumeration raw = enumerate_covers(base18(), 6, 3, {false, 1, false});
    EXPECT_EQ(raw.candidates, 64u);
    EXPECT_EQ(raw.classes.size(), 64u);
    CoverEnumeration conn = enumerate_covers(base18(), 6, 3, {true, 1, true});
    for (const auto &c : conn.classes) {
        EXPECT_TRUE(c.connected);
    }
    EXPECT_EQ(conn.k_histogram, (std::map<std::size_t, std::size_t>{{8, 3}}));
    CoverEnumeration par = enumerate_covers(base18(), 12, 3, {true, 3, false});
    CoverEnumeration ser = enumerate_covers(base18(), 12, 3, {true, 1, false});
    ASSERT_EQ(par.classes.size(), ser.classes.size());
    for (std::size_t i = 0; i < par.classes.size(); i++) {
        EXPECT_EQ(par.classes[i].A, ser.classes[i].A);
        EXPECT_EQ(par.classes[i].B, ser.classes[i].B);
    }
    EXPECT_THROW(enumerate_covers(base18(), 7, 3), RefusalError);
}

TEST(Cover, CanonicalFormOrbit) {
    BBCode base = base18();
    RingContext cover{6, 3};
    Poly At = parse_poly("x^3+y+y^2", cover), Bt = parse_poly("1+x+x^2", cover);
    auto rep = canonical_form(At, Bt, base);
    // deck monomial x^l
    auto deck = canonical_form(poly_shift(At, {3, 0}), Bt, base);
    EXPECT_EQ(rep, deck);
    // x^3+x^3y+y^2 is x^3y^2 times x^3+y+y^2, and y^2 fixes 1+y+y^2, so both
    // spellings land in one class
    auto other = canonical_form(parse_poly("x^3+x^3y+y^2", cover), Bt, base);
    EXPECT_EQ(rep, other);
    EXPECT_EQ(poly_shift(At, {3, 2}), parse_poly("x^3+x^3y+y^2", cover));
}

TEST(Cover, CanonicalFormIdempotent) {
    BBCode base = base72();
    RingContext cover{12, 12};
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; i++) {
        auto lift = [&](const Poly &p) {
            std::vector<Monomial> terms;
            for (const auto &t : p.terms()) {
                terms.push_back({t.a + 6 * (rng() % 2), t.b + 6 * (rng() % 2)});
            }
            return Poly(cover, terms);
        };
        Poly At = lift(base.A()), Bt = lift(base.B());
        auto once = canonical_form(At, Bt, base);
        auto twice = canonical_form(once.first, once.second, base);
        ASSERT_EQ(once, twice);
        ASSERT_TRUE(check_cover(base, build_code(once.first, once.second)).ok());
    }
}

TEST(Cover, TannerGraphCounts) {
    BBCode c = base18();
    TannerGraph g = build_tanner_graph(c);
    EXPECT_EQ(g.num_checks(), 18u);
    EXPECT_EQ(g.num_qubits(), 18u);
    EXPECT_EQ(g.edges.size(), c.hx().popcount() + c.hz().popcount());
    EXPECT_EQ(g.edges.size(), 108u);
    auto adj = g.adjacency();
    for (std::uint32_t v = 0; v < 9; v++) {
        EXPECT_EQ(adj[v].size(), c.A().size() + c.B().size());
    }
    TannerGraph tiny = build_tanner_graph(build_code("1", "1", 1, 1));
    EXPECT_EQ(tiny.num_checks(), 2u);
    EXPECT_EQ(tiny.num_qubits(), 2u);
    EXPECT_EQ(tiny.edges.size(), 4u);
    EXPECT_TRUE(is_connected(tiny));
}

TEST(Cover, DerivedGraphs) {
    CoverWitness self = require_cover(base18(), base18());
    TannerGraph d = build_derived_graph(base18(), self);
    EXPECT_EQ(d.edges, build_tanner_graph(base18()).edges);

    CoverWitness w = require_cover(base72(), gross());
    TannerGraph dg = build_derived_graph(base72(), w);
    EXPECT_EQ(dg.per_class, 72u);
    EXPECT_TRUE(verify_cover_isomorphism(base72(), gross(), w));

    BBCode c36 = build_code("x^3+y+y^2", "1+x+x^2", 6, 3);
    CoverWitness w36 = require_cover(base18(), c36);
    IsomorphismReport r = check_cover_isomorphism(base18(), c36, w36);
    EXPECT_TRUE(r.ok()) << r.detail;
}

TEST(Cover, CorruptedWitnessFailsGraphCheck) {
    CoverWitness w = require_cover(base72(), gross());
    CoverWitness bad = w;
    bad.a_match[0].cover.a = (bad.a_match[0].cover.a + 1) % 12;
    EXPECT_FALSE(verify_cover_isomorphism(base72(), gross(), bad));
}

TEST(Cover, Connectivity) {
    // even x powers only: two components
    EXPECT_FALSE(is_connected(build_tanner_graph(build_code("1+y+y^2", "1+x^2+x^4", 6, 3))));
    // x^3 = x x x crosses to the other sheet
    EXPECT_TRUE(is_connected(build_tanner_graph(build_code("1+y+y^2", "1+x+x^2", 6, 3))));
    EXPECT_TRUE(is_connected(build_tanner_graph(build_code("x^3+y+y^2", "1+x+x^2", 6, 3))));
}
