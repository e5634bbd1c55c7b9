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

#include "bbcover/distance.h"
#include "bbcover/errors.h"
#include "oracles.h"

using namespace bbcover;

namespace {

void expect_witness(const BBCode &code, const DistanceResult &d) {
    ASSERT_EQ(d.witness.size(), code.n());
    EXPECT_EQ(d.witness.popcount(), d.value);
    EXPECT_EQ(classify_vec(code, d.sector, d.witness), OpClass::NontrivialLogical);
}

}  // namespace

TEST(Distance, SmallCodesAgainstExhaustion) {
    // n <= 24, so the oracle can try every vector
    for (BBCode c : {build_code("1+y+y^2", "1+x+x^2", 3, 3), build_code("1+x^2+x^3", "1+x^2+x^3", 7, 1),
                     build_code("1+x^5+x^3+x^5y", "y+x^2y+x^5y+x^3", 6, 2)}) {
        for (Basis b : {Basis::X, Basis::Z}) {
            std::size_t want = oracle::code_distance(c, b);
            DistanceOptions coset;
            DistanceResult d1 = sector_distance(c, b, coset);
            DistanceOptions mitm;
            mitm.allow_coset = false;
            DistanceResult d2 = sector_distance(c, b, mitm);
            mitm.use_shift_symmetry = false;
            DistanceResult d3 = sector_distance(c, b, mitm);
            EXPECT_EQ(d1.value, want);
            EXPECT_EQ(d2.value, want);
            EXPECT_EQ(d3.value, want);
            EXPECT_TRUE(d1.exact() && d2.exact() && d3.exact());
            expect_witness(c, d1);
            expect_witness(c, d2);
            expect_witness(c, d3);
        }
    }
}

TEST(Distance, ListedValues) {
    EXPECT_EQ(exact_distance(build_code("1+y+y^2", "1+x+x^2", 3, 3), 10).value, 2u);
    DistanceResult d72 = exact_distance(build_code("x^3+y+y^2", "y^3+x+x^2", 6, 6), 10);
    EXPECT_TRUE(d72.exact());
    EXPECT_EQ(d72.value, 6u);
    EXPECT_EQ(exact_distance(build_code("1+x^2+x^3y", "1+x^2+x^3y^2", 7, 3), 10).value, 6u);
}

TEST(Distance, SectorsAgree) {
    DistanceOptions o;
    for (BBCode c : {build_code("1+y+y^2", "1+x+x^2", 3, 3), build_code("y+x^2+x^3", "1+x^2+x^3", 7, 2),
                     build_code("1+x^2+x^3", "1+x^2+x^3", 7, 1)}) {
        auto same = verify_dx_equals_dz(c, o);
        ASSERT_TRUE(same.has_value());
        EXPECT_TRUE(*same);
    }
}

TEST(Distance, WmaxTooSmallGivesLowerBound) {
    BBCode c = build_code("x^3+y+y^2", "y^3+x+x^2", 6, 6);
    DistanceResult d = exact_distance(c, 4);
    EXPECT_EQ(d.kind, DistanceKind::LowerBoundInterval);
    EXPECT_EQ(d.value, 5u);
    EXPECT_TRUE(d.witness.size() == 0);
}

TEST(Distance, BudgetStopsWithLowerBound) {
    BBCode c = build_code("x^3+y+y^2", "y^3+x+x^2", 6, 6);
    DistanceOptions o;
    o.budget = 50;
    DistanceResult d = exact_distance(c, o);
    EXPECT_EQ(d.kind, DistanceKind::LowerBoundInterval);
    EXPECT_LE(d.value, 6u);
}

TEST(Distance, WorkersDoNotChangeResult) {
    BBCode c = build_code("1+x^2+x^3y", "1+x^2+x^3y^2", 7, 3);
    DistanceOptions one, four;
    four.workers = 4;
    DistanceResult a = exact_distance(c, one), b = exact_distance(c, four);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness, b.witness);
}

TEST(Distance, RefusesK0) {
    EXPECT_THROW(exact_distance(build_code("1", "1", 1, 1), 3), RefusalError);
    DistanceOptions o;
    o.w_max = 0;
    EXPECT_THROW(exact_distance(build_code("1+y+y^2", "1+x+x^2", 3, 3), o), RefusalError);
}

TEST(Distance, SampledUpperBoundIsSound) {
    BBCode c = build_code("x^3+y+y^2", "y^3+x+x^2", 6, 6);
    DistanceResult ub = sampled_upper_bound(c, Basis::Z, 50, 3);
    ASSERT_EQ(ub.kind, DistanceKind::UpperBound);
    EXPECT_GE(ub.value, 6u);
    expect_witness(c, ub);
    DistanceResult again = sampled_upper_bound(c, Basis::Z, 50, 3);
    EXPECT_EQ(again.witness, ub.witness);
}

TEST(Distance, MinWeightLogicalsAreAllNontrivial) {
    BBCode c = build_code("1+y+y^2", "1+x+x^2", 3, 3);
    auto all = min_weight_logicals(c, Basis::Z, 2);
    // oracle count of weight-2 nontrivial Z logicals
    auto stab = oracle::span(c.hz());
    std::size_t count = 0;
    for (const BitVec &v : oracle::kernel(c.hx())) {
        if (v.popcount() == 2 && !stab.count(v)) {
            count++;
        }
    }
    EXPECT_EQ(all.size(), count);
    for (const auto &s : all) {
        EXPECT_EQ(classify_vec(c, Basis::Z, BitVec::from_support(c.n(), s)), OpClass::NontrivialLogical);
    }
}

TEST(Distance, ShiftInvariance) {
    // multiplying A and B by one monomial relabels checks only
    BBCode c = build_code("y+x^2+x^3", "1+x^2+x^3", 7, 2);
    BBCode d = build_code(poly_mul(c.A(), Poly::monomial(c.ctx(), {3, 1})), poly_mul(c.B(), Poly::monomial(c.ctx(), {3, 1})));
    EXPECT_EQ(exact_distance(c, 10).value, exact_distance(d, 10).value);
}
