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

#include <algorithm>

#include "bbcover/errors.h"
#include "bbcover/records.h"
#include "bbcover/sequence.h"

#ifndef BBCOVER_DATA_DIR
#define BBCOVER_DATA_DIR "data"
#endif

using namespace bbcover;

TEST(Records, JsonRoundTrip) {
    ResultRecord r = record_for(build_code("x^3+y+y^2", "y^3+x+x^2", 12, 6));
    EXPECT_EQ(record_from_json(record_to_json(r)), r);
    r.d = DistanceSummary{DistanceKind::UpperBound, 12, 10, DistanceMethod::LiftDerived};
    r.h = 2;
    r.connected = true;
    r.canonical = true;
    r.base = "l=6 m=6 A=y+y^2+x^3 B=y^3+x+x^2";
    r.witness = "X(1|x)";
    EXPECT_EQ(record_from_json(record_to_json(r)), r);
    EXPECT_EQ(record_to_json(record_from_json(record_to_json(r))), record_to_json(r));
}

TEST(Records, SpecRoundTrip) {
    ResultRecord r = record_for(build_code("x^3+y+y^2", "y^3+x+x^2", 6, 6));
    EXPECT_EQ(record_for(parse_code_spec(r.spec())), r);
}

TEST(Records, Csv) {
    ResultRecord r = record_for(build_code("1+y+y^2", "1+x+x^2", 3, 3));
    EXPECT_EQ(record_to_csv(r), "3,3,1+y+y^2,1+x+x^2,18,8,,,,,,,,");
    r.d = DistanceSummary{DistanceKind::Exact, 2, 10, DistanceMethod::Coset};
    EXPECT_EQ(record_to_csv(r), "3,3,1+y+y^2,1+x+x^2,18,8,exact,2,10,coset,,,,");
    const std::string header = csv_header();
    EXPECT_EQ(std::count(header.begin(), header.end(), ','), 13);
}

TEST(Records, BadJsonRefused) {
    EXPECT_THROW(record_from_json("{"), ParseError);
    EXPECT_THROW(record_from_json("{\"l\": 3}"), ParseError);
}

TEST(Records, FixturesLoad) {
    auto tables = load_fixture_dir(std::string(BBCOVER_DATA_DIR) + "/fixtures");
    EXPECT_EQ(tables.size(), 9u);
    std::size_t rows = 0;
    for (const auto &t : tables) {
        ASSERT_FALSE(t.rows.empty());
        EXPECT_EQ(t.rows.front().h, 1u);
        EXPECT_EQ(t.rows.front().spec, t.base);
        rows += t.rows.size();
    }
    EXPECT_EQ(rows, 61u);
    auto hist = load_histograms(std::string(BBCOVER_DATA_DIR) + "/histograms.json");
    EXPECT_EQ(hist.size(), 12u);
    EXPECT_EQ(render_histogram(hist[2].histogram), "{8:32, 16:3, 32:1}");
}

TEST(Sequence, DistanceConsistency) {
    DistanceResult ex;
    ex.kind = DistanceKind::Exact;
    ex.value = 6;
    EXPECT_TRUE(distance_consistent(ex, 6, DistanceKind::Exact));
    EXPECT_FALSE(distance_consistent(ex, 8, DistanceKind::Exact));
    EXPECT_TRUE(distance_consistent(ex, 8, DistanceKind::UpperBound));
    DistanceResult ub;
    ub.kind = DistanceKind::UpperBound;
    ub.value = 12;
    EXPECT_TRUE(distance_consistent(ub, 12, DistanceKind::Exact));
    EXPECT_FALSE(distance_consistent(ub, 14, DistanceKind::Exact));
    EXPECT_TRUE(distance_consistent(ub, 30, DistanceKind::UpperBound));
    DistanceResult lb;
    lb.kind = DistanceKind::LowerBoundInterval;
    lb.value = 11;
    EXPECT_TRUE(distance_consistent(lb, 12, DistanceKind::Exact));
    EXPECT_FALSE(distance_consistent(lb, 10, DistanceKind::Exact));
}

TEST(Sequence, SmallTableRows) {
    FixtureTable t = load_fixture_table(std::string(BBCOVER_DATA_DIR) + "/fixtures/k8_w6.json");
    DistancePolicy policy;
    auto rows = run_sequence(t, policy, {1, 2, 3});
    ASSERT_EQ(rows.size(), 3u);
    std::size_t want[] = {2, 4, 6};
    for (std::size_t i = 0; i < 3; i++) {
        EXPECT_TRUE(rows[i].ok());
        EXPECT_TRUE(rows[i].distance.exact());
        EXPECT_EQ(rows[i].distance.value, want[i]);
    }
}
