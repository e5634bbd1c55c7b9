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

#ifndef BBCOVER_RECORDS_H
#define BBCOVER_RECORDS_H

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bbcover/bb_code.h"
#include "bbcover/distance.h"

namespace bbcover {

/// Distance cell of a record: what was established and how.
struct DistanceSummary {
    DistanceKind kind = DistanceKind::Exact;
    std::size_t value = 0;
    std::size_t w_max = 0;
    DistanceMethod method = DistanceMethod::Enumeration;
    bool operator==(const DistanceSummary &) const = default;
};

DistanceSummary summarize(const DistanceResult &d);

/// One line of machine-readable output.
struct ResultRecord {
    std::size_t l = 0;
    std::size_t m = 0;
    std::string A;
    std::string B;
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<DistanceSummary> d;
    std::optional<std::size_t> h;
    std::optional<bool> connected;
    std::optional<bool> canonical;
    /// Spec of the base code this record was derived from.
    std::optional<std::string> base;
    /// Rendered operator certifying d (exact or upper bound).
    std::optional<std::string> witness;

    bool operator==(const ResultRecord &) const = default;
    std::string spec() const;
};

/// Fills l, m, A, B, n, k from a built code.
ResultRecord record_for(const BBCode &code);

/// Compact single-line JSON; keys absent when the optional is empty.
std::string record_to_json(const ResultRecord &rec);
/// Throws ParseError on malformed input.
ResultRecord record_from_json(std::string_view text);

std::string csv_header();
/// Fields in csv_header() order; empty cells for absent values.
std::string record_to_csv(const ResultRecord &rec);

/// A row of a sequence table as shipped in data/fixtures.
struct FixtureRow {
    std::size_t h = 1;
    std::string spec;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    DistanceKind d_kind = DistanceKind::Exact;
};

struct FixtureTable {
    std::string name;
    std::string description;
    std::string base;
    /// Sorted by h.
    std::vector<FixtureRow> rows;
};

FixtureTable parse_fixture_table(std::string_view text);
FixtureTable load_fixture_table(const std::string &path);
/// Every *.json file in `dir` that parses as a table, sorted by name.
std::vector<FixtureTable> load_fixture_dir(const std::string &dir);

/// A row of the k_h histogram data.
struct HistogramRow {
    std::string base;
    std::size_t lt = 0;
    std::size_t mt = 0;
    std::size_t h = 0;
    std::map<std::size_t, std::size_t> histogram;
};

std::vector<HistogramRow> load_histograms(const std::string &path);

/// "{8:32, 16:3, 32:1}".
std::string render_histogram(const std::map<std::size_t, std::size_t> &hist);

}  // namespace bbcover

#endif
