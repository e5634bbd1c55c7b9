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

#ifndef BBCOVER_SEQUENCE_H
#define BBCOVER_SEQUENCE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bbcover/bb_code.h"
#include "bbcover/cover.h"
#include "bbcover/distance.h"
#include "bbcover/records.h"

namespace bbcover {

/// How a table cell's distance is obtained.
///   n <= exact_n_max: exhaustive search up to w_max (exact when d <= w_max).
///   otherwise, or when the search stops short: the lighter of the lifted base
///   witness (h d) and a seeded information-set sample, reported as a bound.
struct DistancePolicy {
    std::size_t exact_n_max = 100;
    std::size_t w_max = 10;
    std::size_t workers = 1;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
};

DistanceResult policy_distance(const BBCode &code, const DistancePolicy &policy,
                               const std::optional<CoverWitness> &witness = std::nullopt,
                               const std::optional<DistanceResult> &base_d = std::nullopt);

/// Whether a computed distance can be true given a listed value.
bool distance_consistent(const DistanceResult &ours, std::size_t listed, DistanceKind listed_kind);

struct SequenceRowResult {
    FixtureRow expected;
    ResultRecord record;
    DistanceResult distance;
    bool n_ok = false;
    bool k_ok = false;
    bool cover_ok = false;
    std::string cover_reason;
    bool d_consistent = false;
    double k_seconds = 0;
    bool ok() const {
        return n_ok && k_ok && cover_ok && d_consistent;
    }
};

/// Evaluates the rows whose h is in `hs` (all rows when empty).
std::vector<SequenceRowResult> run_sequence(const FixtureTable &table, const DistancePolicy &policy,
                                            const std::vector<std::size_t> &hs = {});

}  // namespace bbcover

#endif
