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

#ifndef BBCOVER_DISTANCE_H
#define BBCOVER_DISTANCE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bbcover/bb_code.h"

namespace bbcover {

enum class DistanceKind { Exact, UpperBound, LowerBoundInterval };
enum class DistanceMethod { Enumeration, Coset, LiftDerived, InformationSet };

std::string distance_kind_name(DistanceKind kind);
std::string distance_method_name(DistanceMethod method);
DistanceKind parse_distance_kind(const std::string &name);

/// Exact: d == value, witnessed. UpperBound: d <= value, witnessed.
/// LowerBoundInterval: d >= value, no logical lighter than value exists.
struct DistanceResult {
    DistanceKind kind = DistanceKind::LowerBoundInterval;
    std::size_t value = 0;
    DistanceMethod method = DistanceMethod::Enumeration;
    std::size_t w_max = 0;
    /// Operator type of the witness: Z for the Z-distance, X for the X-distance.
    Basis sector = Basis::Z;
    /// Logical of weight `value` for Exact and UpperBound; empty otherwise.
    BitVec witness;

    bool exact() const {
        return kind == DistanceKind::Exact;
    }
    std::string to_string() const;
};

struct DistanceOptions {
    std::size_t w_max = 10;
    std::size_t workers = 1;
    /// Restrict the subset search to supports through qubit 0 (or, for
    /// right-block-only supports, through qubit lm). Valid for BB codes
    /// because monomial shifts are code automorphisms.
    bool use_shift_symmetry = true;
    /// Allow the coset enumeration path when it is small enough.
    bool allow_coset = true;
    /// Cap on low-half table entries plus high-half subsets per weight;
    /// 0 means no cap. Exceeding it ends the search with a lower bound.
    std::uint64_t budget = 0;
};

/// Minimum weight of a `type` logical (kernel of code.check_for(type), outside
/// code.stabilizers_for(type)).
DistanceResult sector_distance(const BBCode &code, Basis type, const DistanceOptions &options);

/// The Z-distance, which equals the X-distance for BB codes.
DistanceResult exact_distance(const BBCode &code, std::size_t w_max);
DistanceResult exact_distance(const BBCode &code, const DistanceOptions &options);

/// Both sectors exactly; nullopt if either sector stayed a bound.
std::optional<bool> verify_dx_equals_dz(const BBCode &code, const DistanceOptions &options);

/// Every `type` nontrivial logical of exactly weight w, as sorted supports in
/// lexicographic order. Exhaustive: no shift-symmetry reduction.
/// Randomized upper bound: for each of `iterations` random column orders,
/// row-reduce a kernel basis in that order and keep the lightest row that is
/// a nontrivial logical. Deterministic for a fixed seed. Returns an UpperBound
/// with a witness, or a LowerBoundInterval of 1 if nothing was found.
DistanceResult sampled_upper_bound(const BBCode &code, Basis type, std::size_t iterations, std::uint64_t seed);

std::vector<std::vector<std::size_t>> min_weight_logicals(const BBCode &code, Basis type, std::size_t w);

}  // namespace bbcover

#endif
