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

#ifndef BBCOVER_CHAIN_MAPS_H
#define BBCOVER_CHAIN_MAPS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bbcover/bb_code.h"
#include "bbcover/cover.h"
#include "bbcover/distance.h"

namespace bbcover {

enum class MapDirection { Projection, Lift };

/// Degree-wise matrices of a chain map between BB complexes
///   Z checks --H_Z^T--> qubits --H_X--> X checks
/// deg2 acts on Z checks, deg1 on qubits (block diagonal over the left and
/// right blocks), deg0 on X checks.
struct ChainMap {
    MapDirection direction = MapDirection::Projection;
    BinMatrix deg2;
    BinMatrix deg1;
    BinMatrix deg0;
    BBCode source;
    BBCode target;
    bool commutes = false;
};

/// lm x l~m~ matrix with a one at (pi(c~), c~) for every cover monomial c~.
BinMatrix projection_matrix(const RingContext &base_ctx, const RingContext &cover_ctx);

/// Cover -> base. Throws RefusalError naming the square that fails to commute.
ChainMap projection_map(const CoverWitness &witness);
/// Base -> cover, the transpose of projection_map.
ChainMap lifting_map(const CoverWitness &witness);

/// Both squares: deg1 H_Z^T(source) == H_Z^T(target) deg2 and
/// deg0 H_X(source) == H_X(target) deg1. Empty string when they commute,
/// else the name of the first failing square.
std::string failing_square(const ChainMap &cm);

/// Termwise p and tau on polynomials.
Poly project_poly_termwise(const CoverWitness &witness, const Poly &p);
Poly lift_poly(const CoverWitness &witness, const Poly &p);

enum class PTauResult { Identity, Zero };
/// p tau = h I over GF(2); throws InvariantError if it is neither I nor 0.
PTauResult compose_p_tau(const CoverWitness &witness);

/// Action on logical classes of one type: entry (i, j) is coordinate i of the
/// image of source class j, relative to the two given bases.
struct HomologyMap {
    BinMatrix matrix;
    Basis sector = Basis::Z;
};

/// Pushes the `sector` representatives of source_basis through deg1 and reads
/// their classes in target_basis. Also checks that source stabilizer
/// generators land on target stabilizers. Throws InvariantError on failure.
HomologyMap induced_homology_map(const ChainMap &cm, Basis sector, const LogicalBasis &source_basis,
                                 const LogicalBasis &target_basis);
HomologyMap induced_homology_map(const ChainMap &cm, Basis sector);

struct ClassifiedOp {
    PauliOp op;
    OpClass cls = OpClass::NotInKernel;
};

/// tau applied termwise; the result has weight h * |op|. Refuses ops outside
/// the base kernel.
ClassifiedOp lift_logical(const CoverWitness &witness, const PauliOp &op);
/// p applied termwise. Refuses ops outside the cover kernel.
ClassifiedOp project_logical(const CoverWitness &witness, const PauliOp &op);

struct BoundReport {
    std::size_t h = 1;
    std::size_t base_d = 0;
    std::optional<std::size_t> lower;
    std::optional<std::size_t> upper;
    /// False when the inequality is only conjectured (even h).
    bool lower_proven = false;
    bool upper_proven = false;
    /// The lifted base witness and its class in the cover.
    ClassifiedOp lifted_witness;

    /// True when lifted_witness is a nontrivial cover logical of weight h*d,
    /// which certifies the upper bound by itself.
    bool upper_witnessed() const {
        return lifted_witness.cls == OpClass::NontrivialLogical;
    }
    std::string to_string() const;
};

/// Bounds on the cover distance from an exact base distance:
///   odd h: d_h <= h d, and d <= d_h when k_h == k;
///   even h: the same inequalities, tagged as conjecture.
BoundReport distance_bounds(const CoverWitness &witness, const DistanceResult &base_d, std::size_t cover_k);

/// Per-support-term sheet choice (g1, g2) of a section.
struct SheetChoice {
    std::size_t g1 = 0;
    std::size_t g2 = 0;
};

/// Places term i of the op (left terms first, then right) on sheet choice[i].
PauliOp apply_section(const CoverWitness &witness, const PauliOp &op, const std::vector<SheetChoice> &choice);

struct WplResult {
    std::uint64_t enumerated = 0;
    /// Nontrivial cover logicals of weight |op|, in enumeration order.
    std::vector<PauliOp> hits;
};

/// Tries all h^|op| sheet assignments. Refuses when h^|op| > limit or when
/// op is not a base logical.
WplResult weight_preserving_lift_search(const CoverWitness &witness, const PauliOp &op, std::uint64_t limit,
                                        std::size_t workers = 1);

/// Whether multiplying every vertex by x^(l c1) y^(m c2) is a chain map from
/// the base complex into the cover complex.
bool constant_offset_section_is_chain_map(const CoverWitness &witness, std::size_t c1, std::size_t c2);

/// For an op on a single block: whether that block alone has zero syndrome
/// under the matching half of the check matrix. Refuses two-block ops.
bool classical_inherited_check(const BBCode &code, const PauliOp &op);

}  // namespace bbcover

#endif
