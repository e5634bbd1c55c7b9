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

#ifndef BBCOVER_COVER_H
#define BBCOVER_COVER_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bbcover/bb_code.h"

namespace bbcover {

/// A cover exponent paired with the base exponent it projects onto.
struct TermMatch {
    Monomial cover;
    Monomial base;
};

/// Certificate that `cover` is an h-cover of `base`: l~ = u l, m~ = t m, and
/// the terms of A~ (B~) project one-to-one onto the terms of A (B).
struct CoverWitness {
    std::size_t u = 1;
    std::size_t t = 1;
    std::size_t h = 1;
    BBCode base;
    BBCode cover;
    std::vector<TermMatch> a_match;
    std::vector<TermMatch> b_match;
};

struct CoverCheck {
    std::optional<CoverWitness> witness;
    /// 0 on success, else the first violated condition:
    /// 1 l | l~, 2 m | m~, 3 terms of A~ match A, 4 terms of B~ match B.
    int failed_condition = 0;
    std::string reason;

    bool ok() const {
        return witness.has_value();
    }
};

CoverCheck check_cover(const BBCode &base, const BBCode &cand);
/// check_cover, throwing RefusalError(reason) on failure.
CoverWitness require_cover(const BBCode &base, const BBCode &cand);

/// (a, b) -> (a mod l, b mod m).
Monomial project_monomial(const RingContext &base_ctx, Monomial mono);
/// Termwise projection with cancellation.
Poly project_poly(const RingContext &base_ctx, const Poly &p);

/// Minimum, in sorted-term order, of the orbit {mu * lifted} over cover
/// monomials mu whose projection fixes `base_poly` (p(mu) * base_poly == base_poly).
Poly canonical_lift(const Poly &lifted, const Poly &base_poly);
/// canonical_lift applied to A~ and B~ independently.
std::pair<Poly, Poly> canonical_form(const Poly &At, const Poly &Bt, const BBCode &base);

struct CoverClass {
    Poly A;
    Poly B;
    std::size_t k = 0;
    bool connected = false;
};

struct EnumerateOptions {
    bool dedup = true;
    std::size_t workers = 1;
    bool connected_only = false;
};

struct CoverEnumeration {
    BBCode base;
    std::size_t lt = 0;
    std::size_t mt = 0;
    /// Raw lifts before deduplication: h^(|A|+|B|).
    std::uint64_t candidates = 0;
    /// Sorted by (A terms, B terms).
    std::vector<CoverClass> classes;
    std::map<std::size_t, std::size_t> k_histogram;
};

/// All covers Q(A~, B~, l~, m~) of `base` obtained by lifting each term
/// independently, grouped into canonical_form classes (or left raw when
/// options.dedup is false).
CoverEnumeration enumerate_covers(const BBCode &base, std::size_t lt, std::size_t mt,
                                  const EnumerateOptions &options = {});

enum class VertexClass : std::uint32_t { XCheck = 0, ZCheck = 1, QubitL = 2, QubitR = 3 };

/// Bipartite check/qubit graph. Vertex id = class * per_class + local index.
/// For a code graph the local index is the monomial index; for a derived
/// graph it is base_index * h + sheet, sheet = g1 * t + g2.
struct TannerGraph {
    std::size_t per_class = 0;
    /// (check vertex, qubit vertex), sorted, unique.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

    std::size_t num_vertices() const {
        return 4 * per_class;
    }
    std::size_t num_checks() const {
        return 2 * per_class;
    }
    std::size_t num_qubits() const {
        return 2 * per_class;
    }
    bool has_edge(std::uint32_t check, std::uint32_t qubit) const;
    std::vector<std::vector<std::uint32_t>> adjacency() const;
};

TannerGraph build_tanner_graph(const BBCode &code);
/// Voltage graph over Z_u x Z_t. X check (c, g) meets qubit (c + alpha, g + v)
/// with v = (floor((c1 + a~1) / l) mod u, floor((c2 + a~2) / m) mod t), where
/// (a~, alpha) runs over the matched terms; Z checks use the transposed terms.
TannerGraph build_derived_graph(const BBCode &base, const CoverWitness &witness);

struct IsomorphismReport {
    bool edges_forward = false;   // f maps every cover edge to a derived edge
    bool edges_backward = false;  // f^-1 maps every derived edge to a cover edge
    bool fibers_ok = false;       // every base vertex has exactly h preimages
    bool neighborhoods_ok = false;
    std::string detail;

    bool ok() const {
        return edges_forward && edges_backward && fibers_ok && neighborhoods_ok;
    }
};

/// Compares the cover's Tanner graph with the derived graph through
/// f(a~, b~) = (a~ mod l, b~ mod m, floor(a~ / l), floor(b~ / m)), and checks
/// that projection is a local bijection on neighborhoods.
IsomorphismReport check_cover_isomorphism(const BBCode &base, const BBCode &cover, const CoverWitness &witness);
bool verify_cover_isomorphism(const BBCode &base, const BBCode &cover, const CoverWitness &witness);

bool is_connected(const TannerGraph &g);

}  // namespace bbcover

#endif
