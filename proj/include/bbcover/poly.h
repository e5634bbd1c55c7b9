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

#ifndef BBCOVER_POLY_H
#define BBCOVER_POLY_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bbcover/bit_vector.h"
#include "bbcover/gf2_matrix.h"

namespace bbcover {

/// The ring F2[x,y]/(x^l - 1, y^m - 1).
///
/// Monomial x^a y^b has basis index a*m + b (x-major), matching the
/// Kronecker layout C_l (x) I_m. Every vector and matrix in the library uses
/// this index.
struct RingContext {
    std::size_t l = 1;
    std::size_t m = 1;

    std::size_t size() const {
        return l * m;
    }
    bool operator==(const RingContext &) const = default;
    std::string to_string() const;
};

struct Monomial {
    std::size_t a = 0;
    std::size_t b = 0;

    auto operator<=>(const Monomial &) const = default;
};

/// Reduces arbitrary (possibly negative) exponents into [0,l) x [0,m).
Monomial make_monomial(const RingContext &ctx, std::int64_t a, std::int64_t b);
std::size_t monomial_index(const RingContext &ctx, Monomial mono);
Monomial monomial_at(const RingContext &ctx, std::size_t index);

/// Sparse polynomial: a sorted, duplicate-free list of monomials.
class Poly {
   public:
    Poly() = default;
    explicit Poly(const RingContext &ctx) : ctx_(ctx) {
    }
    /// Reduces nothing; terms must already be reduced. Repeated terms cancel.
    Poly(const RingContext &ctx, const std::vector<Monomial> &terms);

    static Poly one(const RingContext &ctx) {
        return Poly(ctx, {Monomial{0, 0}});
    }
    static Poly monomial(const RingContext &ctx, Monomial mono) {
        return Poly(ctx, {mono});
    }

    const RingContext &ctx() const {
        return ctx_;
    }
    const std::vector<Monomial> &terms() const {
        return terms_;
    }
    std::size_t size() const {
        return terms_.size();
    }
    bool is_zero() const {
        return terms_.empty();
    }
    bool contains(Monomial mono) const;
    /// Adds (XORs) one monomial.
    void toggle(Monomial mono);

    bool operator==(const Poly &) const = default;

   private:
    RingContext ctx_;
    std::vector<Monomial> terms_;
};

Monomial mono_mul(Monomial p, Monomial q, const RingContext &ctx);
Poly poly_add(const Poly &p, const Poly &q);
Poly poly_mul(const Poly &p, const Poly &q);
Poly poly_shift(const Poly &p, Monomial mono);
/// x^a y^b -> x^-a y^-b termwise.
Poly poly_transpose(const Poly &p);

/// lm x lm matrix with entry (r, c) = 1 iff c = r * term for some term.
/// Row r is the support of x^r * p, so hstack(M(A), M(B)) has the X-check
/// supports as rows.
BinMatrix poly_to_matrix(const Poly &p);

BitVec poly_to_vec(const Poly &p);
Poly poly_from_vec(const RingContext &ctx, const BitVec &v);

/// Parses the grammar
///   poly := term ("+" term)*
///   term := "0" | "1" | xfac [["*"] yfac] | yfac
///   xfac := "x" ["^" uint]    yfac := "y" ["^" uint]
/// Whitespace is ignored, exponents are reduced, repeated terms cancel.
Poly parse_poly(std::string_view text, const RingContext &ctx);
/// Canonical rendering, e.g. "1+x^2+xy^3"; "0" for the zero polynomial.
std::string render(const Poly &p);
std::string render(Monomial mono);
Monomial parse_monomial(std::string_view text, const RingContext &ctx);

}  // namespace bbcover

#endif
