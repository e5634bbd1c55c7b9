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

#ifndef BBCOVER_TESTS_ORACLES_H
#define BBCOVER_TESTS_ORACLES_H

// Brute-force reference implementations. Nothing here uses row reduction:
// spans are grown as explicit sets and kernels are found by trying every
// vector, so they share no code path with the library's fast routines.

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "bbcover/bb_code.h"
#include "bbcover/bit_vector.h"
#include "bbcover/gf2_matrix.h"
#include "bbcover/poly.h"

namespace oracle {

using bbcover::BinMatrix;
using bbcover::BitVec;

/// Every vector in the span of the rows. Exponential; keep rank small.
inline std::unordered_set<BitVec, bbcover::BitVecHash> span(const BinMatrix &a) {
    std::unordered_set<BitVec, bbcover::BitVecHash> out;
    out.insert(BitVec(a.n_cols()));
    for (const BitVec &row : a.rows()) {
        if (out.count(row)) {
            continue;
        }
        std::vector<BitVec> fresh;
        for (const BitVec &v : out) {
            fresh.push_back(v ^ row);
        }
        for (auto &v : fresh) {
            out.insert(std::move(v));
        }
    }
    return out;
}

inline std::size_t rank(const BinMatrix &a) {
    std::size_t size = span(a).size();
    std::size_t r = 0;
    while ((std::size_t{1} << r) < size) {
        r++;
    }
    return r;
}

inline BitVec from_bits(std::size_t n, std::uint64_t bits) {
    BitVec v(n);
    for (std::size_t j = 0; j < n; j++) {
        if ((bits >> j) & 1) {
            v.set(j);
        }
    }
    return v;
}

/// Entry-by-entry product, no word tricks.
inline bool row_dot(const BitVec &a, const BitVec &b) {
    bool acc = false;
    for (std::size_t j = 0; j < a.size(); j++) {
        acc ^= a.get(j) && b.get(j);
    }
    return acc;
}

/// All v with a v = 0, by trying each of the 2^n_cols vectors.
inline std::vector<BitVec> kernel(const BinMatrix &a) {
    std::vector<BitVec> out;
    std::size_t n = a.n_cols();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); bits++) {
        BitVec v = from_bits(n, bits);
        bool zero = true;
        for (const BitVec &row : a.rows()) {
            if (row_dot(row, v)) {
                zero = false;
                break;
            }
        }
        if (zero) {
            out.push_back(v);
        }
    }
    return out;
}

inline BinMatrix product(const BinMatrix &a, const BinMatrix &b) {
    BinMatrix out(a.n_rows(), b.n_cols());
    for (std::size_t i = 0; i < a.n_rows(); i++) {
        for (std::size_t j = 0; j < b.n_cols(); j++) {
            bool acc = false;
            for (std::size_t t = 0; t < a.n_cols(); t++) {
                acc ^= a.get(i, t) && b.get(t, j);
            }
            out.set(i, j, acc);
        }
    }
    return out;
}

inline BinMatrix random_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols, double density = 0.5) {
    std::bernoulli_distribution bit(density);
    BinMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; i++) {
        for (std::size_t j = 0; j < cols; j++) {
            if (bit(rng)) {
                m.set(i, j);
            }
        }
    }
    return m;
}

/// Circulant-style matrix straight from the definition: entry (r, c) is the
/// number (mod 2) of terms t with c = r + t exponent-wise.
inline BinMatrix poly_matrix(const bbcover::Poly &p) {
    const auto &ctx = p.ctx();
    std::size_t n = ctx.size();
    BinMatrix out(n, n);
    for (std::size_t ra = 0; ra < ctx.l; ra++) {
        for (std::size_t rb = 0; rb < ctx.m; rb++) {
            for (const auto &t : p.terms()) {
                std::size_t ca = (ra + t.a) % ctx.l;
                std::size_t cb = (rb + t.b) % ctx.m;
                out.flip(ra * ctx.m + rb, ca * ctx.m + cb);
            }
        }
    }
    return out;
}

/// Schoolbook product with a dense coefficient table.
inline bbcover::Poly poly_product(const bbcover::Poly &p, const bbcover::Poly &q) {
    const auto &ctx = p.ctx();
    std::vector<int> coeff(ctx.size(), 0);
    for (const auto &s : p.terms()) {
        for (const auto &t : q.terms()) {
            coeff[((s.a + t.a) % ctx.l) * ctx.m + (s.b + t.b) % ctx.m] ^= 1;
        }
    }
    std::vector<bbcover::Monomial> terms;
    for (std::size_t i = 0; i < coeff.size(); i++) {
        if (coeff[i]) {
            terms.push_back({i / ctx.m, i % ctx.m});
        }
    }
    return bbcover::Poly(ctx, terms);
}

inline bbcover::Poly random_poly(std::mt19937_64 &rng, const bbcover::RingContext &ctx, double density = 0.3) {
    std::bernoulli_distribution bit(density);
    std::vector<bbcover::Monomial> terms;
    for (std::size_t a = 0; a < ctx.l; a++) {
        for (std::size_t b = 0; b < ctx.m; b++) {
            if (bit(rng)) {
                terms.push_back({a, b});
            }
        }
    }
    return bbcover::Poly(ctx, terms);
}

/// Minimum weight of a vector in ker(check) outside span(stabilizers), by
/// trying all 2^n vectors. Returns 0 when there is none. n must be <= 24.
inline std::size_t distance(const BinMatrix &check, const BinMatrix &stabilizers) {
    auto stab = span(stabilizers);
    std::size_t best = 0;
    for (const BitVec &v : kernel(check)) {
        if (stab.count(v)) {
            continue;
        }
        std::size_t w = v.popcount();
        if (best == 0 || w < best) {
            best = w;
        }
    }
    return best;
}

/// Z-sector distance of a BB code by exhaustion.
inline std::size_t code_distance(const bbcover::BBCode &code, bbcover::Basis type) {
    const BinMatrix &check = code.check_for(type);
    const BinMatrix &stab = type == bbcover::Basis::X ? code.hx() : code.hz();
    return distance(check, stab);
}

}  // namespace oracle

#endif
