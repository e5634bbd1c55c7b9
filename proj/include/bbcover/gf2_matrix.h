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

#ifndef BBCOVER_GF2_MATRIX_H
#define BBCOVER_GF2_MATRIX_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bbcover/bit_vector.h"

namespace bbcover {

/// Dense GF(2) matrix stored as one packed BitVec per row.
///
/// Entry (i, j) is bit j of row i. Every operation below is value-semantic:
/// inputs are never modified, so matrices can be shared read-only between
/// threads.
class BinMatrix {
   public:
    BinMatrix() = default;
    BinMatrix(std::size_t n_rows, std::size_t n_cols) : n_cols_(n_cols), rows_(n_rows, BitVec(n_cols)) {
    }
    /// Takes ownership of `rows`; every row must have length `n_cols`.
    BinMatrix(std::size_t n_cols, std::vector<BitVec> rows);

    static BinMatrix identity(std::size_t n);
    /// Square permutation matrix P with P e_j = e_{image[j]}.
    static BinMatrix permutation(const std::vector<std::size_t> &image);

    std::size_t n_rows() const {
        return rows_.size();
    }
    std::size_t n_cols() const {
        return n_cols_;
    }
    std::string shape() const;

    bool get(std::size_t i, std::size_t j) const {
        return rows_[i].get(j);
    }
    void set(std::size_t i, std::size_t j, bool value = true) {
        rows_[i].set(j, value);
    }
    void flip(std::size_t i, std::size_t j) {
        rows_[i].flip(j);
    }
    const BitVec &row(std::size_t i) const {
        return rows_[i];
    }
    BitVec &row(std::size_t i) {
        return rows_[i];
    }
    const std::vector<BitVec> &rows() const {
        return rows_;
    }
    BitVec column(std::size_t j) const;

    bool is_zero() const;
    bool is_identity() const;
    std::size_t popcount() const;

    /// Matrix-vector product a * v (v is a column vector).
    BitVec apply(const BitVec &v) const;

    bool operator==(const BinMatrix &other) const = default;

    /// Debug serialization: "<rows>x<cols>" then one hex row per line
    /// (see BitVec::to_hex for the bit order inside a row).
    std::string to_debug_string() const;
    static BinMatrix from_debug_string(std::string_view text);

   private:
    std::size_t n_cols_ = 0;
    std::vector<BitVec> rows_;
};

BinMatrix mat_mul(const BinMatrix &a, const BinMatrix &b);
BinMatrix transpose(const BinMatrix &a);
BinMatrix hstack(const BinMatrix &a, const BinMatrix &b);
BinMatrix vstack(const BinMatrix &a, const BinMatrix &b);
BinMatrix kron(const BinMatrix &a, const BinMatrix &b);
/// Block-diagonal [[a, 0], [0, b]].
BinMatrix block_diag(const BinMatrix &a, const BinMatrix &b);
BinMatrix operator+(const BinMatrix &a, const BinMatrix &b);

std::size_t mat_rank(const BinMatrix &a);

/// Basis of {v : a v = 0}, one vector per row.
///
/// Pivots are chosen leftmost column first, topmost unreduced row first.
/// The i-th basis row is e_f + (pivot corrections) for the i-th free column f
/// in ascending order, so the output depends only on the input.
BinMatrix kernel_basis(const BinMatrix &a);

/// True iff v is a GF(2) combination of the rows of a.
bool in_row_space(const BinMatrix &a, const BitVec &v);

/// Inverse of a square matrix; throws RefusalError when singular.
BinMatrix inverse(const BinMatrix &a);

/// Reduced row echelon form of a row space, kept for repeated membership
/// and reduction queries. Construction is O(rank * rows * words).
class RowSpace {
   public:
    RowSpace() = default;
    explicit RowSpace(const BinMatrix &generators);

    std::size_t rank() const {
        return basis_.size();
    }
    std::size_t dimension() const {
        return n_cols_;
    }
    /// Independent rows in reduced echelon form, ordered by pivot column.
    const std::vector<BitVec> &basis() const {
        return basis_;
    }
    const std::vector<std::size_t> &pivots() const {
        return pivots_;
    }

    /// v minus its projection onto the echelon basis; zero iff v is in the span.
    BitVec reduce(const BitVec &v) const;
    bool contains(const BitVec &v) const;
    /// Adds v to the space; returns false when v was already in the span.
    bool insert(const BitVec &v);

   private:
    std::size_t n_cols_ = 0;
    std::vector<BitVec> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace bbcover

#endif
