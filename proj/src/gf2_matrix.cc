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

#include "bbcover/gf2_matrix.h"

#include <algorithm>
#include <sstream>

#include "bbcover/errors.h"

namespace bbcover {

namespace {

std::string shape_of(const BinMatrix &a) {
    return std::to_string(a.n_rows()) + "x" + std::to_string(a.n_cols());
}

}  // namespace

BinMatrix::BinMatrix(std::size_t n_cols, std::vector<BitVec> rows) : n_cols_(n_cols), rows_(std::move(rows)) {
    for (const auto &r : rows_) {
        if (r.size() != n_cols_) {
            throw RefusalError("row of length " + std::to_string(r.size()) + " in matrix with " +
                               std::to_string(n_cols_) + " columns");
        }
    }
}

BinMatrix BinMatrix::identity(std::size_t n) {
    BinMatrix out(n, n);
    for (std::size_t i = 0; i < n; i++) {
        out.set(i, i);
    }
    return out;
}

BinMatrix BinMatrix::permutation(const std::vector<std::size_t> &image) {
    std::size_t n = image.size();
    BinMatrix out(n, n);
    std::vector<bool> seen(n, false);
    for (std::size_t j = 0; j < n; j++) {
        if (image[j] >= n || seen[image[j]]) {
            throw RefusalError("index map is not a permutation of 0.." + std::to_string(n - 1));
        }
        seen[image[j]] = true;
        out.set(image[j], j);
    }
    return out;
}

std::string BinMatrix::shape() const {
    return shape_of(*this);
}

BitVec BinMatrix::column(std::size_t j) const {
    BitVec out(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); i++) {
        if (rows_[i].get(j)) {
            out.set(i);
        }
    }
    return out;
}

bool BinMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVec &r) { return r.is_zero(); });
}

bool BinMatrix::is_identity() const {
    if (n_rows() != n_cols()) {
        return false;
    }
    for (std::size_t i = 0; i < rows_.size(); i++) {
        if (rows_[i].popcount() != 1 || !rows_[i].get(i)) {
            return false;
        }
    }
    return true;
}

std::size_t BinMatrix::popcount() const {
    std::size_t total = 0;
    for (const auto &r : rows_) {
        total += r.popcount();
    }
    return total;
}

BitVec BinMatrix::apply(const BitVec &v) const {
    if (v.size() != n_cols_) {
        throw RefusalError("cannot apply " + shape() + " matrix to vector of length " + std::to_string(v.size()));
    }
    BitVec out(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); i++) {
        if (rows_[i].dot(v)) {
            out.set(i);
        }
    }
    return out;
}

std::string BinMatrix::to_debug_string() const {
    std::string out = shape() + "\n";
    for (const auto &r : rows_) {
        out += r.to_hex();
        out += "\n";
    }
    return out;
}

BinMatrix BinMatrix::from_debug_string(std::string_view text) {
    std::size_t pos = 0;
    auto read_line = [&]() {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        std::size_t start = pos;
        pos = end < text.size() ? end + 1 : end;
        return std::make_pair(line, start);
    };
    auto [header, header_pos] = read_line();
    std::size_t x = header.find('x');
    if (x == std::string_view::npos) {
        throw ParseError("missing 'x' in matrix shape header", header_pos);
    }
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    try {
        n_rows = std::stoul(std::string(header.substr(0, x)));
        n_cols = std::stoul(std::string(header.substr(x + 1)));
    } catch (const std::exception &) {
        throw ParseError("bad matrix shape header", header_pos);
    }
    std::vector<BitVec> rows;
    for (std::size_t i = 0; i < n_rows; i++) {
        if (pos >= text.size() && n_cols > 0) {
            throw ParseError("expected " + std::to_string(n_rows) + " rows, got " + std::to_string(i), pos);
        }
        auto [line, line_pos] = read_line();
        try {
            rows.push_back(BitVec::from_hex(line, n_cols));
        } catch (const ParseError &e) {
            throw ParseError("row " + std::to_string(i) + ": " + e.detail(), line_pos + e.position());
        }
    }
    return BinMatrix(n_cols, std::move(rows));
}

BinMatrix mat_mul(const BinMatrix &a, const BinMatrix &b) {
    if (a.n_cols() != b.n_rows()) {
        throw RefusalError("cannot multiply " + shape_of(a) + " by " + shape_of(b));
    }
    BinMatrix out(a.n_rows(), b.n_cols());
    for (std::size_t i = 0; i < a.n_rows(); i++) {
        BitVec &dst = out.row(i);
        for (std::size_t k : a.row(i).support()) {
            dst ^= b.row(k);
        }
    }
    return out;
}

BinMatrix transpose(const BinMatrix &a) {
    BinMatrix out(a.n_cols(), a.n_rows());
    for (std::size_t i = 0; i < a.n_rows(); i++) {
        for (std::size_t j : a.row(i).support()) {
            out.set(j, i);
        }
    }
    return out;
}

BinMatrix hstack(const BinMatrix &a, const BinMatrix &b) {
    if (a.n_rows() != b.n_rows()) {
        throw RefusalError("cannot hstack " + shape_of(a) + " with " + shape_of(b));
    }
    std::vector<BitVec> rows;
    rows.reserve(a.n_rows());
    for (std::size_t i = 0; i < a.n_rows(); i++) {
        rows.push_back(a.row(i).concat(b.row(i)));
    }
    return BinMatrix(a.n_cols() + b.n_cols(), std::move(rows));
}

BinMatrix vstack(const BinMatrix &a, const BinMatrix &b) {
    if (a.n_cols() != b.n_cols()) {
        throw RefusalError("cannot vstack " + shape_of(a) + " with " + shape_of(b));
    }
    std::vector<BitVec> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return BinMatrix(a.n_cols(), std::move(rows));
}

BinMatrix kron(const BinMatrix &a, const BinMatrix &b) {
    BinMatrix out(a.n_rows() * b.n_rows(), a.n_cols() * b.n_cols());
    for (std::size_t i = 0; i < a.n_rows(); i++) {
        for (std::size_t j : a.row(i).support()) {
            for (std::size_t k = 0; k < b.n_rows(); k++) {
                for (std::size_t l : b.row(k).support()) {
                    out.set(i * b.n_rows() + k, j * b.n_cols() + l);
                }
            }
        }
    }
    return out;
}

BinMatrix block_diag(const BinMatrix &a, const BinMatrix &b) {
    return vstack(hstack(a, BinMatrix(a.n_rows(), b.n_cols())), hstack(BinMatrix(b.n_rows(), a.n_cols()), b));
}

BinMatrix operator+(const BinMatrix &a, const BinMatrix &b) {
    if (a.n_rows() != b.n_rows() || a.n_cols() != b.n_cols()) {
        throw RefusalError("cannot add " + shape_of(a) + " and " + shape_of(b));
    }
    BinMatrix out = a;
    for (std::size_t i = 0; i < a.n_rows(); i++) {
        out.row(i) ^= b.row(i);
    }
    return out;
}

std::size_t mat_rank(const BinMatrix &a) {
    // Plain forward elimination on a copy; RowSpace also back-substitutes,
    // which rank does not need.
    std::vector<BitVec> rows = a.rows();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.n_cols() && rank < rows.size(); col++) {
        std::size_t word = col / BitVec::kWordBits;
        BitVec::word_t mask = BitVec::word_t{1} << (col % BitVec::kWordBits);
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot].data()[word] & mask)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); r++) {
            if (rows[r].data()[word] & mask) {
                rows[r] ^= rows[rank];
            }
        }
        rank++;
    }
    return rank;
}

BinMatrix kernel_basis(const BinMatrix &a) {
    RowSpace rs(a);
    std::size_t n = a.n_cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rs.pivots()) {
        is_pivot[p] = true;
    }
    std::vector<BitVec> out;
    for (std::size_t f = 0; f < n; f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec v(n);
        v.set(f);
        for (std::size_t r = 0; r < rs.rank(); r++) {
            if (rs.basis()[r].get(f)) {
                v.set(rs.pivots()[r]);
            }
        }
        out.push_back(std::move(v));
    }
    return BinMatrix(n, std::move(out));
}

bool in_row_space(const BinMatrix &a, const BitVec &v) {
    if (v.size() != a.n_cols()) {
        throw RefusalError("vector of length " + std::to_string(v.size()) + " tested against row space of " +
                           shape_of(a) + " matrix");
    }
    return RowSpace(a).contains(v);
}

BinMatrix inverse(const BinMatrix &a) {
    if (a.n_rows() != a.n_cols()) {
        throw RefusalError("cannot invert non-square " + shape_of(a) + " matrix");
    }
    std::size_t n = a.n_rows();
    BinMatrix aug = hstack(a, BinMatrix::identity(n));
    RowSpace rs(aug);
    if (rs.rank() < n || rs.pivots()[n - 1] != n - 1) {
        throw RefusalError("matrix is singular");
    }
    std::vector<BitVec> rows;
    for (std::size_t i = 0; i < n; i++) {
        rows.push_back(rs.basis()[i].slice(n, n));
    }
    return BinMatrix(n, std::move(rows));
}

RowSpace::RowSpace(const BinMatrix &generators) : n_cols_(generators.n_cols()) {
    for (const auto &r : generators.rows()) {
        insert(r);
    }
}

BitVec RowSpace::reduce(const BitVec &v) const {
    if (v.size() != n_cols_) {
        throw RefusalError("vector of length " + std::to_string(v.size()) + " reduced against a space in dimension " +
                           std::to_string(n_cols_));
    }
    BitVec out = v;
    for (std::size_t r = 0; r < basis_.size(); r++) {
        if (out.get(pivots_[r])) {
            out ^= basis_[r];
        }
    }
    return out;
}

bool RowSpace::contains(const BitVec &v) const {
    return reduce(v).is_zero();
}

bool RowSpace::insert(const BitVec &v) {
    BitVec w = reduce(v);
    if (w.is_zero()) {
        return false;
    }
    std::size_t p = w.first_one();
    for (auto &b : basis_) {
        if (b.get(p)) {
            b ^= w;
        }
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t at = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(at), std::move(w));
    return true;
}

}  // namespace bbcover
