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

#include "bbcover/bb_code.h"

#include <algorithm>
#include <cctype>

#include "bbcover/errors.h"

namespace bbcover {

std::string basis_name(Basis basis) {
    return basis == Basis::X ? "X" : "Z";
}

BBCode build_code(const Poly &A, const Poly &B) {
    if (!(A.ctx() == B.ctx())) {
        throw RefusalError("A and B live in different rings: " + A.ctx().to_string() + " vs " + B.ctx().to_string());
    }
    if (A.is_zero() || B.is_zero()) {
        throw RefusalError("A and B must be nonzero");
    }
    BBCode code;
    code.ctx_ = A.ctx();
    code.a_ = A;
    code.b_ = B;
    code.hx_ = hstack(poly_to_matrix(A), poly_to_matrix(B));
    code.hz_ = hstack(poly_to_matrix(poly_transpose(B)), poly_to_matrix(poly_transpose(A)));
    if (!mat_mul(code.hx_, transpose(code.hz_)).is_zero()) {
        throw InvariantError("hx hz^T != 0 for " + render_code_spec(code));
    }
    auto xs = std::make_shared<RowSpace>(code.hx_);
    auto zs = std::make_shared<RowSpace>(code.hz_);
    if (xs->rank() != zs->rank()) {
        throw InvariantError("rank(hx) = " + std::to_string(xs->rank()) + " but rank(hz) = " +
                             std::to_string(zs->rank()) + " for " + render_code_spec(code));
    }
    code.k_ = code.n() - 2 * zs->rank();
    code.x_stab_ = std::move(xs);
    code.z_stab_ = std::move(zs);
    return code;
}

BBCode build_code(std::string_view A, std::string_view B, std::size_t l, std::size_t m) {
    RingContext ctx{l, m};
    return build_code(parse_poly(A, ctx), parse_poly(B, ctx));
}

std::size_t code_k(const BBCode &code) {
    std::size_t rz = mat_rank(code.hz());
    std::size_t rx = mat_rank(code.hx());
    if (rx != rz) {
        throw InvariantError("rank(hx) = " + std::to_string(rx) + " but rank(hz) = " + std::to_string(rz));
    }
    return code.n() - 2 * rz;
}

BBCode parse_code_spec(std::string_view text) {
    struct Field {
        char key;
        std::size_t key_pos;
        std::size_t value_pos;
    };
    std::vector<Field> fields;
    for (std::size_t i = 0; i + 1 < text.size(); i++) {
        char c = text[i];
        bool at_token_start = i == 0 || std::isspace(static_cast<unsigned char>(text[i - 1]));
        if (at_token_start && text[i + 1] == '=' && (c == 'l' || c == 'm' || c == 'A' || c == 'B')) {
            for (const auto &f : fields) {
                if (f.key == c) {
                    throw ParseError(std::string("duplicate field '") + c + "'", i);
                }
            }
            fields.push_back({c, i, i + 2});
        }
    }
    for (std::size_t i = 0; i < text.size(); i++) {
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            if (fields.empty() || i < fields.front().key_pos) {
                throw ParseError("expected one of l=, m=, A=, B=", i);
            }
            break;
        }
    }
    auto value_of = [&](char key) -> std::pair<std::string_view, std::size_t> {
        for (std::size_t f = 0; f < fields.size(); f++) {
            if (fields[f].key == key) {
                std::size_t end = f + 1 < fields.size() ? fields[f + 1].key_pos : text.size();
                return {text.substr(fields[f].value_pos, end - fields[f].value_pos), fields[f].value_pos};
            }
        }
        throw ParseError(std::string("missing field '") + key + "='", text.size());
    };
    auto parse_uint = [](std::string_view v, std::size_t at) {
        std::size_t i = 0;
        while (i < v.size() && std::isspace(static_cast<unsigned char>(v[i]))) {
            i++;
        }
        std::size_t start = i;
        std::size_t value = 0;
        while (i < v.size() && std::isdigit(static_cast<unsigned char>(v[i]))) {
            value = value * 10 + static_cast<std::size_t>(v[i] - '0');
            if (value > 1000000) {
                throw ParseError("lattice size too large", at + i);
            }
            i++;
        }
        if (i == start) {
            throw ParseError("expected an unsigned integer", at + i);
        }
        while (i < v.size() && std::isspace(static_cast<unsigned char>(v[i]))) {
            i++;
        }
        if (i != v.size()) {
            throw ParseError("trailing characters after integer", at + i);
        }
        if (value == 0) {
            throw ParseError("lattice size must be positive", at + start);
        }
        return value;
    };
    auto [l_text, l_pos] = value_of('l');
    auto [m_text, m_pos] = value_of('m');
    RingContext ctx{parse_uint(l_text, l_pos), parse_uint(m_text, m_pos)};
    auto [a_text, a_pos] = value_of('A');
    auto [b_text, b_pos] = value_of('B');
    Poly A;
    Poly B;
    try {
        A = parse_poly(a_text, ctx);
    } catch (const ParseError &e) {
        throw e.shifted(a_pos);
    }
    try {
        B = parse_poly(b_text, ctx);
    } catch (const ParseError &e) {
        throw e.shifted(b_pos);
    }
    return build_code(A, B);
}

std::string render_code_spec(const BBCode &code) {
    return "l=" + std::to_string(code.ctx().l) + " m=" + std::to_string(code.ctx().m) + " A=" + render(code.A()) +
           " B=" + render(code.B());
}

PauliOp make_op(Basis basis, const Poly &left, const Poly &right) {
    if (!(left.ctx() == right.ctx())) {
        throw RefusalError("Pauli blocks live in different rings");
    }
    return PauliOp{basis, left, right};
}

BitVec op_to_vec(const PauliOp &op) {
    return poly_to_vec(op.left).concat(poly_to_vec(op.right));
}

PauliOp op_from_vec(const RingContext &ctx, Basis basis, const BitVec &v) {
    if (v.size() != 2 * ctx.size()) {
        throw RefusalError("vector of length " + std::to_string(v.size()) + " is not a qubit vector for " +
                           ctx.to_string());
    }
    return PauliOp{basis, poly_from_vec(ctx, v.slice(0, ctx.size())), poly_from_vec(ctx, v.slice(ctx.size(), ctx.size()))};
}

PauliOp parse_pauli(std::string_view text, const RingContext &ctx) {
    std::size_t i = 0;
    auto skip = [&]() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            i++;
        }
    };
    skip();
    if (i >= text.size() || (text[i] != 'X' && text[i] != 'Z')) {
        throw ParseError("expected 'X' or 'Z'", i);
    }
    Basis basis = text[i] == 'X' ? Basis::X : Basis::Z;
    i++;
    skip();
    if (i >= text.size() || text[i] != '(') {
        throw ParseError("expected '('", i);
    }
    std::size_t left_start = ++i;
    std::size_t bar = text.find('|', left_start);
    if (bar == std::string_view::npos) {
        throw ParseError("expected '|'", text.size());
    }
    std::size_t close = text.find(')', bar);
    if (close == std::string_view::npos) {
        throw ParseError("expected ')'", text.size());
    }
    for (std::size_t j = close + 1; j < text.size(); j++) {
        if (!std::isspace(static_cast<unsigned char>(text[j]))) {
            throw ParseError("trailing characters after ')'", j);
        }
    }
    PauliOp op;
    op.basis = basis;
    try {
        op.left = parse_poly(text.substr(left_start, bar - left_start), ctx);
    } catch (const ParseError &e) {
        throw e.shifted(left_start);
    }
    try {
        op.right = parse_poly(text.substr(bar + 1, close - bar - 1), ctx);
    } catch (const ParseError &e) {
        throw e.shifted(bar + 1);
    }
    return op;
}

std::string render_pauli(const PauliOp &op) {
    return basis_name(op.basis) + "(" + render(op.left) + "|" + render(op.right) + ")";
}

PauliOp stabilizer_support(const BBCode &code, Monomial r, Basis basis) {
    Poly rp = Poly::monomial(code.ctx(), r);
    if (basis == Basis::X) {
        return PauliOp{basis, poly_mul(rp, code.A()), poly_mul(rp, code.B())};
    }
    return PauliOp{basis, poly_mul(rp, poly_transpose(code.B())), poly_mul(rp, poly_transpose(code.A()))};
}

BitVec syndrome(const BBCode &code, const PauliOp &op) {
    if (!(op.left.ctx() == code.ctx()) || !(op.right.ctx() == code.ctx())) {
        throw RefusalError("operator ring does not match code ring " + code.ctx().to_string());
    }
    return code.check_for(op.basis).apply(op_to_vec(op));
}

std::string op_class_name(OpClass c) {
    switch (c) {
        case OpClass::NotInKernel:
            return "not-in-kernel";
        case OpClass::Stabilizer:
            return "stabilizer";
        case OpClass::NontrivialLogical:
            return "nontrivial-logical";
    }
    return "?";
}

OpClass classify_vec(const BBCode &code, Basis basis, const BitVec &v) {
    if (!code.check_for(basis).apply(v).is_zero()) {
        return OpClass::NotInKernel;
    }
    return code.stabilizers_for(basis).contains(v) ? OpClass::Stabilizer : OpClass::NontrivialLogical;
}

OpClass classify_op(const BBCode &code, const PauliOp &op) {
    syndrome(code, op);  // ring check
    return classify_vec(code, op.basis, op_to_vec(op));
}

namespace {

std::vector<BitVec> independent_logicals(const BinMatrix &check, const RowSpace &stabilizers) {
    RowSpace span = stabilizers;
    std::vector<BitVec> out;
    BinMatrix kernel = kernel_basis(check);
    for (const auto &v : kernel.rows()) {
        if (span.insert(v)) {
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace

LogicalBasis logical_basis(const BBCode &code) {
    std::vector<BitVec> xs = independent_logicals(code.hz(), code.x_stabilizers());
    std::vector<BitVec> zs = independent_logicals(code.hx(), code.z_stabilizers());
    if (xs.size() != code.k() || zs.size() != code.k()) {
        throw InvariantError("found " + std::to_string(xs.size()) + " X and " + std::to_string(zs.size()) +
                             " Z logical classes, expected k = " + std::to_string(code.k()));
    }
    std::vector<BitVec> out_x;
    std::vector<BitVec> out_z;
    while (!xs.empty()) {
        BitVec x = xs.front();
        xs.erase(xs.begin());
        auto it = std::find_if(zs.begin(), zs.end(), [&](const BitVec &z) { return x.dot(z); });
        if (it == zs.end()) {
            throw InvariantError("degenerate pairing while building logical basis");
        }
        BitVec z = *it;
        zs.erase(it);
        for (auto &x2 : xs) {
            if (x2.dot(z)) {
                x2 ^= x;
            }
        }
        for (auto &z2 : zs) {
            if (x.dot(z2)) {
                z2 ^= z;
            }
        }
        out_x.push_back(std::move(x));
        out_z.push_back(std::move(z));
    }
    LogicalBasis basis;
    for (std::size_t i = 0; i < out_x.size(); i++) {
        basis.x_ops.push_back(op_from_vec(code.ctx(), Basis::X, code.x_stabilizers().reduce(out_x[i])));
        basis.z_ops.push_back(op_from_vec(code.ctx(), Basis::Z, code.z_stabilizers().reduce(out_z[i])));
    }
    return basis;
}

BinMatrix pairing_matrix(const std::vector<PauliOp> &x_ops, const std::vector<PauliOp> &z_ops) {
    std::vector<BitVec> zv;
    for (const auto &z : z_ops) {
        zv.push_back(op_to_vec(z));
    }
    BinMatrix out(x_ops.size(), z_ops.size());
    for (std::size_t i = 0; i < x_ops.size(); i++) {
        BitVec xv = op_to_vec(x_ops[i]);
        for (std::size_t j = 0; j < z_ops.size(); j++) {
            if (xv.dot(zv[j])) {
                out.set(i, j);
            }
        }
    }
    return out;
}

BitVec logical_coordinates(const BBCode &code, const LogicalBasis &basis, Basis type, const BitVec &v) {
    if (!code.check_for(type).apply(v).is_zero()) {
        throw RefusalError(basis_name(type) + "-type operator has nonzero syndrome");
    }
    const auto &partners = type == Basis::X ? basis.z_ops : basis.x_ops;
    BitVec out(partners.size());
    for (std::size_t j = 0; j < partners.size(); j++) {
        if (v.dot(op_to_vec(partners[j]))) {
            out.set(j);
        }
    }
    return out;
}

BitVec logical_coordinates(const BBCode &code, const LogicalBasis &basis, const PauliOp &op) {
    return logical_coordinates(code, basis, op.basis, op_to_vec(op));
}

void check_logical_basis(const BBCode &code, const LogicalBasis &basis) {
    if (basis.x_ops.size() != basis.z_ops.size()) {
        throw RefusalError("basis has " + std::to_string(basis.x_ops.size()) + " X ops but " +
                           std::to_string(basis.z_ops.size()) + " Z ops");
    }
    if (basis.k() != code.k()) {
        throw RefusalError("basis has " + std::to_string(basis.k()) + " pairs but k = " + std::to_string(code.k()));
    }
    for (const auto *ops : {&basis.x_ops, &basis.z_ops}) {
        for (std::size_t i = 0; i < ops->size(); i++) {
            OpClass c = classify_op(code, (*ops)[i]);
            if (c != OpClass::NontrivialLogical) {
                throw RefusalError(render_pauli((*ops)[i]) + " is " + op_class_name(c));
            }
        }
    }
    if (!pairing_matrix(basis.x_ops, basis.z_ops).is_identity()) {
        throw RefusalError("pairing matrix is not the identity");
    }
}

}  // namespace bbcover
