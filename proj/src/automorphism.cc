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

#include "bbcover/automorphism.h"

#include <functional>

#include <json.hpp>

#include "bbcover/chain_maps.h"
#include "bbcover/errors.h"

namespace bbcover {

std::string aut_kind_name(AutKind kind) {
    switch (kind) {
        case AutKind::General:
            return "general";
        case AutKind::Tanner:
            return "tanner";
        case AutKind::ZXDuality:
            return "zx-duality";
    }
    return "?";
}

namespace {

/// Check-space permutation matrix for c -> image[c].
BinMatrix check_permutation(const RingContext &ctx, const std::function<Monomial(Monomial)> &map) {
    std::vector<std::size_t> image(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); i++) {
        image[i] = monomial_index(ctx, map(monomial_at(ctx, i)));
    }
    return BinMatrix::permutation(image);
}

std::vector<std::size_t> qubit_permutation(const RingContext &ctx, const std::function<Monomial(Monomial)> &map) {
    std::size_t lm = ctx.size();
    std::vector<std::size_t> f(2 * lm);
    for (std::size_t i = 0; i < lm; i++) {
        std::size_t j = monomial_index(ctx, map(monomial_at(ctx, i)));
        f[i] = j;
        f[lm + i] = lm + j;
    }
    return f;
}

}  // namespace

CodeAutomorphism identity_automorphism(const BBCode &code) {
    CodeAutomorphism aut;
    aut.kind = AutKind::Tanner;
    for (std::size_t i = 0; i < code.n(); i++) {
        aut.f.push_back(i);
    }
    aut.w_x = BinMatrix::identity(code.half());
    aut.w_z = BinMatrix::identity(code.half());
    return aut;
}

CodeAutomorphism shift_automorphism(const BBCode &code, Monomial r) {
    const RingContext &ctx = code.ctx();
    auto map = [&](Monomial c) { return mono_mul(c, r, ctx); };
    CodeAutomorphism aut;
    aut.kind = AutKind::Tanner;
    aut.f = qubit_permutation(ctx, map);
    aut.w_x = check_permutation(ctx, map);
    aut.w_z = aut.w_x;
    return aut;
}

CodeAutomorphism example_cnot_automorphism(const BBCode &code) {
    const RingContext &ctx = code.ctx();
    auto map = [&](Monomial c) { return make_monomial(ctx, static_cast<std::int64_t>(c.a), 1 - static_cast<std::int64_t>(c.b)); };
    CodeAutomorphism aut;
    aut.kind = AutKind::Tanner;
    aut.f = qubit_permutation(ctx, map);
    aut.w_x = check_permutation(ctx, map);
    aut.w_z = aut.w_x;
    return aut;
}

CodeAutomorphism block_swap_duality(const BBCode &code) {
    std::size_t lm = code.half();
    CodeAutomorphism aut;
    aut.kind = AutKind::ZXDuality;
    aut.f.resize(2 * lm);
    for (std::size_t i = 0; i < lm; i++) {
        aut.f[i] = lm + i;
        aut.f[lm + i] = i;
    }
    aut.w_x = BinMatrix::identity(lm);
    aut.w_z = BinMatrix::identity(lm);
    return aut;
}

CodeAutomorphism builtin_automorphism(const BBCode &code, std::string_view name) {
    if (name == "identity") {
        return identity_automorphism(code);
    }
    if (name == "example-5-cnot") {
        return example_cnot_automorphism(code);
    }
    if (name == "example-5-zx") {
        return block_swap_duality(code);
    }
    if (name.substr(0, 6) == "shift:") {
        try {
            return shift_automorphism(code, parse_monomial(name.substr(6), code.ctx()));
        } catch (const ParseError &e) {
            throw e.shifted(6);
        }
    }
    throw RefusalError("unknown built-in automorphism '" + std::string(name) + "'");
}

CodeAutomorphism parse_automorphism_json(const BBCode &code, std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("bad automorphism JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    try {
        CodeAutomorphism aut;
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "general") {
            aut.kind = AutKind::General;
        } else if (kind == "tanner") {
            aut.kind = AutKind::Tanner;
        } else if (kind == "zx-duality") {
            aut.kind = AutKind::ZXDuality;
        } else {
            throw RefusalError("unknown automorphism kind '" + kind + "'");
        }
        aut.f = j.at("f").get<std::vector<std::size_t>>();
        if (aut.f.size() != code.n()) {
            throw RefusalError("f has " + std::to_string(aut.f.size()) + " entries, code has " +
                               std::to_string(code.n()) + " qubits");
        }
        BinMatrix::permutation(aut.f);  // validates
        auto rows = [&](const char *key) {
            std::vector<BitVec> out;
            for (const auto &hex : j.at(key).get<std::vector<std::string>>()) {
                out.push_back(BitVec::from_hex(hex, code.half()));
            }
            if (out.size() != code.half()) {
                throw RefusalError(std::string(key) + " must have " + std::to_string(code.half()) + " rows");
            }
            return BinMatrix(code.half(), std::move(out));
        };
        aut.w_x = rows("w_x");
        aut.w_z = rows("w_z");
        return aut;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("bad automorphism JSON: ") + e.what(), 0);
    }
}

std::string automorphism_to_json(const CodeAutomorphism &aut) {
    nlohmann::json j;
    j["kind"] = aut_kind_name(aut.kind);
    j["f"] = aut.f;
    auto rows = [](const BinMatrix &m) {
        std::vector<std::string> out;
        for (const auto &r : m.rows()) {
            out.push_back(r.to_hex());
        }
        return out;
    };
    j["w_x"] = rows(aut.w_x);
    j["w_z"] = rows(aut.w_z);
    return j.dump();
}

std::string automorphism_failure(const BBCode &code, const CodeAutomorphism &aut) {
    std::size_t lm = code.half();
    if (aut.f.size() != code.n() || aut.w_x.n_rows() != lm || aut.w_x.n_cols() != lm || aut.w_z.n_rows() != lm ||
        aut.w_z.n_cols() != lm) {
        throw RefusalError("automorphism shapes do not match a code with n = " + std::to_string(code.n()));
    }
    BinMatrix f = aut.f_matrix();
    BinMatrix hzt = transpose(code.hz());
    if (aut.kind == AutKind::ZXDuality) {
        if (!(mat_mul(aut.w_x, code.hx()) == mat_mul(code.hz(), f))) {
            return "W_X H_X != H_Z F";
        }
        if (!(mat_mul(transpose(code.hx()), aut.w_z) == mat_mul(f, hzt))) {
            return "H_X^T W_Z != F H_Z^T";
        }
        return "";
    }
    if (!(mat_mul(aut.w_x, code.hx()) == mat_mul(code.hx(), f))) {
        return "W_X H_X != H_X F";
    }
    if (!(mat_mul(hzt, aut.w_z) == mat_mul(f, hzt))) {
        return "H_Z^T W_Z != F H_Z^T";
    }
    return "";
}

bool verify_automorphism(const BBCode &code, const CodeAutomorphism &aut) {
    return automorphism_failure(code, aut).empty();
}

LogicalAction logical_action(const BBCode &code, const CodeAutomorphism &aut, const LogicalBasis &basis) {
    std::size_t k = basis.k();
    bool swaps = aut.kind == AutKind::ZXDuality;
    auto permute = [&](const BitVec &v) {
        BitVec out(v.size());
        for (std::size_t i : v.support()) {
            out.set(aut.f[i]);
        }
        return out;
    };
    auto act = [&](const std::vector<PauliOp> &ops, Basis from) {
        Basis to = swaps ? (from == Basis::X ? Basis::Z : Basis::X) : from;
        BinMatrix m(k, k);
        for (std::size_t i = 0; i < k; i++) {
            BitVec image = permute(op_to_vec(ops[i]));
            if (!code.check_for(to).apply(image).is_zero()) {
                throw InvariantError("image of " + render_pauli(ops[i]) + " leaves the " + basis_name(to) +
                                     "-type kernel");
            }
            m.row(i) = logical_coordinates(code, basis, to, image);
        }
        return m;
    };
    LogicalAction out;
    out.ax = act(basis.x_ops, Basis::X);
    out.az = act(basis.z_ops, Basis::Z);
    return out;
}

LogicalAction cnot_circuit_action(std::size_t k, const std::vector<std::pair<std::size_t, std::size_t>> &gates) {
    LogicalAction out{BinMatrix::identity(k), BinMatrix::identity(k)};
    for (auto [c, t] : gates) {
        if (c >= k || t >= k || c == t) {
            throw RefusalError("bad CNOT(" + std::to_string(c) + "," + std::to_string(t) + ")");
        }
        for (std::size_t i = 0; i < k; i++) {
            if (out.ax.get(i, c)) {
                out.ax.flip(i, t);
            }
            if (out.az.get(i, t)) {
                out.az.flip(i, c);
            }
        }
    }
    return out;
}

namespace {

struct FiberIndex {
    const RingContext &b;
    const RingContext &c;
    std::size_t t;

    std::size_t base_index(std::size_t cover_local) const {
        return monomial_index(b, project_monomial(b, monomial_at(c, cover_local)));
    }
    std::pair<std::size_t, std::size_t> sheet(std::size_t cover_local) const {
        Monomial m = monomial_at(c, cover_local);
        return {m.a / b.l, m.b / b.m};
    }
    std::size_t lift(std::size_t base_local, std::pair<std::size_t, std::size_t> s) const {
        Monomial m = monomial_at(b, base_local);
        return monomial_index(c, Monomial{m.a + b.l * s.first, m.b + b.m * s.second});
    }
};

BinMatrix lift_check_map(const FiberIndex &fx, const BinMatrix &w) {
    std::size_t lc = fx.c.size();
    BinMatrix out(lc, lc);
    for (std::size_t col = 0; col < lc; col++) {
        auto s = fx.sheet(col);
        std::size_t bcol = fx.base_index(col);
        for (std::size_t r = 0; r < w.n_rows(); r++) {
            if (w.get(r, bcol)) {
                out.set(fx.lift(r, s), col);
            }
        }
    }
    return out;
}

}  // namespace

std::string intertwining_failure(const CoverWitness &witness, const CodeAutomorphism &base_aut,
                                 const CodeAutomorphism &lifted) {
    BinMatrix p = projection_matrix(witness.base.ctx(), witness.cover.ctx());
    BinMatrix p1 = block_diag(p, p);
    BinMatrix f = base_aut.f_matrix();
    BinMatrix ft = lifted.f_matrix();
    if (!(mat_mul(p1, ft) == mat_mul(f, p1))) {
        return "p f~ != f p on qubits";
    }
    if (!(mat_mul(p, lifted.w_x) == mat_mul(base_aut.w_x, p))) {
        return "p W~_X != W_X p";
    }
    if (!(mat_mul(p, lifted.w_z) == mat_mul(base_aut.w_z, p))) {
        return "p W~_Z != W_Z p";
    }
    BinMatrix tau1 = transpose(p1);
    BinMatrix tau = transpose(p);
    if (!(mat_mul(ft, tau1) == mat_mul(tau1, f))) {
        return "f~ tau != tau f on qubits";
    }
    if (!(mat_mul(lifted.w_x, tau) == mat_mul(tau, base_aut.w_x)) ||
        !(mat_mul(lifted.w_z, tau) == mat_mul(tau, base_aut.w_z))) {
        return "W~ tau != tau W on checks";
    }
    return "";
}

CodeAutomorphism lift_automorphism(const CoverWitness &witness, const CodeAutomorphism &aut) {
    const RingContext &b = witness.base.ctx();
    const RingContext &c = witness.cover.ctx();
    if (aut.f.size() != witness.base.n()) {
        throw RefusalError("automorphism does not act on the base code");
    }
    FiberIndex fx{b, c, witness.t};
    std::size_t lm = b.size();
    std::size_t lc = c.size();
    CodeAutomorphism out;
    out.kind = aut.kind;
    out.f.resize(2 * lc);
    for (std::size_t j = 0; j < 2 * lc; j++) {
        std::size_t block = j / lc;
        std::size_t local = j % lc;
        std::size_t image = aut.f[block * lm + fx.base_index(local)];
        out.f[j] = (image / lm) * lc + fx.lift(image % lm, fx.sheet(local));
    }
    out.w_x = lift_check_map(fx, aut.w_x);
    out.w_z = lift_check_map(fx, aut.w_z);
    std::string bad = intertwining_failure(witness, aut, out);
    if (!bad.empty()) {
        throw RefusalError("lifted automorphism fails the intertwining condition: " + bad);
    }
    return out;
}

LogicalBasis lift_basis(const CoverWitness &witness, const LogicalBasis &base_basis) {
    LogicalBasis out;
    for (const auto &op : base_basis.x_ops) {
        out.x_ops.push_back(PauliOp{op.basis, lift_poly(witness, op.left), lift_poly(witness, op.right)});
    }
    for (const auto &op : base_basis.z_ops) {
        out.z_ops.push_back(PauliOp{op.basis, lift_poly(witness, op.left), lift_poly(witness, op.right)});
    }
    return out;
}

ActionComparison compare_base_and_lifted_action(const CoverWitness &witness, const CodeAutomorphism &aut,
                                                const CodeAutomorphism &lifted, const LogicalBasis &base_basis) {
    if (witness.h % 2 == 0) {
        throw RefusalError("action comparison needs odd h, got h = " + std::to_string(witness.h));
    }
    if (witness.cover.k() != witness.base.k()) {
        throw RefusalError("action comparison needs k_h = k, got " + std::to_string(witness.cover.k()) + " vs " +
                           std::to_string(witness.base.k()));
    }
    LogicalBasis cover_basis = lift_basis(witness, base_basis);
    check_logical_basis(witness.cover, cover_basis);
    ActionComparison out;
    out.base = logical_action(witness.base, aut, base_basis);
    out.lifted = logical_action(witness.cover, lifted, cover_basis);
    out.equal = out.base.ax == out.lifted.ax && out.base.az == out.lifted.az;
    return out;
}

}  // namespace bbcover
