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

#include "bbcover/chain_maps.h"

#include <algorithm>
#include <thread>

#include "bbcover/errors.h"

namespace bbcover {

BinMatrix projection_matrix(const RingContext &base_ctx, const RingContext &cover_ctx) {
    BinMatrix p(base_ctx.size(), cover_ctx.size());
    for (std::size_t i = 0; i < cover_ctx.size(); i++) {
        p.set(monomial_index(base_ctx, project_monomial(base_ctx, monomial_at(cover_ctx, i))), i);
    }
    return p;
}

std::string failing_square(const ChainMap &cm) {
    if (!(mat_mul(cm.deg1, transpose(cm.source.hz())) == mat_mul(transpose(cm.target.hz()), cm.deg2))) {
        return "Z square (deg1 H_Z^T = H_Z^T deg2)";
    }
    if (!(mat_mul(cm.deg0, cm.source.hx()) == mat_mul(cm.target.hx(), cm.deg1))) {
        return "X square (deg0 H_X = H_X deg1)";
    }
    return "";
}

ChainMap projection_map(const CoverWitness &witness) {
    ChainMap cm;
    cm.direction = MapDirection::Projection;
    BinMatrix p = projection_matrix(witness.base.ctx(), witness.cover.ctx());
    cm.deg2 = p;
    cm.deg1 = block_diag(p, p);
    cm.deg0 = p;
    cm.source = witness.cover;
    cm.target = witness.base;
    std::string bad = failing_square(cm);
    if (!bad.empty()) {
        throw RefusalError("projection is not a chain map: " + bad + " fails for " + render_code_spec(witness.cover));
    }
    cm.commutes = true;
    return cm;
}

ChainMap lifting_map(const CoverWitness &witness) {
    ChainMap cm;
    cm.direction = MapDirection::Lift;
    BinMatrix tau = transpose(projection_matrix(witness.base.ctx(), witness.cover.ctx()));
    cm.deg2 = tau;
    cm.deg1 = block_diag(tau, tau);
    cm.deg0 = tau;
    cm.source = witness.base;
    cm.target = witness.cover;
    std::string bad = failing_square(cm);
    if (!bad.empty()) {
        throw RefusalError("lift is not a chain map: " + bad + " fails for " + render_code_spec(witness.cover));
    }
    cm.commutes = true;
    return cm;
}

Poly project_poly_termwise(const CoverWitness &witness, const Poly &p) {
    if (!(p.ctx() == witness.cover.ctx())) {
        throw RefusalError("polynomial is not in the cover ring " + witness.cover.ctx().to_string());
    }
    return project_poly(witness.base.ctx(), p);
}

Poly lift_poly(const CoverWitness &witness, const Poly &p) {
    const RingContext &b = witness.base.ctx();
    const RingContext &c = witness.cover.ctx();
    if (!(p.ctx() == b)) {
        throw RefusalError("polynomial is not in the base ring " + b.to_string());
    }
    std::vector<Monomial> terms;
    for (Monomial t : p.terms()) {
        for (std::size_t i = 0; i < witness.u; i++) {
            for (std::size_t j = 0; j < witness.t; j++) {
                terms.push_back(Monomial{t.a + b.l * i, t.b + b.m * j});
            }
        }
    }
    return Poly(c, terms);
}

PTauResult compose_p_tau(const CoverWitness &witness) {
    BinMatrix p = projection_matrix(witness.base.ctx(), witness.cover.ctx());
    BinMatrix pt = mat_mul(p, transpose(p));
    if (pt.is_identity()) {
        if (witness.h % 2 == 0) {
            throw InvariantError("p tau = I for even h = " + std::to_string(witness.h));
        }
        return PTauResult::Identity;
    }
    if (pt.is_zero()) {
        if (witness.h % 2 == 1) {
            throw InvariantError("p tau = 0 for odd h = " + std::to_string(witness.h));
        }
        return PTauResult::Zero;
    }
    throw InvariantError("p tau is neither I nor 0");
}

HomologyMap induced_homology_map(const ChainMap &cm, Basis sector, const LogicalBasis &source_basis,
                                 const LogicalBasis &target_basis) {
    const auto &ops = sector == Basis::X ? source_basis.x_ops : source_basis.z_ops;
    HomologyMap out;
    out.sector = sector;
    out.matrix = BinMatrix(target_basis.k(), ops.size());
    const BinMatrix &target_check = cm.target.check_for(sector);
    for (std::size_t j = 0; j < ops.size(); j++) {
        BitVec image = cm.deg1.apply(op_to_vec(ops[j]));
        if (!target_check.apply(image).is_zero()) {
            throw InvariantError("image of " + render_pauli(ops[j]) + " leaves the target kernel");
        }
        BitVec coords = logical_coordinates(cm.target, target_basis, sector, image);
        for (std::size_t i : coords.support()) {
            out.matrix.set(i, j);
        }
    }
    const BinMatrix &gens = sector == Basis::X ? cm.source.hx() : cm.source.hz();
    const RowSpace &target_stab = cm.target.stabilizers_for(sector);
    for (std::size_t r = 0; r < gens.n_rows(); r++) {
        if (!target_stab.contains(cm.deg1.apply(gens.row(r)))) {
            throw InvariantError("stabilizer generator " + std::to_string(r) + " does not map to a stabilizer");
        }
    }
    return out;
}

HomologyMap induced_homology_map(const ChainMap &cm, Basis sector) {
    return induced_homology_map(cm, sector, logical_basis(cm.source), logical_basis(cm.target));
}

ClassifiedOp lift_logical(const CoverWitness &witness, const PauliOp &op) {
    if (!syndrome(witness.base, op).is_zero()) {
        throw RefusalError(render_pauli(op) + " is not in the base kernel");
    }
    ClassifiedOp out;
    out.op = PauliOp{op.basis, lift_poly(witness, op.left), lift_poly(witness, op.right)};
    out.cls = classify_op(witness.cover, out.op);
    return out;
}

ClassifiedOp project_logical(const CoverWitness &witness, const PauliOp &op) {
    if (!syndrome(witness.cover, op).is_zero()) {
        throw RefusalError(render_pauli(op) + " is not in the cover kernel");
    }
    ClassifiedOp out;
    out.op = PauliOp{op.basis, project_poly_termwise(witness, op.left), project_poly_termwise(witness, op.right)};
    out.cls = classify_op(witness.base, out.op);
    return out;
}

std::string BoundReport::to_string() const {
    std::string out = "h=" + std::to_string(h) + ": ";
    out += lower ? std::to_string(*lower) + " <= " : "";
    out += "d_h";
    out += upper ? " <= " + std::to_string(*upper) : "";
    if (lower) {
        out += lower_proven ? " [lower proven]" : " [lower conjecture]";
    }
    if (upper) {
        out += upper_proven ? " [upper proven]" : " [upper conjecture]";
    }
    out += " lifted witness " + op_class_name(lifted_witness.cls) + " of weight " +
           std::to_string(lifted_witness.op.weight());
    return out;
}

BoundReport distance_bounds(const CoverWitness &witness, const DistanceResult &base_d, std::size_t cover_k) {
    if (!base_d.exact() || base_d.witness.size() != witness.base.n()) {
        throw RefusalError("distance bounds need an exact base distance with a witness");
    }
    BoundReport rep;
    rep.h = witness.h;
    rep.base_d = base_d.value;
    bool odd = witness.h % 2 == 1;
    rep.upper = witness.h * base_d.value;
    rep.upper_proven = odd;
    if (cover_k == witness.base.k()) {
        rep.lower = base_d.value;
        rep.lower_proven = odd;
    }
    PauliOp base_op = op_from_vec(witness.base.ctx(), base_d.sector, base_d.witness);
    rep.lifted_witness = lift_logical(witness, base_op);
    if (odd && rep.lifted_witness.cls != OpClass::NontrivialLogical) {
        throw InvariantError("odd-h lift of a minimum-weight logical is " + op_class_name(rep.lifted_witness.cls));
    }
    return rep;
}

PauliOp apply_section(const CoverWitness &witness, const PauliOp &op, const std::vector<SheetChoice> &choice) {
    const RingContext &b = witness.base.ctx();
    const RingContext &c = witness.cover.ctx();
    if (choice.size() != op.weight()) {
        throw RefusalError("section needs one sheet per support term");
    }
    std::size_t i = 0;
    auto place = [&](const Poly &p) {
        std::vector<Monomial> terms;
        for (Monomial t : p.terms()) {
            const SheetChoice &s = choice[i++];
            if (s.g1 >= witness.u || s.g2 >= witness.t) {
                throw RefusalError("sheet choice out of range");
            }
            terms.push_back(Monomial{t.a + b.l * s.g1, t.b + b.m * s.g2});
        }
        return Poly(c, terms);
    };
    PauliOp out;
    out.basis = op.basis;
    out.left = place(op.left);
    out.right = place(op.right);
    return out;
}

WplResult weight_preserving_lift_search(const CoverWitness &witness, const PauliOp &op, std::uint64_t limit,
                                        std::size_t workers) {
    OpClass base_cls = classify_op(witness.base, op);
    if (base_cls == OpClass::NotInKernel) {
        throw RefusalError(render_pauli(op) + " is not a logical of the base code");
    }
    std::size_t w = op.weight();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < w; i++) {
        if (total > limit / witness.h + 1) {
            total = limit + 1;
            break;
        }
        total *= witness.h;
    }
    if (total > limit) {
        throw RefusalError("search needs h^w = " + std::to_string(witness.h) + "^" + std::to_string(w) +
                           " sections, above the limit of " + std::to_string(limit));
    }
    WplResult out;
    out.enumerated = total;
    if (w == 0) {
        return out;
    }
    std::uint64_t per_first = total / witness.h;
    std::vector<std::vector<PauliOp>> by_first(witness.h);
    workers = std::max<std::size_t>(1, std::min(workers, witness.h));
    auto run = [&](std::size_t tid) {
        std::vector<SheetChoice> choice(w);
        for (std::size_t first = tid; first < witness.h; first += workers) {
            for (std::uint64_t rest = 0; rest < per_first; rest++) {
                std::uint64_t code = rest;
                choice[0] = SheetChoice{first / witness.t, first % witness.t};
                for (std::size_t i = 1; i < w; i++) {
                    std::size_t s = static_cast<std::size_t>(code % witness.h);
                    code /= witness.h;
                    choice[i] = SheetChoice{s / witness.t, s % witness.t};
                }
                PauliOp cand = apply_section(witness, op, choice);
                if (classify_op(witness.cover, cand) == OpClass::NontrivialLogical) {
                    by_first[first].push_back(std::move(cand));
                }
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t t = 0; t < workers; t++) {
            threads.emplace_back(run, t);
        }
        for (auto &th : threads) {
            th.join();
        }
    }
    for (auto &part : by_first) {
        for (auto &p : part) {
            out.hits.push_back(std::move(p));
        }
    }
    return out;
}

bool constant_offset_section_is_chain_map(const CoverWitness &witness, std::size_t c1, std::size_t c2) {
    const RingContext &b = witness.base.ctx();
    const RingContext &c = witness.cover.ctx();
    if (c1 >= witness.u || c2 >= witness.t) {
        throw RefusalError("section offset out of range");
    }
    BinMatrix s(c.size(), b.size());
    for (std::size_t i = 0; i < b.size(); i++) {
        Monomial m = monomial_at(b, i);
        s.set(monomial_index(c, Monomial{m.a + b.l * c1, m.b + b.m * c2}), i);
    }
    ChainMap cm;
    cm.direction = MapDirection::Lift;
    cm.deg2 = s;
    cm.deg1 = block_diag(s, s);
    cm.deg0 = s;
    cm.source = witness.base;
    cm.target = witness.cover;
    return failing_square(cm).empty();
}

bool classical_inherited_check(const BBCode &code, const PauliOp &op) {
    if (!op.left.is_zero() && !op.right.is_zero()) {
        throw RefusalError(render_pauli(op) + " acts on both blocks");
    }
    // With one block empty, the syndrome is exactly the classical check of
    // the occupied block (A, B, A^T or B^T as a matrix).
    return syndrome(code, op).is_zero();
}

}  // namespace bbcover
