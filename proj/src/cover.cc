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

#include "bbcover/cover.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "bbcover/errors.h"

namespace bbcover {

Monomial project_monomial(const RingContext &base_ctx, Monomial mono) {
    return Monomial{mono.a % base_ctx.l, mono.b % base_ctx.m};
}

Poly project_poly(const RingContext &base_ctx, const Poly &p) {
    std::vector<Monomial> terms;
    for (Monomial t : p.terms()) {
        terms.push_back(project_monomial(base_ctx, t));
    }
    return Poly(base_ctx, terms);
}

namespace {

/// Pairs each term of `lifted` with its projection; nullopt unless the
/// projections are exactly the terms of `base_poly`, each hit once.
std::optional<std::vector<TermMatch>> match_terms(const Poly &lifted, const Poly &base_poly) {
    if (lifted.size() != base_poly.size()) {
        return std::nullopt;
    }
    std::vector<TermMatch> out;
    std::set<Monomial> hit;
    for (Monomial t : lifted.terms()) {
        Monomial p = project_monomial(base_poly.ctx(), t);
        if (!base_poly.contains(p) || !hit.insert(p).second) {
            return std::nullopt;
        }
        out.push_back({t, p});
    }
    return out;
}

std::string spec_pair(const BBCode &base, const BBCode &cand) {
    return " (base " + render_code_spec(base) + ", candidate " + render_code_spec(cand) + ")";
}

}  // namespace

CoverCheck check_cover(const BBCode &base, const BBCode &cand) {
    CoverCheck out;
    const RingContext &b = base.ctx();
    const RingContext &c = cand.ctx();
    if (c.l % b.l != 0) {
        out.failed_condition = 1;
        out.reason = "condition 1 fails: l = " + std::to_string(b.l) + " does not divide l~ = " + std::to_string(c.l);
        return out;
    }
    if (c.m % b.m != 0) {
        out.failed_condition = 2;
        out.reason = "condition 2 fails: m = " + std::to_string(b.m) + " does not divide m~ = " + std::to_string(c.m);
        return out;
    }
    auto am = match_terms(cand.A(), base.A());
    if (!am) {
        out.failed_condition = 3;
        out.reason = "condition 3 fails: the terms of A~ = " + render(cand.A()) +
                     " do not project one-to-one onto the terms of A = " + render(base.A());
        return out;
    }
    auto bm = match_terms(cand.B(), base.B());
    if (!bm) {
        out.failed_condition = 4;
        out.reason = "condition 4 fails: the terms of B~ = " + render(cand.B()) +
                     " do not project one-to-one onto the terms of B = " + render(base.B());
        return out;
    }
    CoverWitness w;
    w.u = c.l / b.l;
    w.t = c.m / b.m;
    w.h = w.u * w.t;
    w.base = base;
    w.cover = cand;
    w.a_match = std::move(*am);
    w.b_match = std::move(*bm);
    out.witness = std::move(w);
    return out;
}

CoverWitness require_cover(const BBCode &base, const BBCode &cand) {
    CoverCheck check = check_cover(base, cand);
    if (!check.ok()) {
        throw RefusalError(check.reason + spec_pair(base, cand));
    }
    return std::move(*check.witness);
}

namespace {

std::vector<Monomial> fiber(const RingContext &base_ctx, const RingContext &cover_ctx, Monomial base) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < cover_ctx.l / base_ctx.l; i++) {
        for (std::size_t j = 0; j < cover_ctx.m / base_ctx.m; j++) {
            out.push_back(Monomial{base.a + base_ctx.l * i, base.b + base_ctx.m * j});
        }
    }
    return out;
}

/// Cover monomials whose projection fixes base_poly under multiplication.
std::vector<Monomial> stabilizing_lifts(const RingContext &cover_ctx, const Poly &base_poly) {
    const RingContext &b = base_poly.ctx();
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < b.size(); i++) {
        Monomial nu = monomial_at(b, i);
        if (poly_shift(base_poly, nu) == base_poly) {
            for (Monomial mu : fiber(b, cover_ctx, nu)) {
                out.push_back(mu);
            }
        }
    }
    return out;
}

Poly canonical_lift_with(const Poly &lifted, const std::vector<Monomial> &stabilizer) {
    Poly best = lifted;
    for (Monomial mu : stabilizer) {
        Poly cand = poly_shift(lifted, mu);
        if (cand.terms() < best.terms()) {
            best = std::move(cand);
        }
    }
    return best;
}

/// Every lift of base_poly into cover_ctx, one fiber choice per term.
std::vector<Poly> all_lifts(const RingContext &cover_ctx, const Poly &base_poly) {
    std::vector<std::vector<Monomial>> choices;
    for (Monomial t : base_poly.terms()) {
        choices.push_back(fiber(base_poly.ctx(), cover_ctx, t));
    }
    std::vector<Poly> out;
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
        std::vector<Monomial> terms;
        for (std::size_t i = 0; i < choices.size(); i++) {
            terms.push_back(choices[i][idx[i]]);
        }
        out.emplace_back(cover_ctx, terms);
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == choices[pos].size()) {
            idx[pos] = 0;
            pos++;
        }
        if (pos == idx.size()) {
            break;
        }
    }
    return out;
}

struct TermsLess {
    bool operator()(const Poly &a, const Poly &b) const {
        return a.terms() < b.terms();
    }
};

}  // namespace

Poly canonical_lift(const Poly &lifted, const Poly &base_poly) {
    return canonical_lift_with(lifted, stabilizing_lifts(lifted.ctx(), base_poly));
}

std::pair<Poly, Poly> canonical_form(const Poly &At, const Poly &Bt, const BBCode &base) {
    return {canonical_lift(At, base.A()), canonical_lift(Bt, base.B())};
}

CoverEnumeration enumerate_covers(const BBCode &base, std::size_t lt, std::size_t mt,
                                  const EnumerateOptions &options) {
    const RingContext &b = base.ctx();
    if (lt == 0 || mt == 0 || lt % b.l != 0 || mt % b.m != 0) {
        throw RefusalError("cover lattice " + std::to_string(lt) + "x" + std::to_string(mt) +
                           " is not a multiple of the base lattice " + std::to_string(b.l) + "x" +
                           std::to_string(b.m));
    }
    RingContext cover_ctx{lt, mt};
    CoverEnumeration out;
    out.base = base;
    out.lt = lt;
    out.mt = mt;

    std::vector<Poly> a_lifts = all_lifts(cover_ctx, base.A());
    std::vector<Poly> b_lifts = all_lifts(cover_ctx, base.B());
    out.candidates = static_cast<std::uint64_t>(a_lifts.size()) * b_lifts.size();
    if (options.dedup) {
        auto reduce = [&](const std::vector<Poly> &lifts, const Poly &base_poly) {
            std::vector<Monomial> stab = stabilizing_lifts(cover_ctx, base_poly);
            std::set<Poly, TermsLess> reps;
            for (const auto &p : lifts) {
                reps.insert(canonical_lift_with(p, stab));
            }
            return std::vector<Poly>(reps.begin(), reps.end());
        };
        a_lifts = reduce(a_lifts, base.A());
        b_lifts = reduce(b_lifts, base.B());
    } else {
        std::sort(a_lifts.begin(), a_lifts.end(), TermsLess{});
        std::sort(b_lifts.begin(), b_lifts.end(), TermsLess{});
    }

    std::vector<CoverClass> classes;
    for (const auto &a : a_lifts) {
        for (const auto &bb : b_lifts) {
            classes.push_back(CoverClass{a, bb, 0, false});
        }
    }
    std::size_t workers = std::max<std::size_t>(1, std::min(options.workers, classes.size()));
    auto run = [&](std::size_t tid) {
        for (std::size_t i = tid; i < classes.size(); i += workers) {
            BBCode code = build_code(classes[i].A, classes[i].B);
            classes[i].k = code.k();
            classes[i].connected = is_connected(build_tanner_graph(code));
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
    for (auto &c : classes) {
        if (options.connected_only && !c.connected) {
            continue;
        }
        out.k_histogram[c.k]++;
        out.classes.push_back(std::move(c));
    }
    return out;
}

bool TannerGraph::has_edge(std::uint32_t check, std::uint32_t qubit) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(check, qubit));
}

std::vector<std::vector<std::uint32_t>> TannerGraph::adjacency() const {
    std::vector<std::vector<std::uint32_t>> adj(num_vertices());
    for (auto [c, q] : edges) {
        adj[c].push_back(q);
        adj[q].push_back(c);
    }
    return adj;
}

namespace {

std::uint32_t vid(VertexClass cls, std::size_t per_class, std::size_t local) {
    return static_cast<std::uint32_t>(static_cast<std::size_t>(cls) * per_class + local);
}

void finish(TannerGraph &g) {
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
}

}  // namespace

TannerGraph build_tanner_graph(const BBCode &code) {
    TannerGraph g;
    std::size_t lm = code.half();
    g.per_class = lm;
    for (auto [cls, mat] : {std::make_pair(VertexClass::XCheck, &code.hx()), std::make_pair(VertexClass::ZCheck, &code.hz())}) {
        for (std::size_t r = 0; r < lm; r++) {
            for (std::size_t j : mat->row(r).support()) {
                std::uint32_t q = j < lm ? vid(VertexClass::QubitL, lm, j) : vid(VertexClass::QubitR, lm, j - lm);
                g.edges.emplace_back(vid(cls, lm, r), q);
            }
        }
    }
    finish(g);
    return g;
}

TannerGraph build_derived_graph(const BBCode &base, const CoverWitness &witness) {
    const RingContext &b = base.ctx();
    RingContext c = witness.cover.ctx();
    std::size_t u = witness.u;
    std::size_t t = witness.t;
    std::size_t h = witness.h;
    TannerGraph g;
    g.per_class = b.size() * h;

    struct Lifted {
        Monomial cover;
        Monomial base;
    };
    auto transposed = [&](const std::vector<TermMatch> &ms) {
        std::vector<Lifted> out;
        for (const auto &m : ms) {
            out.push_back({make_monomial(c, -static_cast<std::int64_t>(m.cover.a), -static_cast<std::int64_t>(m.cover.b)),
                           make_monomial(b, -static_cast<std::int64_t>(m.base.a), -static_cast<std::int64_t>(m.base.b))});
        }
        return out;
    };
    auto plain = [](const std::vector<TermMatch> &ms) {
        std::vector<Lifted> out;
        for (const auto &m : ms) {
            out.push_back({m.cover, m.base});
        }
        return out;
    };
    struct Block {
        VertexClass check;
        VertexClass qubit;
        std::vector<Lifted> terms;
    };
    std::vector<Block> blocks = {
        {VertexClass::XCheck, VertexClass::QubitL, plain(witness.a_match)},
        {VertexClass::XCheck, VertexClass::QubitR, plain(witness.b_match)},
        {VertexClass::ZCheck, VertexClass::QubitL, transposed(witness.b_match)},
        {VertexClass::ZCheck, VertexClass::QubitR, transposed(witness.a_match)},
    };
    for (const auto &blk : blocks) {
        for (std::size_t ci = 0; ci < b.size(); ci++) {
            Monomial cm = monomial_at(b, ci);
            for (const auto &term : blk.terms) {
                Monomial q = mono_mul(cm, term.base, b);
                std::size_t v1 = ((cm.a + term.cover.a) / b.l) % u;
                std::size_t v2 = ((cm.b + term.cover.b) / b.m) % t;
                for (std::size_t g1 = 0; g1 < u; g1++) {
                    for (std::size_t g2 = 0; g2 < t; g2++) {
                        std::size_t src = g1 * t + g2;
                        std::size_t dst = ((g1 + v1) % u) * t + (g2 + v2) % t;
                        g.edges.emplace_back(vid(blk.check, g.per_class, ci * h + src),
                                             vid(blk.qubit, g.per_class, monomial_index(b, q) * h + dst));
                    }
                }
            }
        }
    }
    finish(g);
    return g;
}

IsomorphismReport check_cover_isomorphism(const BBCode &base, const BBCode &cover, const CoverWitness &witness) {
    IsomorphismReport rep;
    const RingContext &b = base.ctx();
    const RingContext &c = cover.ctx();
    if (c.l != witness.u * b.l || c.m != witness.t * b.m) {
        rep.detail = "witness factors do not match the lattices";
        return rep;
    }
    std::size_t h = witness.h;
    std::size_t n_local = c.size();
    TannerGraph cover_graph = build_tanner_graph(cover);
    TannerGraph derived = build_derived_graph(base, witness);

    // f on local indices, and its inverse.
    std::vector<std::uint32_t> f_local(n_local);
    std::vector<std::uint32_t> f_inv(n_local);
    for (std::size_t i = 0; i < n_local; i++) {
        Monomial m = monomial_at(c, i);
        std::size_t base_idx = monomial_index(b, project_monomial(b, m));
        std::size_t sheet = (m.a / b.l) * witness.t + m.b / b.m;
        f_local[i] = static_cast<std::uint32_t>(base_idx * h + sheet);
        f_inv[f_local[i]] = static_cast<std::uint32_t>(i);
    }
    auto map_vertex = [&](std::uint32_t v, const std::vector<std::uint32_t> &table) {
        std::uint32_t cls = v / static_cast<std::uint32_t>(n_local);
        return cls * static_cast<std::uint32_t>(n_local) + table[v % n_local];
    };

    rep.edges_forward = cover_graph.edges.size() == derived.edges.size();
    for (auto [ch, q] : cover_graph.edges) {
        if (!derived.has_edge(map_vertex(ch, f_local), map_vertex(q, f_local))) {
            rep.edges_forward = false;
            rep.detail = "a cover edge has no derived-graph image";
            break;
        }
    }
    rep.edges_backward = true;
    for (auto [ch, q] : derived.edges) {
        if (!cover_graph.has_edge(map_vertex(ch, f_inv), map_vertex(q, f_inv))) {
            rep.edges_backward = false;
            if (rep.detail.empty()) {
                rep.detail = "a derived-graph edge has no cover preimage";
            }
            break;
        }
    }

    // Fibers and local bijectivity of the projection.
    std::size_t base_local = b.size();
    auto project = [&](std::uint32_t v) {
        std::uint32_t cls = v / static_cast<std::uint32_t>(n_local);
        Monomial m = monomial_at(c, v % n_local);
        return cls * static_cast<std::uint32_t>(base_local) +
               static_cast<std::uint32_t>(monomial_index(b, project_monomial(b, m)));
    };
    std::vector<std::size_t> fiber_size(4 * base_local, 0);
    for (std::uint32_t v = 0; v < cover_graph.num_vertices(); v++) {
        fiber_size[project(v)]++;
    }
    rep.fibers_ok = std::all_of(fiber_size.begin(), fiber_size.end(), [&](std::size_t s) { return s == h; });
    if (!rep.fibers_ok && rep.detail.empty()) {
        rep.detail = "a fiber does not have size h";
    }

    auto cover_adj = cover_graph.adjacency();
    auto base_adj = build_tanner_graph(base).adjacency();
    rep.neighborhoods_ok = true;
    for (std::uint32_t v = 0; v < cover_graph.num_vertices() && rep.neighborhoods_ok; v++) {
        std::vector<std::uint32_t> images;
        for (std::uint32_t w : cover_adj[v]) {
            images.push_back(project(w));
        }
        std::sort(images.begin(), images.end());
        std::vector<std::uint32_t> expect = base_adj[project(v)];
        std::sort(expect.begin(), expect.end());
        if (images != expect) {
            rep.neighborhoods_ok = false;
            if (rep.detail.empty()) {
                rep.detail = "projection is not a bijection on some neighborhood";
            }
        }
    }
    return rep;
}

bool verify_cover_isomorphism(const BBCode &base, const BBCode &cover, const CoverWitness &witness) {
    return check_cover_isomorphism(base, cover, witness).ok();
}

bool is_connected(const TannerGraph &g) {
    std::size_t n = g.num_vertices();
    if (n == 0) {
        return true;
    }
    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::size_t components = n;
    for (auto [c, q] : g.edges) {
        std::uint32_t a = find(c);
        std::uint32_t b = find(q);
        if (a != b) {
            parent[a] = b;
            components--;
        }
    }
    return components == 1;
}

}  // namespace bbcover
