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

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "bbcover/automorphism.h"
#include "bbcover/bb_code.h"
#include "bbcover/chain_maps.h"
#include "bbcover/cover.h"
#include "bbcover/distance.h"
#include "bbcover/errors.h"
#include "bbcover/records.h"
#include "bbcover/sequence.h"

#ifndef BBCOVER_DATA_DIR
#define BBCOVER_DATA_DIR "data"
#endif

using namespace bbcover;
using ojson = nlohmann::ordered_json;

namespace {

enum class Format { Text, Json, Csv };

struct Globals {
    std::size_t w_max = 10;
    std::size_t workers = 1;
    bool json = false;
    bool csv = false;
    Format format() const {
        return json ? Format::Json : csv ? Format::Csv : Format::Text;
    }
};

void emit_record(const Globals &g, const ResultRecord &rec, bool &csv_header_done) {
    switch (g.format()) {
        case Format::Json:
            std::cout << record_to_json(rec) << "\n";
            break;
        case Format::Csv:
            if (!csv_header_done) {
                std::cout << csv_header() << "\n";
                csv_header_done = true;
            }
            std::cout << record_to_csv(rec) << "\n";
            break;
        case Format::Text: {
            std::cout << "[[" << rec.n << "," << rec.k << ",";
            if (rec.d) {
                const char *rel = rec.d->kind == DistanceKind::Exact        ? ""
                                  : rec.d->kind == DistanceKind::UpperBound ? "<="
                                                                            : ">=";
                std::cout << rel << rec.d->value;
            } else {
                std::cout << "?";
            }
            std::cout << "]]  " << rec.spec();
            if (rec.h) {
                std::cout << "  h=" << *rec.h;
            }
            if (rec.d) {
                std::cout << "  (" << distance_kind_name(rec.d->kind) << ", " << distance_method_name(rec.d->method)
                          << ")";
            }
            if (rec.connected) {
                std::cout << (*rec.connected ? "  connected" : "  disconnected");
            }
            std::cout << "\n";
            break;
        }
    }
}

std::string matrix_rows(const BinMatrix &m) {
    std::string out;
    for (const BitVec &row : m.rows()) {
        out += "  " + row.to_bit_string() + "\n";
    }
    return out;
}

ojson matrix_json(const BinMatrix &m) {
    ojson rows = ojson::array();
    for (const BitVec &row : m.rows()) {
        rows.push_back(row.to_bit_string());
    }
    return rows;
}

std::string describe_class(OpClass c) {
    switch (c) {
        case OpClass::Stabilizer:
            return "projects to stabilizer class";
        case OpClass::NontrivialLogical:
            return "nontrivial logical";
        case OpClass::NotInKernel:
            return "not in kernel";
    }
    return "?";
}

std::string render_or_zero(const PauliOp &op) {
    return op.weight() == 0 ? "0" : render_pauli(op);
}

std::vector<std::size_t> parse_h_list(const std::string &text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        auto dash = item.find("..");
        try {
            if (dash != std::string::npos) {
                std::size_t lo = std::stoul(item.substr(0, dash));
                std::size_t hi = std::stoul(item.substr(dash + 2));
                for (std::size_t h = lo; h <= hi; h++) {
                    out.push_back(h);
                }
            } else {
                out.push_back(std::stoul(item));
            }
        } catch (const std::exception &) {
            throw ParseError("bad h list '" + text + "'", 0);
        }
    }
    return out;
}

int cmd_info(const Globals &g, const std::string &spec, bool no_distance) {
    BBCode code = parse_code_spec(spec);
    ResultRecord rec = record_for(code);
    std::size_t weight = code.A().size() + code.B().size();
    std::optional<DistanceResult> d;
    if (!no_distance && code.k() > 0) {
        DistancePolicy policy;
        policy.w_max = g.w_max;
        policy.workers = g.workers;
        d = policy_distance(code, policy);
        rec.d = summarize(*d);
        if (d->witness.size() == code.n()) {
            rec.witness = render_pauli(op_from_vec(code.ctx(), d->sector, d->witness));
        }
    }
    if (g.format() == Format::Text) {
        std::cout << "code " << render_code_spec(code) << "\n";
        std::cout << "n " << code.n() << "\n";
        std::cout << "k " << code.k() << "\n";
        std::cout << "check weight " << weight << "\n";
        if (d) {
            std::cout << d->to_string() << "\n";
            if (rec.witness) {
                std::cout << "witness " << *rec.witness << "\n";
            }
        }
        return 0;
    }
    bool hdr = false;
    emit_record(g, rec, hdr);
    return 0;
}

int cmd_check_cover(const Globals &g, const std::string &base_spec, const std::string &cand_spec) {
    BBCode base = parse_code_spec(base_spec);
    BBCode cand = parse_code_spec(cand_spec);
    CoverCheck check = check_cover(base, cand);
    if (!check.ok()) {
        throw RefusalError(check.reason);
    }
    const CoverWitness &w = *check.witness;
    IsomorphismReport iso = check_cover_isomorphism(base, cand, w);
    TannerGraph graph = build_tanner_graph(cand);
    bool connected = is_connected(graph);
    auto matches = [](const std::vector<TermMatch> &ms) {
        std::vector<std::string> out;
        for (const auto &tm : ms) {
            out.push_back(render(tm.cover) + "->" + render(tm.base));
        }
        return out;
    };
    if (g.format() == Format::Json) {
        ojson j;
        j["base"] = render_code_spec(base);
        j["cover"] = render_code_spec(cand);
        j["u"] = w.u;
        j["t"] = w.t;
        j["h"] = w.h;
        j["a_match"] = matches(w.a_match);
        j["b_match"] = matches(w.b_match);
        j["graph_verified"] = iso.ok();
        j["connected"] = connected;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "cover witness: h=" << w.h << " (l~ = " << w.u << " l, m~ = " << w.t << " m)\n";
        for (const auto &s : matches(w.a_match)) {
            std::cout << "  A: " << s << "\n";
        }
        for (const auto &s : matches(w.b_match)) {
            std::cout << "  B: " << s << "\n";
        }
        std::cout << "derived graph: " << (iso.ok() ? "isomorphic" : "MISMATCH " + iso.detail) << "\n";
        std::cout << "tanner graph: " << (connected ? "connected" : "disconnected") << "\n";
    }
    if (!iso.ok()) {
        throw InvariantError("algebraic witness not confirmed by graph check: " + iso.detail);
    }
    return 0;
}

int cmd_enumerate(const Globals &g, const std::string &base_spec, std::size_t lt, std::size_t mt, bool no_dedup,
                  bool connected_only) {
    BBCode base = parse_code_spec(base_spec);
    EnumerateOptions opts;
    opts.dedup = !no_dedup;
    opts.workers = g.workers;
    opts.connected_only = connected_only;
    CoverEnumeration en = enumerate_covers(base, lt, mt, opts);
    std::size_t h = (lt / base.ctx().l) * (mt / base.ctx().m);
    bool hdr = false;
    for (const CoverClass &c : en.classes) {
        ResultRecord rec;
        rec.l = lt;
        rec.m = mt;
        rec.A = render(c.A);
        rec.B = render(c.B);
        rec.n = 2 * lt * mt;
        rec.k = c.k;
        rec.h = h;
        rec.connected = c.connected;
        rec.canonical = opts.dedup;
        rec.base = render_code_spec(base);
        emit_record(g, rec, hdr);
    }
    if (g.format() == Format::Json) {
        ojson hist = ojson::object();
        for (const auto &[k, count] : en.k_histogram) {
            hist[std::to_string(k)] = count;
        }
        ojson j;
        j["summary"] = {{"base", render_code_spec(base)}, {"lt", lt},
                        {"mt", mt},
                        {"h", h},
                        {"candidates", en.candidates},
                        {"classes", en.classes.size()},
                        {"histogram", hist}};
        std::cout << j.dump() << "\n";
    } else if (g.format() == Format::Text) {
        std::cout << "candidates " << en.candidates << ", classes " << en.classes.size() << "\n";
        std::cout << "k histogram " << render_histogram(en.k_histogram) << "\n";
    }
    return 0;
}

int cmd_sequence(const Globals &g, const std::string &fixtures, const std::string &table_name,
                 const std::string &h_list, std::size_t exact_n_max, std::size_t samples) {
    std::vector<FixtureTable> tables = load_fixture_dir(fixtures);
    DistancePolicy policy;
    policy.w_max = g.w_max;
    policy.workers = g.workers;
    policy.exact_n_max = exact_n_max;
    policy.samples = samples;
    std::vector<std::size_t> hs = parse_h_list(h_list);
    bool any = false;
    bool all_ok = true;
    bool hdr = false;
    for (const FixtureTable &t : tables) {
        if (!table_name.empty() && t.name != table_name) {
            continue;
        }
        any = true;
        if (g.format() == Format::Text) {
            std::cout << "# " << t.name << ": " << t.description << "\n";
        }
        for (const SequenceRowResult &r : run_sequence(t, policy, hs)) {
            emit_record(g, r.record, hdr);
            if (!r.ok()) {
                all_ok = false;
                std::cerr << "mismatch in " << t.name << " h=" << r.expected.h << ":"
                          << (r.n_ok ? "" : " n") << (r.k_ok ? "" : " k") << (r.cover_ok ? "" : " cover(" + r.cover_reason + ")")
                          << (r.d_consistent ? "" : " d") << "\n";
            }
        }
    }
    if (!any) {
        throw RefusalError("no fixture table named '" + table_name + "' under " + fixtures);
    }
    if (!all_ok) {
        throw InvariantError("computed parameters disagree with the fixture table");
    }
    return 0;
}

int cmd_distance(const Globals &g, const std::string &spec, const std::string &sector, std::uint64_t budget) {
    BBCode code = parse_code_spec(spec);
    DistanceOptions opts;
    opts.w_max = g.w_max;
    opts.workers = g.workers;
    opts.budget = budget;
    std::vector<Basis> sectors;
    if (sector == "X") {
        sectors = {Basis::X};
    } else if (sector == "Z") {
        sectors = {Basis::Z};
    } else if (sector == "both") {
        sectors = {Basis::X, Basis::Z};
    } else {
        throw RefusalError("sector must be X, Z or both");
    }
    std::vector<DistanceResult> results;
    for (Basis b : sectors) {
        results.push_back(sector_distance(code, b, opts));
    }
    if (g.format() == Format::Text) {
        for (const DistanceResult &d : results) {
            std::cout << "d_" << basis_name(d.sector) << ": " << d.to_string() << "\n";
            if (d.witness.size() == code.n()) {
                std::cout << "  witness " << render_pauli(op_from_vec(code.ctx(), d.sector, d.witness)) << "\n";
            }
        }
        if (results.size() == 2 && results[0].exact() && results[1].exact()) {
            std::cout << "d_X == d_Z: " << (results[0].value == results[1].value ? "yes" : "no") << "\n";
        }
        return 0;
    }
    bool hdr = false;
    for (const DistanceResult &d : results) {
        ResultRecord rec = record_for(code);
        rec.d = summarize(d);
        if (d.witness.size() == code.n()) {
            rec.witness = render_pauli(op_from_vec(code.ctx(), d.sector, d.witness));
        }
        emit_record(g, rec, hdr);
    }
    return 0;
}

int cmd_project_or_lift(const Globals &g, bool lift, const std::string &base_spec, const std::string &cover_spec,
                        const std::string &op_text) {
    BBCode base = parse_code_spec(base_spec);
    BBCode cover = parse_code_spec(cover_spec);
    CoverWitness w = require_cover(base, cover);
    PauliOp op = parse_pauli(op_text, lift ? base.ctx() : cover.ctx());
    ClassifiedOp out = lift ? lift_logical(w, op) : project_logical(w, op);
    if (g.format() == Format::Json) {
        ojson j;
        j["op"] = render_or_zero(out.op);
        j["weight"] = out.op.weight();
        j["class"] = op_class_name(out.cls);
        std::cout << j.dump() << "\n";
    } else if (lift) {
        std::cout << render_or_zero(out.op) << "\n";
        std::cout << "weight " << out.op.weight() << ", " << describe_class(out.cls) << "\n";
    } else {
        std::cout << render_or_zero(out.op) << " (" << describe_class(out.cls) << ")\n";
    }
    return 0;
}

int cmd_wpl(const Globals &g, const std::string &base_spec, const std::string &cover_spec, const std::string &op_text,
            std::uint64_t limit) {
    BBCode base = parse_code_spec(base_spec);
    BBCode cover = parse_code_spec(cover_spec);
    CoverWitness w = require_cover(base, cover);
    PauliOp op = parse_pauli(op_text, base.ctx());
    WplResult res = weight_preserving_lift_search(w, op, limit, g.workers);
    if (g.format() == Format::Json) {
        ojson j;
        j["enumerated"] = res.enumerated;
        ojson hits = ojson::array();
        for (const PauliOp &p : res.hits) {
            hits.push_back(render_pauli(p));
        }
        j["hits"] = hits;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "sections enumerated " << res.enumerated << "\n";
        std::cout << "weight-" << op.weight() << " cover logicals " << res.hits.size() << "\n";
        for (const PauliOp &p : res.hits) {
            std::cout << "  " << render_pauli(p) << "\n";
        }
        if (!res.hits.empty()) {
            std::cout << "cover distance <= " << op.weight() << "\n";
        }
    }
    return 0;
}

CodeAutomorphism load_automorphism(const BBCode &code, const std::string &name) {
    if (std::filesystem::is_regular_file(name)) {
        std::ifstream in(name);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_automorphism_json(code, ss.str());
    }
    return builtin_automorphism(code, name);
}

int cmd_aut(const Globals &g, const std::string &spec, const std::string &name, const std::string &cover_spec,
            bool dump) {
    BBCode code = parse_code_spec(spec);
    CodeAutomorphism aut = load_automorphism(code, name);
    if (dump) {
        std::cout << automorphism_to_json(aut) << "\n";
        return 0;
    }
    std::string failure = automorphism_failure(code, aut);
    if (!failure.empty()) {
        throw RefusalError("not an automorphism: " + failure);
    }
    LogicalBasis basis = logical_basis(code);
    LogicalAction action = logical_action(code, aut, basis);
    std::optional<ActionComparison> cmp;
    std::string lifted_note;
    if (!cover_spec.empty()) {
        BBCode cover = parse_code_spec(cover_spec);
        CoverWitness w = require_cover(code, cover);
        CodeAutomorphism lifted = lift_automorphism(w, aut);
        std::string lifted_failure = automorphism_failure(cover, lifted);
        if (!lifted_failure.empty() && aut.kind != AutKind::ZXDuality) {
            throw InvariantError("lifted map fails: " + lifted_failure);
        }
        if (!lifted_failure.empty()) {
            lifted_note = "lifted map is not a duality of the cover complex (" + lifted_failure +
                          "); actions compared on the lifted basis";
        }
        cmp = compare_base_and_lifted_action(w, aut, lifted, basis);
    }
    if (g.format() == Format::Json) {
        ojson j;
        j["kind"] = aut_kind_name(aut.kind);
        j["verified"] = true;
        j["ax"] = matrix_json(action.ax);
        j["az"] = matrix_json(action.az);
        if (cmp) {
            j["lifted_ax"] = matrix_json(cmp->lifted.ax);
            j["lifted_az"] = matrix_json(cmp->lifted.az);
            j["lifted_equal"] = cmp->equal;
            if (!lifted_note.empty()) {
                j["note"] = lifted_note;
            }
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << aut_kind_name(aut.kind) << " automorphism verified\n";
        std::cout << "ax (row i = image of x_i)\n" << matrix_rows(action.ax);
        std::cout << "az (row i = image of z_i)\n" << matrix_rows(action.az);
        if (cmp) {
            std::cout << "lifted action " << (cmp->equal ? "equals" : "DIFFERS FROM") << " base action\n";
            if (!lifted_note.empty()) {
                std::cout << "note: " << lifted_note << "\n";
            }
        }
    }
    if (cmp && !cmp->equal) {
        throw InvariantError("lifted logical action differs from the base action");
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Bivariate bicycle codes and their covers"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--wmax", g.w_max, "Largest weight searched for exact distances")->check(CLI::PositiveNumber);
    app.add_option("--workers", g.workers, "Worker threads")->check(CLI::PositiveNumber);
    auto *json_flag = app.add_flag("--json", g.json, "JSON lines output");
    app.add_flag("--csv", g.csv, "CSV output")->excludes(json_flag);

    std::string spec, base, cover, op, name, fixtures = std::string(BBCOVER_DATA_DIR) + "/fixtures", table,
                                              h_list, sector = "Z";
    bool no_distance = false, no_dedup = false, connected_only = false, dump = false;
    std::size_t lt = 0, mt = 0, exact_n_max = 100, samples = 200;
    std::uint64_t limit = 1u << 20, budget = 0;

    auto *info = app.add_subcommand("info", "n, k, check weight and distance of a code");
    info->add_option("spec", spec, "l=.. m=.. A=.. B=..")->required();
    info->add_flag("--no-distance", no_distance, "Skip the distance computation");

    auto *cc = app.add_subcommand("check-cover", "Check that a code covers a base code");
    cc->add_option("base", base)->required();
    cc->add_option("candidate", cover)->required();

    auto *en = app.add_subcommand("enumerate", "Enumerate cover codes of a base code");
    en->add_option("base", base)->required();
    en->add_option("--lt", lt, "Cover l")->required();
    en->add_option("--mt", mt, "Cover m")->required();
    en->add_flag("--no-dedup", no_dedup, "Keep every raw lift");
    en->add_flag("--connected-only", connected_only, "Drop covers with a disconnected Tanner graph");

    auto *seq = app.add_subcommand("sequence", "Recompute the parameters of fixture tables");
    seq->add_option("--fixtures", fixtures, "Fixture file or directory");
    seq->add_option("--table", table, "Only this table");
    seq->add_option("--hs", h_list, "Comma list or range of h, e.g. 1..3");
    seq->add_option("--exact-n-max", exact_n_max, "Largest n searched exhaustively");
    seq->add_option("--samples", samples, "Information-set samples for larger codes");

    auto *dist = app.add_subcommand("distance", "Distance by exhaustive search up to --wmax");
    dist->add_option("spec", spec)->required();
    dist->add_option("--sector", sector, "X, Z or both");
    dist->add_option("--budget", budget, "Search budget per weight (0 = none)");

    auto *proj = app.add_subcommand("project", "Project a cover operator to the base");
    proj->add_option("base", base)->required();
    proj->add_option("cover", cover)->required();
    proj->add_option("op", op, "X(p|q) or Z(p|q) in the cover ring")->required();

    auto *lift = app.add_subcommand("lift", "Lift a base logical through tau");
    lift->add_option("base", base)->required();
    lift->add_option("cover", cover)->required();
    lift->add_option("op", op, "X(p|q) or Z(p|q) in the base ring")->required();

    auto *wpl = app.add_subcommand("wpl-search", "Search weight-preserving lifts of a base logical");
    wpl->add_option("base", base)->required();
    wpl->add_option("cover", cover)->required();
    wpl->add_option("op", op)->required();
    wpl->add_option("--limit", limit, "Refuse when h^|op| exceeds this");

    auto *aut = app.add_subcommand("aut", "Verify an automorphism and print its logical action");
    aut->add_option("spec", spec)->required();
    aut->add_option("name", name, "Built-in name or JSON file")->required();
    aut->add_option("--cover", cover, "Also lift to this cover and compare actions");
    aut->add_flag("--dump", dump, "Print the automorphism as JSON and stop");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (info->parsed()) {
            return cmd_info(g, spec, no_distance);
        }
        if (cc->parsed()) {
            return cmd_check_cover(g, base, cover);
        }
        if (en->parsed()) {
            return cmd_enumerate(g, base, lt, mt, no_dedup, connected_only);
        }
        if (seq->parsed()) {
            return cmd_sequence(g, fixtures, table, h_list, exact_n_max, samples);
        }
        if (dist->parsed()) {
            return cmd_distance(g, spec, sector, budget);
        }
        if (proj->parsed() || lift->parsed()) {
            return cmd_project_or_lift(g, lift->parsed(), base, cover, op);
        }
        if (wpl->parsed()) {
            return cmd_wpl(g, base, cover, op, limit);
        }
        if (aut->parsed()) {
            return cmd_aut(g, spec, name, cover, dump);
        }
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const RefusalError &e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const InvariantError &e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
