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

#include "bbcover/sequence.h"

#include <algorithm>
#include <chrono>

#include "bbcover/chain_maps.h"
#include "bbcover/errors.h"

namespace bbcover {

DistanceResult policy_distance(const BBCode &code, const DistancePolicy &policy,
                               const std::optional<CoverWitness> &witness,
                               const std::optional<DistanceResult> &base_d) {
    DistanceOptions opts;
    opts.w_max = policy.w_max;
    opts.workers = policy.workers;
    std::optional<DistanceResult> searched;
    if (code.n() <= policy.exact_n_max) {
        searched = sector_distance(code, Basis::Z, opts);
        if (searched->exact()) {
            return *searched;
        }
    }

    DistanceResult best = sampled_upper_bound(code, Basis::Z, policy.samples, policy.seed);
    best.w_max = policy.w_max;
    if (witness && base_d && base_d->exact()) {
        BoundReport bounds = distance_bounds(*witness, *base_d, code.k());
        if (bounds.upper_witnessed() && bounds.upper &&
            (best.kind != DistanceKind::UpperBound || *bounds.upper < best.value)) {
            best.kind = DistanceKind::UpperBound;
            best.value = *bounds.upper;
            best.method = DistanceMethod::LiftDerived;
            best.sector = base_d->sector;
            best.witness = op_to_vec(bounds.lifted_witness.op);
        }
    }
    if (best.kind == DistanceKind::UpperBound) {
        // the search may have pinned it down from below as well
        if (searched && searched->value == best.value) {
            best.kind = DistanceKind::Exact;
        }
        return best;
    }
    if (searched) {
        return *searched;
    }
    return best;
}

bool distance_consistent(const DistanceResult &ours, std::size_t listed, DistanceKind listed_kind) {
    switch (ours.kind) {
        case DistanceKind::Exact:
            return listed_kind == DistanceKind::Exact ? ours.value == listed : ours.value <= listed;
        case DistanceKind::UpperBound:
            // an exact listed d must not exceed a witnessed weight
            return listed_kind == DistanceKind::Exact ? listed <= ours.value : true;
        case DistanceKind::LowerBoundInterval:
            return listed >= ours.value;
    }
    return false;
}

std::vector<SequenceRowResult> run_sequence(const FixtureTable &table, const DistancePolicy &policy,
                                            const std::vector<std::size_t> &hs) {
    BBCode base = parse_code_spec(table.base);
    DistanceResult base_d = policy_distance(base, policy);
    std::vector<SequenceRowResult> out;
    for (const FixtureRow &row : table.rows) {
        if (!hs.empty() && std::find(hs.begin(), hs.end(), row.h) == hs.end()) {
            continue;
        }
        SequenceRowResult res;
        res.expected = row;
        auto t0 = std::chrono::steady_clock::now();
        BBCode code = parse_code_spec(row.spec);
        res.k_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        res.n_ok = code.n() == row.n;
        res.k_ok = code.k() == row.k;

        CoverCheck check = check_cover(base, code);
        res.cover_ok = check.ok() && check.witness->h == row.h;
        res.cover_reason = check.ok() ? (res.cover_ok ? "" : "cover has h=" + std::to_string(check.witness->h))
                                      : check.reason;
        if (row.h == 1) {
            res.distance = base_d;
        } else if (check.ok()) {
            res.distance = policy_distance(code, policy, check.witness, base_d);
        } else {
            res.distance = policy_distance(code, policy);
        }
        res.d_consistent = distance_consistent(res.distance, row.d, row.d_kind);

        res.record = record_for(code);
        res.record.d = summarize(res.distance);
        res.record.h = row.h;
        res.record.base = render_code_spec(base);
        if (res.distance.witness.size() == code.n()) {
            res.record.witness = render_pauli(op_from_vec(code.ctx(), res.distance.sector, res.distance.witness));
        }
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace bbcover
