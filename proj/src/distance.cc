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

#include "bbcover/distance.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <random>
#include <thread>

#include "bbcover/errors.h"

namespace bbcover {

std::string distance_kind_name(DistanceKind kind) {
    switch (kind) {
        case DistanceKind::Exact:
            return "exact";
        case DistanceKind::UpperBound:
            return "upper-bound";
        case DistanceKind::LowerBoundInterval:
            return "lower-bound-interval";
    }
    return "?";
}

std::string distance_method_name(DistanceMethod method) {
    switch (method) {
        case DistanceMethod::Enumeration:
            return "enumeration";
        case DistanceMethod::Coset:
            return "coset";
        case DistanceMethod::LiftDerived:
            return "lift-derived";
        case DistanceMethod::InformationSet:
            return "information-set";
    }
    return "?";
}

DistanceKind parse_distance_kind(const std::string &name) {
    for (auto k : {DistanceKind::Exact, DistanceKind::UpperBound, DistanceKind::LowerBoundInterval}) {
        if (distance_kind_name(k) == name) {
            return k;
        }
    }
    throw ParseError("unknown distance kind '" + name + "'", 0);
}

std::string DistanceResult::to_string() const {
    std::string rel = kind == DistanceKind::Exact ? "d = " : kind == DistanceKind::UpperBound ? "d <= " : "d >= ";
    return rel + std::to_string(value) + " (" + distance_kind_name(kind) + ", " + distance_method_name(method) +
           ", w_max=" + std::to_string(w_max) + ")";
}

namespace {

using Support = std::vector<std::size_t>;

/// Syndromes of column subsets, stored as `stride` words each.
class ColumnSyndromes {
   public:
    explicit ColumnSyndromes(const BinMatrix &check) : stride_(BitVec::num_words_for(check.n_rows())) {
        if (stride_ == 0) {
            stride_ = 1;
        }
        words_.assign(check.n_cols() * stride_, 0);
        BinMatrix t = transpose(check);
        for (std::size_t j = 0; j < check.n_cols(); j++) {
            for (std::size_t w = 0; w < t.row(j).num_words(); w++) {
                words_[j * stride_ + w] = t.row(j).data()[w];
            }
        }
    }
    std::size_t stride() const {
        return stride_;
    }
    const std::uint64_t *col(std::size_t j) const {
        return &words_[j * stride_];
    }

   private:
    std::size_t stride_;
    std::vector<std::uint64_t> words_;
};

std::uint64_t hash_words(const std::uint64_t *w, std::size_t n) {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (std::size_t i = 0; i < n; i++) {
        h ^= w[i] + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        h *= 0xFF51AFD7ED558CCDULL;
    }
    return h ^ (h >> 29);
}

/// Calls visit(support, syndrome) for every k-subset of [begin, n) in
/// lexicographic order, with the XOR of the column syndromes. `first_choices`
/// optionally restricts the first element.
template <typename Visit>
void for_each_subset(const ColumnSyndromes &cols, std::size_t begin, std::size_t n, std::size_t k,
                     const std::vector<std::size_t> *first_choices, Visit &&visit) {
    std::size_t stride = cols.stride();
    std::vector<std::uint64_t> acc((k + 1) * stride, 0);
    Support cur(k);
    bool keep_going = true;
    auto rec = [&](auto &&self, std::size_t depth, std::size_t from) -> void {
        if (!keep_going) {
            return;
        }
        if (depth == k) {
            keep_going = visit(cur, &acc[k * stride]);
            return;
        }
        auto step = [&](std::size_t j) {
            cur[depth] = j;
            const std::uint64_t *c = cols.col(j);
            for (std::size_t w = 0; w < stride; w++) {
                acc[(depth + 1) * stride + w] = acc[depth * stride + w] ^ c[w];
            }
            self(self, depth + 1, j + 1);
        };
        if (depth == 0 && first_choices) {
            for (std::size_t j : *first_choices) {
                if (!keep_going) {
                    return;
                }
                step(j);
            }
            return;
        }
        for (std::size_t j = from; j + (k - depth) <= n && keep_going; j++) {
            step(j);
        }
    };
    rec(rec, 0, begin);
}

struct WeightSearchResult {
    std::vector<Support> found;  // all hits when collecting, else at most the best
    bool budget_exceeded = false;
};

/// Nontrivial logicals of weight w with support inside [lo, n). When `pinned`,
/// the support must contain lo. Meet in the middle: a low part of size L
/// (stored by syndrome) and a high part of size w - L (enumerated), glued only
/// when max(low) < min(high), so each support is produced once.
WeightSearchResult search_weight(const ColumnSyndromes &cols, const RowSpace &stabilizers, std::size_t n,
                                 std::size_t w, std::size_t lo, bool pinned, bool collect_all, std::size_t workers,
                                 std::uint64_t budget) {
    WeightSearchResult result;
    if (w == 0 || lo >= n || w > n - lo) {
        return result;
    }
    std::size_t stride = cols.stride();
    std::size_t low_size = pinned ? std::max<std::size_t>(1, w / 2) : w / 2;
    std::size_t high_size = w - low_size;

    // Low table.
    std::vector<std::uint64_t> low_syn;
    std::vector<std::uint32_t> low_elems;
    std::vector<std::size_t> low_max;
    std::vector<std::size_t> pin_choice{lo};
    std::uint64_t spent = 0;
    bool exceeded = false;
    for_each_subset(cols, lo, n, low_size, pinned ? &pin_choice : nullptr,
                    [&](const Support &s, const std::uint64_t *syn) {
                        low_syn.insert(low_syn.end(), syn, syn + stride);
                        for (std::size_t e : s) {
                            low_elems.push_back(static_cast<std::uint32_t>(e));
                        }
                        low_max.push_back(s.empty() ? 0 : s.back());
                        spent++;
                        if (budget && spent > budget) {
                            exceeded = true;
                            return false;
                        }
                        return true;
                    });
    if (exceeded) {
        result.budget_exceeded = true;
        return result;
    }
    std::size_t n_low = low_max.size();
    std::size_t n_buckets = std::bit_ceil(std::max<std::size_t>(4, 2 * n_low));
    std::vector<std::uint32_t> buckets(n_buckets, 0);
    for (std::size_t i = 0; i < n_low; i++) {
        std::size_t b = hash_words(&low_syn[i * stride], stride) & (n_buckets - 1);
        while (buckets[b]) {
            b = (b + 1) & (n_buckets - 1);
        }
        buckets[b] = static_cast<std::uint32_t>(i + 1);
    }

    // High enumeration, partitioned by its first element.
    std::size_t high_begin = pinned ? lo + 1 : lo;
    std::vector<std::size_t> firsts;
    if (high_size > 0) {
        for (std::size_t j = high_begin; j + high_size <= n; j++) {
            firsts.push_back(j);
        }
    }
    workers = std::max<std::size_t>(1, std::min(workers, std::max<std::size_t>(1, firsts.size())));
    std::vector<std::vector<Support>> per_worker(workers);
    std::atomic<std::uint64_t> high_spent{spent};
    std::atomic<bool> stop{false};

    auto consider = [&](std::vector<Support> &out, Support cand) {
        std::sort(cand.begin(), cand.end());
        BitVec v = BitVec::from_support(n, cand);
        if (stabilizers.contains(v)) {
            return;
        }
        if (collect_all || out.empty()) {
            out.push_back(std::move(cand));
        } else if (cand < out[0]) {
            out[0] = std::move(cand);
        }
    };
    auto match_high = [&](std::vector<Support> &out, const Support &high, const std::uint64_t *syn) {
        std::size_t min_high = high.empty() ? n : high.front();
        std::size_t b = hash_words(syn, stride) & (n_buckets - 1);
        while (buckets[b]) {
            std::size_t i = buckets[b] - 1;
            b = (b + 1) & (n_buckets - 1);
            if (!std::equal(syn, syn + stride, &low_syn[i * stride])) {
                continue;
            }
            if (low_size > 0 && low_max[i] >= min_high) {
                continue;
            }
            Support cand(low_elems.begin() + static_cast<std::ptrdiff_t>(i * low_size),
                         low_elems.begin() + static_cast<std::ptrdiff_t>((i + 1) * low_size));
            cand.insert(cand.end(), high.begin(), high.end());
            consider(out, std::move(cand));
        }
    };

    if (high_size == 0) {
        std::vector<std::uint64_t> zero(stride, 0);
        match_high(per_worker[0], Support{}, zero.data());
    } else {
        auto run = [&](std::size_t tid) {
            std::vector<std::size_t> mine;
            for (std::size_t i = tid; i < firsts.size(); i += workers) {
                mine.push_back(firsts[i]);
            }
            std::uint64_t local = 0;
            for_each_subset(cols, high_begin, n, high_size, &mine, [&](const Support &s, const std::uint64_t *syn) {
                match_high(per_worker[tid], s, syn);
                if (budget && (++local & 1023) == 0) {
                    if (high_spent.fetch_add(1024) + 1024 > budget) {
                        stop = true;
                    }
                }
                return !stop.load(std::memory_order_relaxed);
            });
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
    }
    if (stop) {
        result.budget_exceeded = true;
        return result;
    }
    for (auto &part : per_worker) {
        for (auto &s : part) {
            result.found.push_back(std::move(s));
        }
    }
    std::sort(result.found.begin(), result.found.end());
    if (!collect_all && result.found.size() > 1) {
        result.found.resize(1);
    }
    return result;
}

std::vector<BitVec> logical_reps(const BBCode &code, Basis type) {
    LogicalBasis basis = logical_basis(code);
    std::vector<BitVec> out;
    for (const auto &op : type == Basis::X ? basis.x_ops : basis.z_ops) {
        out.push_back(op_to_vec(op));
    }
    return out;
}

/// Minimum weight over every stabilizer + nonzero logical combination, walked
/// in Gray-code order with one word per vector.
DistanceResult coset_distance(const BBCode &code, Basis type, std::size_t w_max) {
    const RowSpace &stab = code.stabilizers_for(type);
    std::vector<std::uint64_t> gens;
    for (const auto &row : stab.basis()) {
        gens.push_back(row.data()[0]);
    }
    std::size_t r = gens.size();
    for (const auto &v : logical_reps(code, type)) {
        gens.push_back(v.data()[0]);
    }
    std::size_t total = gens.size();
    std::uint64_t state = 0;
    std::uint64_t mask = 0;
    std::size_t best = code.n() + 1;
    std::uint64_t best_vec = 0;
    std::uint64_t end = std::uint64_t{1} << total;
    for (std::uint64_t i = 1; i < end; i++) {
        std::size_t bit = static_cast<std::size_t>(std::countr_zero(i));
        state ^= gens[bit];
        mask ^= std::uint64_t{1} << bit;
        if ((mask >> r) == 0) {
            continue;
        }
        std::size_t w = static_cast<std::size_t>(std::popcount(state));
        if (w < best) {
            best = w;
            best_vec = state;
        }
    }
    DistanceResult out;
    out.kind = DistanceKind::Exact;
    out.value = best;
    out.method = DistanceMethod::Coset;
    out.w_max = w_max;
    out.sector = type;
    out.witness = BitVec(code.n());
    out.witness.data()[0] = best_vec;
    return out;
}

}  // namespace

DistanceResult sector_distance(const BBCode &code, Basis type, const DistanceOptions &options) {
    if (options.w_max == 0) {
        throw RefusalError("w_max must be at least 1");
    }
    if (code.k() == 0) {
        throw RefusalError("code has k = 0, so its distance is undefined");
    }
    std::size_t n = code.n();
    std::size_t r = code.stabilizers_for(type).rank();
    if (options.allow_coset && n <= 64 && r <= 16 && code.k() <= 12) {
        return coset_distance(code, type, options.w_max);
    }
    ColumnSyndromes cols(code.check_for(type));
    const RowSpace &stab = code.stabilizers_for(type);
    std::size_t w_max = std::min(options.w_max, n);
    DistanceResult out;
    out.method = DistanceMethod::Enumeration;
    out.w_max = options.w_max;
    out.sector = type;
    for (std::size_t w = 1; w <= w_max; w++) {
        std::vector<Support> hits;
        bool exceeded = false;
        auto take = [&](WeightSearchResult res) {
            exceeded |= res.budget_exceeded;
            for (auto &s : res.found) {
                hits.push_back(std::move(s));
            }
        };
        if (options.use_shift_symmetry) {
            take(search_weight(cols, stab, n, w, 0, true, false, options.workers, options.budget));
            if (!exceeded) {
                take(search_weight(cols, stab, n, w, code.half(), true, false, options.workers, options.budget));
            }
        } else {
            take(search_weight(cols, stab, n, w, 0, false, false, options.workers, options.budget));
        }
        if (exceeded) {
            out.kind = DistanceKind::LowerBoundInterval;
            out.value = w;
            return out;
        }
        if (!hits.empty()) {
            std::sort(hits.begin(), hits.end());
            out.kind = DistanceKind::Exact;
            out.value = w;
            out.witness = BitVec::from_support(n, hits.front());
            return out;
        }
    }
    out.kind = DistanceKind::LowerBoundInterval;
    out.value = w_max + 1;
    return out;
}

DistanceResult exact_distance(const BBCode &code, const DistanceOptions &options) {
    return sector_distance(code, Basis::Z, options);
}

DistanceResult exact_distance(const BBCode &code, std::size_t w_max) {
    DistanceOptions options;
    options.w_max = w_max;
    return exact_distance(code, options);
}

std::optional<bool> verify_dx_equals_dz(const BBCode &code, const DistanceOptions &options) {
    DistanceResult dz = sector_distance(code, Basis::Z, options);
    DistanceResult dx = sector_distance(code, Basis::X, options);
    if (!dz.exact() || !dx.exact()) {
        return std::nullopt;
    }
    return dz.value == dx.value;
}

DistanceResult sampled_upper_bound(const BBCode &code, Basis type, std::size_t iterations, std::uint64_t seed) {
    if (code.k() == 0) {
        throw RefusalError("code has k = 0, so its distance is undefined");
    }
    std::size_t n = code.n();
    BinMatrix kernel = kernel_basis(code.check_for(type));
    const RowSpace &stab = code.stabilizers_for(type);
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    DistanceResult out;
    out.kind = DistanceKind::LowerBoundInterval;
    out.value = 1;
    out.method = DistanceMethod::InformationSet;
    out.sector = type;
    for (std::size_t it = 0; it < iterations; it++) {
        std::shuffle(order.begin(), order.end(), rng);
        // column j of the permuted matrix is column order[j] of the kernel
        std::vector<BitVec> permuted;
        permuted.reserve(kernel.n_rows());
        for (const BitVec &row : kernel.rows()) {
            BitVec p(n);
            for (std::size_t j = 0; j < n; j++) {
                if (row.get(order[j])) {
                    p.set(j);
                }
            }
            permuted.push_back(std::move(p));
        }
        RowSpace reduced{BinMatrix(n, std::move(permuted))};
        for (const BitVec &row : reduced.basis()) {
            std::size_t w = row.popcount();
            if (out.kind == DistanceKind::UpperBound && w >= out.value) {
                continue;
            }
            BitVec v(n);
            for (std::size_t j : row.support()) {
                v.set(order[j]);
            }
            if (!stab.contains(v)) {
                out.kind = DistanceKind::UpperBound;
                out.value = w;
                out.witness = std::move(v);
            }
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> min_weight_logicals(const BBCode &code, Basis type, std::size_t w) {
    ColumnSyndromes cols(code.check_for(type));
    return search_weight(cols, code.stabilizers_for(type), code.n(), w, 0, false, true, 1, 0).found;
}

}  // namespace bbcover
