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

#include "bbcover/poly.h"

#include <algorithm>
#include <cctype>

#include "bbcover/errors.h"

namespace bbcover {

std::string RingContext::to_string() const {
    return "l=" + std::to_string(l) + " m=" + std::to_string(m);
}

Monomial make_monomial(const RingContext &ctx, std::int64_t a, std::int64_t b) {
    auto wrap = [](std::int64_t v, std::size_t n) {
        std::int64_t nn = static_cast<std::int64_t>(n);
        return static_cast<std::size_t>(((v % nn) + nn) % nn);
    };
    return Monomial{wrap(a, ctx.l), wrap(b, ctx.m)};
}

std::size_t monomial_index(const RingContext &ctx, Monomial mono) {
    return mono.a * ctx.m + mono.b;
}

Monomial monomial_at(const RingContext &ctx, std::size_t index) {
    return Monomial{index / ctx.m, index % ctx.m};
}

Poly::Poly(const RingContext &ctx, const std::vector<Monomial> &terms) : ctx_(ctx) {
    std::vector<Monomial> sorted = terms;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) {
            j++;
        }
        if ((j - i) % 2 == 1) {
            if (sorted[i].a >= ctx.l || sorted[i].b >= ctx.m) {
                throw RefusalError("monomial x^" + std::to_string(sorted[i].a) + "y^" + std::to_string(sorted[i].b) +
                                   " not reduced for " + ctx.to_string());
            }
            terms_.push_back(sorted[i]);
        }
        i = j;
    }
}

bool Poly::contains(Monomial mono) const {
    return std::binary_search(terms_.begin(), terms_.end(), mono);
}

void Poly::toggle(Monomial mono) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mono);
    if (it != terms_.end() && *it == mono) {
        terms_.erase(it);
    } else {
        terms_.insert(it, mono);
    }
}

Monomial mono_mul(Monomial p, Monomial q, const RingContext &ctx) {
    return Monomial{(p.a + q.a) % ctx.l, (p.b + q.b) % ctx.m};
}

static void require_same_ring(const Poly &p, const Poly &q) {
    if (!(p.ctx() == q.ctx())) {
        throw RefusalError("polynomials live in different rings: " + p.ctx().to_string() + " vs " +
                           q.ctx().to_string());
    }
}

Poly poly_add(const Poly &p, const Poly &q) {
    require_same_ring(p, q);
    std::vector<Monomial> terms = p.terms();
    terms.insert(terms.end(), q.terms().begin(), q.terms().end());
    return Poly(p.ctx(), terms);
}

Poly poly_mul(const Poly &p, const Poly &q) {
    require_same_ring(p, q);
    std::vector<Monomial> terms;
    terms.reserve(p.size() * q.size());
    for (Monomial s : p.terms()) {
        for (Monomial t : q.terms()) {
            terms.push_back(mono_mul(s, t, p.ctx()));
        }
    }
    return Poly(p.ctx(), terms);
}

Poly poly_shift(const Poly &p, Monomial mono) {
    std::vector<Monomial> terms;
    for (Monomial s : p.terms()) {
        terms.push_back(mono_mul(s, mono, p.ctx()));
    }
    return Poly(p.ctx(), terms);
}

Poly poly_transpose(const Poly &p) {
    std::vector<Monomial> terms;
    for (Monomial s : p.terms()) {
        terms.push_back(make_monomial(p.ctx(), -static_cast<std::int64_t>(s.a), -static_cast<std::int64_t>(s.b)));
    }
    return Poly(p.ctx(), terms);
}

BinMatrix poly_to_matrix(const Poly &p) {
    const RingContext &ctx = p.ctx();
    std::size_t n = ctx.size();
    BinMatrix out(n, n);
    for (std::size_t r = 0; r < n; r++) {
        Monomial row = monomial_at(ctx, r);
        for (Monomial t : p.terms()) {
            out.flip(r, monomial_index(ctx, mono_mul(row, t, ctx)));
        }
    }
    return out;
}

BitVec poly_to_vec(const Poly &p) {
    BitVec out(p.ctx().size());
    for (Monomial t : p.terms()) {
        out.set(monomial_index(p.ctx(), t));
    }
    return out;
}

Poly poly_from_vec(const RingContext &ctx, const BitVec &v) {
    if (v.size() != ctx.size()) {
        throw RefusalError("vector of length " + std::to_string(v.size()) + " does not match ring " + ctx.to_string());
    }
    std::vector<Monomial> terms;
    for (std::size_t j : v.support()) {
        terms.push_back(monomial_at(ctx, j));
    }
    return Poly(ctx, terms);
}

namespace {

class PolyParser {
   public:
    PolyParser(std::string_view text, const RingContext &ctx) : text_(text), ctx_(ctx) {
    }

    Poly parse() {
        std::vector<Monomial> terms;
        skip_space();
        if (at_end()) {
            throw ParseError("empty polynomial", pos_);
        }
        while (true) {
            parse_term(terms);
            skip_space();
            if (at_end()) {
                break;
            }
            if (text_[pos_] != '+') {
                throw ParseError(std::string("expected '+' but found '") + text_[pos_] + "'", pos_);
            }
            pos_++;
        }
        return Poly(ctx_, terms);
    }

   private:
    bool at_end() const {
        return pos_ >= text_.size();
    }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }
    char peek() {
        skip_space();
        return at_end() ? '\0' : text_[pos_];
    }

    std::int64_t parse_exponent() {
        if (peek() != '^') {
            return 1;
        }
        pos_++;
        skip_space();
        if (!at_end() && text_[pos_] == '-') {
            throw ParseError("negative exponent", pos_);
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw ParseError("expected exponent after '^'", pos_);
        }
        std::int64_t value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > (std::int64_t{1} << 40)) {
                throw ParseError("exponent too large", pos_);
            }
            pos_++;
        }
        return value;
    }

    void parse_term(std::vector<Monomial> &terms) {
        char c = peek();
        if (c == '0' || c == '1') {
            pos_++;
            if (c == '1') {
                terms.push_back(Monomial{0, 0});
            }
            return;
        }
        std::int64_t a = 0;
        std::int64_t b = 0;
        bool any = false;
        if (c == 'x') {
            pos_++;
            a = parse_exponent();
            any = true;
            if (peek() == '*') {
                pos_++;
                if (peek() != 'y') {
                    throw ParseError("expected 'y' after '*'", pos_);
                }
            }
            c = peek();
        }
        if (c == 'y') {
            pos_++;
            b = parse_exponent();
            any = true;
        }
        if (!any) {
            if (at_end()) {
                throw ParseError("expected a term", pos_);
            }
            throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        }
        terms.push_back(make_monomial(ctx_, a, b));
    }

    std::string_view text_;
    RingContext ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingContext &ctx) {
    return PolyParser(text, ctx).parse();
}

Monomial parse_monomial(std::string_view text, const RingContext &ctx) {
    Poly p = parse_poly(text, ctx);
    if (p.size() != 1) {
        throw ParseError("expected a single monomial", 0);
    }
    return p.terms()[0];
}

std::string render(Monomial mono) {
    if (mono.a == 0 && mono.b == 0) {
        return "1";
    }
    std::string out;
    if (mono.a > 0) {
        out += "x";
        if (mono.a > 1) {
            out += "^" + std::to_string(mono.a);
        }
    }
    if (mono.b > 0) {
        out += "y";
        if (mono.b > 1) {
            out += "^" + std::to_string(mono.b);
        }
    }
    return out;
}

std::string render(const Poly &p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < p.terms().size(); i++) {
        if (i) {
            out += "+";
        }
        out += render(p.terms()[i]);
    }
    return out;
}

}  // namespace bbcover
