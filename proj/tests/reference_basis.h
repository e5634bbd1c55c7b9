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

#ifndef BBCOVER_TESTS_REFERENCE_BASIS_H
#define BBCOVER_TESTS_REFERENCE_BASIS_H

#include "bbcover/bb_code.h"

namespace testdata {

/// The hand-written logical basis of the 18-qubit code with f = 1+x and
/// g = 1+y: x ops [X(r_i f|0) ; X(0|r'_i g)], z ops [Z(r'_i g|0) ; Z(0|r_i f)].
inline bbcover::LogicalBasis reference_basis_18(const bbcover::BBCode &code) {
    using namespace bbcover;
    const RingContext &ctx = code.ctx();
    Poly f = parse_poly("1+x", ctx), g = parse_poly("1+y", ctx), zero(ctx);
    const char *r[] = {"1", "y^2", "x", "xy^2"};
    const char *rp[] = {"1", "y", "x^2", "x^2y"};
    LogicalBasis b;
    for (int i = 0; i < 4; i++) {
        b.x_ops.push_back(make_op(Basis::X, poly_mul(parse_poly(r[i], ctx), f), zero));
        b.z_ops.push_back(make_op(Basis::Z, poly_mul(parse_poly(rp[i], ctx), g), zero));
    }
    for (int i = 0; i < 4; i++) {
        b.x_ops.push_back(make_op(Basis::X, zero, poly_mul(parse_poly(rp[i], ctx), g)));
        b.z_ops.push_back(make_op(Basis::Z, zero, poly_mul(parse_poly(r[i], ctx), f)));
    }
    return b;
}

}  // namespace testdata

#endif
