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

#include <gtest/gtest.h>

#include <random>

#include "bbcover/automorphism.h"
#include "bbcover/distance.h"
#include "bbcover/errors.h"
#include "oracles.h"
#include "reference_basis.h"

using namespace bbcover;

namespace {

BBCode base18() {
    return build_code("1+y+y^2", "1+x+x^2", 3, 3);
}
BBCode c54() {
    return build_code("x^3+y+y^2", "1+x+x^2", 9, 3);
}

/// Applies the qubit permutation to a support vector.
BitVec permute(const std::vector<std::size_t> &f, const BitVec &v) {
    BitVec out(v.size());
    for (std::size_t i : v.support()) {
        out.set(f[i]);
    }
    return out;
}

}  // namespace

TEST(Automorphism, IdentityAndShifts) {
    std::mt19937_64 rng(9);
    for (BBCode c : {base18(), build_code("x^3+y+y^2", "y^3+x+x^2", 6, 6), build_code("1+x^2+x^3y", "1+x^2+x^3y^2", 7, 3)}) {
        EXPECT_TRUE(verify_automorphism(c, identity_automorphism(c)));
        LogicalBasis b = logical_basis(c);
        LogicalAction id = logical_action(c, identity_automorphism(c), b);
        EXPECT_TRUE(id.ax.is_identity());
        EXPECT_TRUE(id.az.is_identity());
        for (int i = 0; i < 5; i++) {
            Monomial r{rng() % c.ctx().l, rng() % c.ctx().m};
            CodeAutomorphism s = shift_automorphism(c, r);
            EXPECT_TRUE(verify_automorphism(c, s)) << render(r);
            LogicalAction a = logical_action(c, s, b);
            EXPECT_TRUE(mat_mul(a.ax, transpose(a.az)).is_identity());
        }
    }
}

TEST(Automorphism, ExampleCnotVerifiesAndPreservesDistance) {
    BBCode c = base18();
    CodeAutomorphism aut = example_cnot_automorphism(c);
    EXPECT_TRUE(verify_automorphism(c, aut));
    // relabelled checks give the same distance (oracle on the permuted checks)
    BinMatrix f = aut.f_matrix();
    BinMatrix hx2 = mat_mul(c.hx(), transpose(f)), hz2 = mat_mul(c.hz(), transpose(f));
    EXPECT_EQ(oracle::distance(hx2, hz2), oracle::distance(c.hx(), c.hz()));
}

TEST(Automorphism, BrokenMapRejected) {
    BBCode c = base18();
    CodeAutomorphism aut = identity_automorphism(c);
    std::swap(aut.f[0], aut.f[1]);
    EXPECT_FALSE(verify_automorphism(c, aut));
    EXPECT_NE(automorphism_failure(c, aut), "");
}

TEST(Automorphism, CnotActionInHandBasis) {
    BBCode c = base18();
    LogicalBasis b = testdata::reference_basis_18(c);
    LogicalAction a = logical_action(c, example_cnot_automorphism(c), b);
    LogicalAction want = cnot_circuit_action(8, {{0, 1}, {2, 3}, {5, 4}, {7, 6}});
    EXPECT_EQ(a.ax, want.ax);
    EXPECT_EQ(a.az, want.az);
}

TEST(Automorphism, CnotCircuitAction) {
    LogicalAction a = cnot_circuit_action(2, {{0, 1}});
    // X_0 -> X_0 X_1, Z_1 -> Z_0 Z_1
    EXPECT_EQ(a.ax.row(0).support(), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(a.ax.row(1).support(), (std::vector<std::size_t>{1}));
    EXPECT_EQ(a.az.row(1).support(), (std::vector<std::size_t>{0, 1}));
    EXPECT_TRUE(mat_mul(a.ax, transpose(a.az)).is_identity());
    EXPECT_THROW(cnot_circuit_action(2, {{0, 0}}), RefusalError);
}

TEST(Automorphism, ZxDualityAction) {
    BBCode c = base18();
    CodeAutomorphism zx = block_swap_duality(c);
    EXPECT_TRUE(verify_automorphism(c, zx));
    LogicalAction a = logical_action(c, zx, testdata::reference_basis_18(c));
    BinMatrix swap = BinMatrix::permutation({4, 5, 6, 7, 0, 1, 2, 3});
    EXPECT_EQ(a.ax, swap);
    EXPECT_EQ(a.az, swap);
    // the images really are the named Z operators
    LogicalBasis b = testdata::reference_basis_18(c);
    EXPECT_EQ(permute(zx.f, op_to_vec(b.x_ops[0])), op_to_vec(b.z_ops[4]));
}

TEST(Automorphism, LiftsToTripleCover) {
    CoverWitness w = require_cover(base18(), c54());
    CodeAutomorphism aut = example_cnot_automorphism(base18());
    CodeAutomorphism lifted = lift_automorphism(w, aut);
    EXPECT_TRUE(verify_automorphism(c54(), lifted));
    EXPECT_EQ(intertwining_failure(w, aut, lifted), "");
    ActionComparison cmp = compare_base_and_lifted_action(w, aut, lifted, testdata::reference_basis_18(base18()));
    EXPECT_TRUE(cmp.equal);

    CodeAutomorphism id = lift_automorphism(w, identity_automorphism(base18()));
    EXPECT_EQ(id.f, identity_automorphism(c54()).f);

    CodeAutomorphism zx = block_swap_duality(base18());
    CodeAutomorphism zx_lift = lift_automorphism(w, zx);
    EXPECT_EQ(intertwining_failure(w, zx, zx_lift), "");
    EXPECT_TRUE(compare_base_and_lifted_action(w, zx, zx_lift, testdata::reference_basis_18(base18())).equal);
}

TEST(Automorphism, ComparisonRefusedForEvenH) {
    BBCode c36 = build_code("x^3+y+y^2", "1+x+x^2", 6, 3);
    CoverWitness w = require_cover(base18(), c36);
    CodeAutomorphism id = identity_automorphism(base18());
    EXPECT_THROW(compare_base_and_lifted_action(w, id, lift_automorphism(w, id), logical_basis(base18())),
                 RefusalError);
}

TEST(Automorphism, JsonRoundTrip) {
    BBCode c = base18();
    for (const char *name : {"identity", "example-5-cnot", "example-5-zx", "shift:xy^2"}) {
        CodeAutomorphism a = builtin_automorphism(c, name);
        CodeAutomorphism b = parse_automorphism_json(c, automorphism_to_json(a));
        EXPECT_EQ(a.f, b.f);
        EXPECT_EQ(a.w_x, b.w_x);
        EXPECT_EQ(a.w_z, b.w_z);
        EXPECT_EQ(a.kind, b.kind);
    }
    EXPECT_THROW(builtin_automorphism(c, "nope"), RefusalError);
    EXPECT_THROW(parse_automorphism_json(c, "{\"kind\": 1"), ParseError);
}
