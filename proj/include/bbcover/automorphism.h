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

#ifndef BBCOVER_AUTOMORPHISM_H
#define BBCOVER_AUTOMORPHISM_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bbcover/bb_code.h"
#include "bbcover/cover.h"

namespace bbcover {

enum class AutKind { General, Tanner, ZXDuality };
std::string aut_kind_name(AutKind kind);

/// A qubit permutation f (qubit i -> f[i], matrix F e_i = e_{f[i]}) with check
/// maps W_X, W_Z.
///
/// For General and Tanner kinds the identities are
///   W_X H_X == H_X F        H_Z^T W_Z == F H_Z^T
/// and for ZXDuality (F exchanges the X and Z sectors)
///   W_X H_X == H_Z F        H_X^T W_Z == F H_Z^T.
struct CodeAutomorphism {
    AutKind kind = AutKind::General;
    std::vector<std::size_t> f;
    BinMatrix w_x;
    BinMatrix w_z;

    BinMatrix f_matrix() const {
        return BinMatrix::permutation(f);
    }
};

CodeAutomorphism identity_automorphism(const BBCode &code);
/// Qubit (block, c) -> (block, c r); W_X = W_Z = the same shift on checks.
CodeAutomorphism shift_automorphism(const BBCode &code, Monomial r);
/// Per block: x^a y^b -> x^a y^(1-b). On the 3x3 lattice this swaps
/// y^0 and y^1 inside every x^a and fixes y^2.
CodeAutomorphism example_cnot_automorphism(const BBCode &code);
/// Exchange of the left and right blocks, W_X = W_Z = I.
CodeAutomorphism block_swap_duality(const BBCode &code);

/// Built-ins "identity", "example-5-cnot", "example-5-zx", "shift:<monomial>".
CodeAutomorphism builtin_automorphism(const BBCode &code, std::string_view name);
/// JSON {kind, f, w_x, w_z}; w_x and w_z are lists of hex rows (BitVec::to_hex).
CodeAutomorphism parse_automorphism_json(const BBCode &code, std::string_view text);
std::string automorphism_to_json(const CodeAutomorphism &aut);

/// Empty string when the identities hold, else which one fails.
std::string automorphism_failure(const BBCode &code, const CodeAutomorphism &aut);
bool verify_automorphism(const BBCode &code, const CodeAutomorphism &aut);

/// Action on logical classes. Row i of ax holds the coordinates of F x_i,
/// row i of az those of F z_i. For a ZX-duality F x_i is Z-type and is read
/// in Z coordinates (and vice versa). Pairing is preserved iff ax az^T = I.
struct LogicalAction {
    BinMatrix ax;
    BinMatrix az;
};

/// Throws InvariantError if some F x_i or F z_i leaves the kernel.
LogicalAction logical_action(const BBCode &code, const CodeAutomorphism &aut, const LogicalBasis &basis);

/// Symplectic action of a CNOT circuit on k qubits: CNOT(c, t) sends
/// X_c -> X_c X_t and Z_t -> Z_c Z_t. Gates are 0-indexed (control, target)
/// pairs applied left to right.
LogicalAction cnot_circuit_action(std::size_t k, const std::vector<std::pair<std::size_t, std::size_t>> &gates);

/// Fiber-wise lift: cover qubit (block, c~) with base image c and sheet g goes
/// to (block', f(c), g); W~ = W on every sheet. Throws RefusalError when the
/// intertwining identities p f~ == f p (qubits and both check spaces) or
/// f~ tau == tau f fail.
CodeAutomorphism lift_automorphism(const CoverWitness &witness, const CodeAutomorphism &aut);

/// Empty string when p f~ == f p and f~ tau == tau f hold in every degree.
std::string intertwining_failure(const CoverWitness &witness, const CodeAutomorphism &base_aut,
                                 const CodeAutomorphism &lifted);

/// The base basis pushed through tau (valid for odd h with k_h = k).
LogicalBasis lift_basis(const CoverWitness &witness, const LogicalBasis &base_basis);

struct ActionComparison {
    LogicalAction base;
    LogicalAction lifted;
    bool equal = false;
};

/// Base action in base_basis versus lifted action in lift_basis(base_basis).
/// Refuses unless h is odd and k_h == k.
ActionComparison compare_base_and_lifted_action(const CoverWitness &witness, const CodeAutomorphism &aut,
                                                const CodeAutomorphism &lifted, const LogicalBasis &base_basis);

}  // namespace bbcover

#endif
