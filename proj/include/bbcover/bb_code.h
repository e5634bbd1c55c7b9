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

#ifndef BBCOVER_BB_CODE_H
#define BBCOVER_BB_CODE_H

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bbcover/gf2_matrix.h"
#include "bbcover/poly.h"

namespace bbcover {

enum class Basis { X, Z };

std::string basis_name(Basis basis);

/// A bivariate bicycle code Q(A, B, l, m).
///
/// Qubits 0..lm-1 form the left block and lm..2lm-1 the right block.
///   hx = [M(A) | M(B)]     (row r = support of the X check r*A, r*B)
///   hz = [M(B^T) | M(A^T)] (row r = support of the Z check r*B^T, r*A^T)
class BBCode {
   public:
    const RingContext &ctx() const {
        return ctx_;
    }
    const Poly &A() const {
        return a_;
    }
    const Poly &B() const {
        return b_;
    }
    const BinMatrix &hx() const {
        return hx_;
    }
    const BinMatrix &hz() const {
        return hz_;
    }
    std::size_t n() const {
        return 2 * ctx_.size();
    }
    std::size_t half() const {
        return ctx_.size();
    }
    /// Row space of hx (the X stabilizer group).
    const RowSpace &x_stabilizers() const {
        return *x_stab_;
    }
    /// Row space of hz (the Z stabilizer group).
    const RowSpace &z_stabilizers() const {
        return *z_stab_;
    }
    std::size_t k() const {
        return k_;
    }

    /// The matrix whose kernel holds the `basis`-type logicals: hz for X, hx for Z.
    const BinMatrix &check_for(Basis basis) const {
        return basis == Basis::X ? hz_ : hx_;
    }
    const RowSpace &stabilizers_for(Basis basis) const {
        return basis == Basis::X ? *x_stab_ : *z_stab_;
    }

    friend BBCode build_code(const Poly &A, const Poly &B);

   private:
    RingContext ctx_;
    Poly a_;
    Poly b_;
    BinMatrix hx_;
    BinMatrix hz_;
    std::shared_ptr<const RowSpace> x_stab_;
    std::shared_ptr<const RowSpace> z_stab_;
    std::size_t k_ = 0;
};

/// Builds Q(A, B, l, m) with (l, m) taken from the polynomials' ring.
/// Throws RefusalError for empty polynomials or mismatched rings, and
/// InvariantError if hx hz^T != 0 or rank(hx) != rank(hz).
BBCode build_code(const Poly &A, const Poly &B);
BBCode build_code(std::string_view A, std::string_view B, std::size_t l, std::size_t m);

/// n - 2 rank(hz).
std::size_t code_k(const BBCode &code);

/// `l=<uint> m=<uint> A=<poly> B=<poly>`; fields may come in any order.
BBCode parse_code_spec(std::string_view text);
std::string render_code_spec(const BBCode &code);

/// A Pauli operator of a single type, given by its left and right block polynomials.
struct PauliOp {
    Basis basis = Basis::X;
    Poly left;
    Poly right;

    bool operator==(const PauliOp &) const = default;
    std::size_t weight() const {
        return left.size() + right.size();
    }
};

PauliOp make_op(Basis basis, const Poly &left, const Poly &right);
BitVec op_to_vec(const PauliOp &op);
PauliOp op_from_vec(const RingContext &ctx, Basis basis, const BitVec &v);
/// `X(<poly>|<poly>)` or `Z(<poly>|<poly>)`.
PauliOp parse_pauli(std::string_view text, const RingContext &ctx);
std::string render_pauli(const PauliOp &op);

/// X: (r A, r B). Z: (r B^T, r A^T).
PauliOp stabilizer_support(const BBCode &code, Monomial r, Basis basis);

/// X-type ops are measured by hz, Z-type ops by hx.
BitVec syndrome(const BBCode &code, const PauliOp &op);

enum class OpClass { NotInKernel, Stabilizer, NontrivialLogical };
std::string op_class_name(OpClass c);

OpClass classify_op(const BBCode &code, const PauliOp &op);
OpClass classify_vec(const BBCode &code, Basis basis, const BitVec &v);

/// Symplectically paired logical representatives: x_ops[i] anticommutes with
/// z_ops[j] iff i == j.
struct LogicalBasis {
    std::vector<PauliOp> x_ops;
    std::vector<PauliOp> z_ops;

    std::size_t k() const {
        return x_ops.size();
    }
};

/// Deterministic basis. Candidates come from kernel_basis of the check matrix
/// in row order, minus anything already spanned with the stabilizers; the
/// pairs are then formed by symplectic Gram-Schmidt over the X list in order,
/// and representatives are reduced modulo stabilizers.
LogicalBasis logical_basis(const BBCode &code);

/// P[i][j] = overlap parity of x_ops[i] and z_ops[j].
BinMatrix pairing_matrix(const std::vector<PauliOp> &x_ops, const std::vector<PauliOp> &z_ops);

/// Class coordinates of a logical op in `basis`: entry j is the overlap with
/// the partner of the j-th basis op of the same type. Throws RefusalError when
/// the op has nonzero syndrome.
BitVec logical_coordinates(const BBCode &code, const LogicalBasis &basis, const PauliOp &op);
BitVec logical_coordinates(const BBCode &code, const LogicalBasis &basis, Basis type, const BitVec &v);

/// Checks that the listed ops are logicals and pair as the identity; throws
/// RefusalError describing the first failure.
void check_logical_basis(const BBCode &code, const LogicalBasis &basis);

}  // namespace bbcover

#endif
