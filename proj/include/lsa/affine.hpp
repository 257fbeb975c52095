/*
   Copyright 2026 The lsakit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LSAKIT_AFFINE_HPP
#define LSAKIT_AFFINE_HPP

#include "lsa/lie.hpp"

namespace lsa {

/// (n+1)x(n+1) matrix in the block form [[L, t], [0, 0]]: linear part L and
/// translation part t, last row zero.
class AffineMatrix {
public:
    explicit AffineMatrix(Matrix m);
    static AffineMatrix fromParts(const Matrix& linear, const Vec& translation);

    const Matrix& matrix() const { return mat_; }
    int dim() const { return mat_.rows() - 1; }  // dimension of the acted-on space
    Matrix linearPart() const;
    Vec translationPart() const;

    friend bool operator==(const AffineMatrix& a, const AffineMatrix& b) {
        return a.mat_ == b.mat_;
    }

private:
    Matrix mat_;
};

/// x -> [[L_x, x], [0, 0]]. A Lie-algebra homomorphism into affine matrices
/// for left-symmetric algebras (errors otherwise).
AffineMatrix affineRep(const Algebra& a, const Vec& x);

/// Does aff([x,y]) = aff(x)aff(y) - aff(y)aff(x) hold on all basis pairs?
/// No left-symmetry precondition: this is the property that singles the
/// left-symmetric algebras out.
bool affineHomOnBasis(const Algebra& a);

/// Exact exp(M) = sum M^k / k! for a nilpotent matrix (errors otherwise).
Matrix expNilpotent(const Matrix& m);

/// True iff L_x vanishes on [A,A], i.e. the derived part acts by pure
/// translations; equivalent to the (4) identity (cross-checked).
bool derivedActsByTranslations(const Algebra& a);

}  // namespace lsa

#endif
