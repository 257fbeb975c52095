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

#include "lsa/affine.hpp"

namespace lsa {

AffineMatrix::AffineMatrix(Matrix m) : mat_(std::move(m)) {
    if (!mat_.isSquare() || mat_.rows() < 1)
        throw std::invalid_argument("AffineMatrix: needs a square matrix of size >= 1");
    for (int c = 0; c < mat_.cols(); ++c)
        if (!mat_.at(mat_.rows() - 1, c).isZero())
            throw std::invalid_argument("AffineMatrix: last row must be zero");
}

AffineMatrix AffineMatrix::fromParts(const Matrix& linear, const Vec& translation) {
    if (!linear.isSquare() || static_cast<int>(translation.size()) != linear.rows())
        throw std::invalid_argument("AffineMatrix: part shapes mismatch");
    int n = linear.rows();
    Matrix m(n + 1, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = linear.at(i, j);
        m.at(i, n) = translation[static_cast<size_t>(i)];
    }
    return AffineMatrix(std::move(m));
}

Matrix AffineMatrix::linearPart() const {
    int n = dim();
    Matrix l(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) l.at(i, j) = mat_.at(i, j);
    return l;
}

Vec AffineMatrix::translationPart() const {
    int n = dim();
    Vec t(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) t[static_cast<size_t>(i)] = mat_.at(i, n);
    return t;
}

AffineMatrix affineRep(const Algebra& a, const Vec& x) {
    requireLeftSymmetric(a, "affineRep");
    return AffineMatrix::fromParts(a.leftMul(x), x);
}

bool affineHomOnBasis(const Algebra& a) {
    const int n = a.dim();
    auto aff = [&](const Vec& x) {
        return AffineMatrix::fromParts(a.leftMul(x), x).matrix();
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec bracket = vecSub(a.basisProduct(i, j), a.basisProduct(j, i));
            Matrix lhs = aff(bracket);
            Matrix ai = aff(unitVec(n, i)), aj = aff(unitVec(n, j));
            if (!(lhs == ai * aj - aj * ai)) return false;
        }
    return true;
}

Matrix expNilpotent(const Matrix& m) {
    if (!m.isSquare()) throw std::invalid_argument("expNilpotent: not square");
    if (!m.isNilpotent()) throw std::invalid_argument("expNilpotent: matrix is not nilpotent");
    int n = m.rows();
    Matrix acc = Matrix::identity(n);
    Matrix power = Matrix::identity(n);
    Scalar factorial(1);
    for (int k = 1; k <= n; ++k) {
        power = power * m;
        if (power.isZero()) break;
        factorial *= Scalar(k);
        acc = acc + factorial.inverse() * power;
    }
    return acc;
}

bool derivedActsByTranslations(const Algebra& a) {
    requireLeftSymmetric(a, "derivedActsByTranslations");
    const int n = a.dim();
    Subspace derived =
        LieBracket::commutatorOf(a).bracketSpan(Subspace::whole(n), Subspace::whole(n));
    bool translations = true;
    for (int r = 0; r < derived.dim() && translations; ++r)
        if (!a.leftMul(derived.basisVector(r)).isZero()) translations = false;
    if (translations != identityProfile(a).id4)
        throw InternalConsistencyError(
            "derivedActsByTranslations: disagrees with the (4) identity");
    return translations;
}

}  // namespace lsa
