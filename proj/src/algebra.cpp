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

#include "lsa/algebra.hpp"

namespace lsa {

Algebra::Algebra(int dim, Field field, Vec tensor, std::string name)
    : dim_(dim), field_(field), tensor_(std::move(tensor)), name_(std::move(name)) {
    if (dim < 0) throw std::invalid_argument("Algebra: negative dimension");
    size_t want = static_cast<size_t>(dim) * static_cast<size_t>(dim) * static_cast<size_t>(dim);
    if (tensor_.size() != want)
        throw std::invalid_argument("Algebra: tensor size != dim^3");
    if (field_ == Field::Rational)
        for (const auto& s : tensor_)
            if (!s.isRational())
                throw std::invalid_argument("Algebra: non-rational entry in rational-tagged tensor");
}

Vec Algebra::basisProduct(int i, int j) const {
    Vec v(static_cast<size_t>(dim_));
    for (int k = 0; k < dim_; ++k) v[static_cast<size_t>(k)] = structureConstant(i, j, k);
    return v;
}

Vec Algebra::product(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw std::invalid_argument("Algebra::product: dimension mismatch");
    Vec r(static_cast<size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
        if (x[static_cast<size_t>(i)].isZero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[static_cast<size_t>(j)].isZero()) continue;
            Scalar f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
            for (int k = 0; k < dim_; ++k) {
                const Scalar& c = structureConstant(i, j, k);
                if (!c.isZero()) r[static_cast<size_t>(k)] += f * c;
            }
        }
    }
    return r;
}

Vec Algebra::associator(const Vec& x, const Vec& y, const Vec& z) const {
    return vecSub(product(product(x, y), z), product(x, product(y, z)));
}

Matrix Algebra::leftMul(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("Algebra::leftMul: dimension mismatch");
    Matrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        Vec col = product(x, unitVec(dim_, j));
        for (int k = 0; k < dim_; ++k) m.at(k, j) = col[static_cast<size_t>(k)];
    }
    return m;
}

Matrix Algebra::rightMul(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("Algebra::rightMul: dimension mismatch");
    Matrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        Vec col = product(unitVec(dim_, j), x);
        for (int k = 0; k < dim_; ++k) m.at(k, j) = col[static_cast<size_t>(k)];
    }
    return m;
}

Algebra Algebra::withName(std::string name) const {
    Algebra a = *this;
    a.name_ = std::move(name);
    return a;
}

namespace {

// Commutator of the two operator matrices.
Matrix comm(const Matrix& a, const Matrix& b) { return a * b - b * a; }

struct TripleScan {
    bool holds = true;
    std::optional<std::array<int, 3>> witness;  // 1-based, lexicographically smallest

    void fail(int i, int j, int k) {
        if (holds) {
            holds = false;
            witness = {i + 1, j + 1, k + 1};
        }
    }
};

}  // namespace

IdentityProfile identityProfile(const Algebra& a) {
    const int n = a.dim();
    IdentityProfile p;

    TripleScan ls, nov, der, id4, assoc;
    bool comm2 = true;
    std::optional<std::pair<int, int>> comm2Witness;

    // Cache basis products and associators.
    std::vector<std::vector<Vec>> prod(static_cast<size_t>(n),
                                       std::vector<Vec>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) prod[static_cast<size_t>(i)][static_cast<size_t>(j)] = a.basisProduct(i, j);

    auto productOf = [&](const Vec& x, int j) { return a.product(x, unitVec(n, j)); };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!vecIsZero(vecSub(prod[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                  prod[static_cast<size_t>(j)][static_cast<size_t>(i)])) &&
                comm2) {
                comm2 = false;
                comm2Witness = {i + 1, j + 1};
            }
            for (int k = 0; k < n; ++k) {
                Vec ij_k = productOf(prod[static_cast<size_t>(i)][static_cast<size_t>(j)], k);
                Vec i_jk = a.product(unitVec(n, i), prod[static_cast<size_t>(j)][static_cast<size_t>(k)]);
                Vec asc = vecSub(ij_k, i_jk);  // (e_i, e_j, e_k)
                if (!vecIsZero(asc)) assoc.fail(i, j, k);

                Vec ji_k = productOf(prod[static_cast<size_t>(j)][static_cast<size_t>(i)], k);
                Vec j_ik = a.product(unitVec(n, j), prod[static_cast<size_t>(i)][static_cast<size_t>(k)]);
                // (e_i,e_j,e_k) == (e_j,e_i,e_k)
                if (!vecIsZero(vecSub(asc, vecSub(ji_k, j_ik)))) ls.fail(i, j, k);

                Vec ik_j = productOf(prod[static_cast<size_t>(i)][static_cast<size_t>(k)], j);
                if (!vecIsZero(vecSub(ij_k, ik_j))) nov.fail(i, j, k);

                Vec kj_i = productOf(prod[static_cast<size_t>(k)][static_cast<size_t>(j)], i);
                if (!vecIsZero(vecSub(ij_k, kj_i))) der.fail(i, j, k);

                if (!vecIsZero(vecSub(ij_k, ji_k))) id4.fail(i, j, k);
            }
        }

    p.leftSymmetric = ls.holds;
    p.leftSymmetricWitness = ls.witness;
    p.novikov = nov.holds;
    p.novikovWitness = nov.witness;
    p.derivation = der.holds;
    p.derivationWitness = der.witness;
    p.id4 = id4.holds;
    p.id4Witness = id4.witness;
    p.associative = assoc.holds;
    p.associativeWitness = assoc.witness;
    p.commutative = comm2;
    p.commutativeWitness = comm2Witness;

    // Operator-form cross-checks on basis pairs. Each elementwise identity has
    // an equivalent formulation in terms of L/R; any disagreement is a bug.
    std::vector<Matrix> L, R;
    L.reserve(static_cast<size_t>(n));
    R.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        L.push_back(a.leftMulBasis(i));
        R.push_back(a.rightMulBasis(i));
    }
    bool opLS1a = true, opLS1b = true, opNov2a = true, opNov2b = true, opDer3a = true,
         opId4a = true, opId4b = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec pij = a.basisProduct(i, j);
            Vec bracket = vecSub(pij, a.basisProduct(j, i));
            if (!(comm(L[static_cast<size_t>(i)], L[static_cast<size_t>(j)]) == a.leftMul(bracket)))
                opLS1a = false;
            if (!(comm(L[static_cast<size_t>(i)], R[static_cast<size_t>(j)]) ==
                  a.rightMul(pij) - R[static_cast<size_t>(j)] * R[static_cast<size_t>(i)]))
                opLS1b = false;
            if (!comm(R[static_cast<size_t>(i)], R[static_cast<size_t>(j)]).isZero()) opNov2a = false;
            if (!(a.leftMul(pij) == R[static_cast<size_t>(j)] * L[static_cast<size_t>(i)]))
                opNov2b = false;
            if (!(a.leftMul(pij) == R[static_cast<size_t>(i)] * R[static_cast<size_t>(j)]))
                opDer3a = false;
            if (!a.leftMul(bracket).isZero()) opId4a = false;
            if (!comm(L[static_cast<size_t>(i)], L[static_cast<size_t>(j)]).isZero()) opId4b = false;
        }
    if (opLS1a != p.leftSymmetric || opLS1b != p.leftSymmetric)
        throw InternalConsistencyError("identityProfile: left-symmetry vs operator form");
    if (opNov2a != p.novikov || opNov2b != p.novikov)
        throw InternalConsistencyError("identityProfile: Novikov identity vs operator form");
    if (opDer3a != p.derivation)
        throw InternalConsistencyError("identityProfile: derivation identity vs operator form");
    if (opId4a != p.id4)
        throw InternalConsistencyError("identityProfile: identity (4) vs operator form");
    if (p.leftSymmetric && opId4b != p.id4)
        throw InternalConsistencyError("identityProfile: identity (4) vs commuting left multiplications");

    return p;
}

Algebra oppositeNegative(const Algebra& a) {
    const int n = a.dim();
    Vec t(static_cast<size_t>(n) * static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                t[(static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)) *
                      static_cast<size_t>(n) +
                  static_cast<size_t>(k)] = -a.structureConstant(j, i, k);
    std::string name = a.name().empty() ? "" : a.name() + "^op-";
    return Algebra(n, a.field(), std::move(t), name);
}

Subspace productSpan(const Algebra& a, const Subspace& u, const Subspace& v) {
    if (u.ambientDim() != a.dim() || v.ambientDim() != a.dim())
        throw std::invalid_argument("productSpan: ambient dimension mismatch");
    std::vector<Vec> prods;
    for (int r = 0; r < u.dim(); ++r)
        for (int s = 0; s < v.dim(); ++s)
            prods.push_back(a.product(u.basisVector(r), v.basisVector(s)));
    return Subspace::span(a.dim(), prods);
}

Algebra restrictToSubalgebra(const Algebra& a, const Subspace& s, const std::string& name) {
    if (s.ambientDim() != a.dim())
        throw std::invalid_argument("restrictToSubalgebra: ambient dimension mismatch");
    const int m = s.dim();
    Vec t(static_cast<size_t>(m) * static_cast<size_t>(m) * static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Vec p = a.product(s.basisVector(i), s.basisVector(j));
            if (!s.contains(p))
                throw std::invalid_argument("restrictToSubalgebra: subspace not closed under product");
            Vec coords = s.coordinates(p);
            for (int k = 0; k < m; ++k)
                t[(static_cast<size_t>(i) * static_cast<size_t>(m) + static_cast<size_t>(j)) *
                      static_cast<size_t>(m) +
                  static_cast<size_t>(k)] = coords[static_cast<size_t>(k)];
        }
    return Algebra(m, a.field(), std::move(t), name);
}

}  // namespace lsa
