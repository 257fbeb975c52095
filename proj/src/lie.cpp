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

#include "lsa/lie.hpp"

#include <functional>

namespace lsa {

bool isLeftSymmetric(const Algebra& a) {
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec lhs = a.associator(unitVec(n, i), unitVec(n, j), unitVec(n, k));
                Vec rhs = a.associator(unitVec(n, j), unitVec(n, i), unitVec(n, k));
                if (!vecIsZero(vecSub(lhs, rhs))) return false;
            }
    return true;
}

void requireLeftSymmetric(const Algebra& a, const char* who) {
    if (!isLeftSymmetric(a))
        throw std::invalid_argument(std::string(who) + ": algebra is not left-symmetric");
}

// -------------------------------------------------------------------------
// LieBracket
// -------------------------------------------------------------------------

LieBracket::LieBracket(int dim, Field field, Vec tensor)
    : dim_(dim), field_(field), tensor_(std::move(tensor)) {
    size_t want = static_cast<size_t>(dim) * static_cast<size_t>(dim) * static_cast<size_t>(dim);
    if (tensor_.size() != want) throw std::invalid_argument("LieBracket: tensor size != dim^3");
    auto at = [&](int i, int j, int k) -> const Scalar& {
        return tensor_[(static_cast<size_t>(i) * static_cast<size_t>(dim_) + static_cast<size_t>(j)) *
                           static_cast<size_t>(dim_) +
                       static_cast<size_t>(k)];
    };
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (at(i, j, k) != -at(j, i, k))
                    throw std::invalid_argument("LieBracket: tensor is not antisymmetric");
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k) {
                Vec s = bracket(bracketBasis(i, j), unitVec(dim_, k));
                s = vecAdd(s, bracket(bracketBasis(j, k), unitVec(dim_, i)));
                s = vecAdd(s, bracket(bracketBasis(k, i), unitVec(dim_, j)));
                if (!vecIsZero(s))
                    throw std::invalid_argument("LieBracket: Jacobi identity fails");
            }
}

LieBracket LieBracket::commutatorOf(const Algebra& a) {
    const int n = a.dim();
    Vec t(static_cast<size_t>(n) * static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                t[(static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)) *
                      static_cast<size_t>(n) +
                  static_cast<size_t>(k)] =
                    a.structureConstant(i, j, k) - a.structureConstant(j, i, k);
    return LieBracket(n, a.field(), std::move(t));
}

Vec LieBracket::bracketBasis(int i, int j) const {
    Vec v(static_cast<size_t>(dim_));
    for (int k = 0; k < dim_; ++k)
        v[static_cast<size_t>(k)] =
            tensor_[(static_cast<size_t>(i) * static_cast<size_t>(dim_) + static_cast<size_t>(j)) *
                        static_cast<size_t>(dim_) +
                    static_cast<size_t>(k)];
    return v;
}

Vec LieBracket::bracket(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw std::invalid_argument("LieBracket: dimension mismatch");
    Vec r(static_cast<size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
        if (x[static_cast<size_t>(i)].isZero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[static_cast<size_t>(j)].isZero()) continue;
            Scalar f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
            Vec b = bracketBasis(i, j);
            for (int k = 0; k < dim_; ++k)
                if (!b[static_cast<size_t>(k)].isZero())
                    r[static_cast<size_t>(k)] += f * b[static_cast<size_t>(k)];
        }
    }
    return r;
}

Subspace LieBracket::bracketSpan(const Subspace& u, const Subspace& v) const {
    std::vector<Vec> vecs;
    for (int r = 0; r < u.dim(); ++r)
        for (int s = 0; s < v.dim(); ++s) vecs.push_back(bracket(u.basisVector(r), v.basisVector(s)));
    return Subspace::span(dim_, vecs);
}

Subspace LieBracket::center() const {
    // z central iff [z, e_j] = 0 for all j; columns of the constraint matrix
    // are the maps evaluated at basis vectors.
    Matrix sys(dim_ * dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            Vec b = bracketBasis(i, j);
            for (int k = 0; k < dim_; ++k) sys.at(j * dim_ + k, i) = b[static_cast<size_t>(k)];
        }
    return Subspace::span(dim_, sys.nullspaceBasis());
}

// -------------------------------------------------------------------------
// Series
// -------------------------------------------------------------------------

namespace {

// Runs a descending series to stabilization (cap dim+1 steps; the dimensions
// strictly decrease until stable).
std::vector<Subspace> runSeries(const Subspace& start,
                                const std::function<Subspace(const Subspace&)>& step,
                                int cap) {
    std::vector<Subspace> series{start};
    for (int it = 0; it < cap; ++it) {
        Subspace next = step(series.back());
        if (next == series.back()) break;
        series.push_back(next);
        if (series.back().isZero()) break;
    }
    return series;
}

std::optional<int> vanishingIndex(const std::vector<Subspace>& series) {
    if (series.back().isZero()) return static_cast<int>(series.size()) - 1;
    return std::nullopt;
}

}  // namespace

LieData lieData(const Algebra& a) {
    requireLeftSymmetric(a, "lieData");
    // The Jacobi validation inside LieBracket is a theorem for left-symmetric
    // products; a failure here is an internal error, not bad input.
    LieBracket b = [&] {
        try {
            return LieBracket::commutatorOf(a);
        } catch (const std::invalid_argument& e) {
            throw InternalConsistencyError(std::string("lieData: commutator of a left-symmetric "
                                                       "algebra must be a Lie bracket: ") +
                                           e.what());
        }
    }();
    const int n = a.dim();
    Subspace whole = Subspace::whole(n);
    LieData d{b, {}, {}, std::nullopt, std::nullopt, std::nullopt};
    d.derivedSeries =
        runSeries(whole, [&](const Subspace& s) { return b.bracketSpan(s, s); }, n + 1);
    d.lowerCentralSeries =
        runSeries(whole, [&](const Subspace& s) { return b.bracketSpan(whole, s); }, n + 1);
    d.solvableClass = vanishingIndex(d.derivedSeries);
    d.nilpotentClass = vanishingIndex(d.lowerCentralSeries);
    if (d.nilpotentClass && *d.nilpotentClass >= 2) {
        const Subspace& lastNonzero =
            d.lowerCentralSeries[static_cast<size_t>(*d.nilpotentClass) - 1];
        d.nonsingular = (b.center() == lastNonzero);
    }
    return d;
}

// -------------------------------------------------------------------------
// Centers
// -------------------------------------------------------------------------

namespace {

// Nullspace of a linear map F: F^n -> F^m materialized column-by-column on
// basis vectors.
Subspace kernelOfMap(int n, const std::function<Vec(const Vec&)>& f) {
    Vec probe = f(unitVec(n, 0));
    int m = static_cast<int>(probe.size());
    Matrix sys(m, n);
    for (int i = 0; i < n; ++i) {
        Vec img = i == 0 ? probe : f(unitVec(n, i));
        for (int r = 0; r < m; ++r) sys.at(r, i) = img[static_cast<size_t>(r)];
    }
    return Subspace::span(n, sys.nullspaceBasis());
}

Vec concatVecs(const std::vector<Vec>& parts) {
    Vec out;
    for (const Vec& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

Subspace algebraCenterGeneral(const Algebra& a) {
    const int n = a.dim();
    if (n == 0) return Subspace::zero(0);
    return kernelOfMap(n, [&](const Vec& z) {
        std::vector<Vec> parts;
        for (int i = 0; i < n; ++i) {
            Vec ei = unitVec(n, i);
            parts.push_back(vecSub(a.product(z, ei), a.product(ei, z)));
            for (int j = 0; j < n; ++j) {
                Vec ej = unitVec(n, j);
                parts.push_back(a.associator(z, ei, ej));
                parts.push_back(a.associator(ei, z, ej));
                parts.push_back(a.associator(ei, ej, z));
            }
        }
        return concatVecs(parts);
    });
}

Subspace algebraCenterLeftSymmetric(const Algebra& a, const Subspace& lieCenter) {
    const int n = a.dim();
    if (n == 0) return Subspace::zero(0);
    // { z in Z_Lie : (z, e_i, e_j) = 0 } as the kernel of the stacked map.
    Subspace assocKernel = kernelOfMap(n, [&](const Vec& z) {
        std::vector<Vec> parts;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                parts.push_back(a.associator(z, unitVec(n, i), unitVec(n, j)));
        return concatVecs(parts);
    });
    return intersect(lieCenter, assocKernel);
}

}  // namespace

Subspace algebraCenter(const Algebra& a) {
    Subspace general = algebraCenterGeneral(a);
    if (isLeftSymmetric(a)) {
        Subspace viaLemma = algebraCenterLeftSymmetric(a, LieBracket::commutatorOf(a).center());
        if (viaLemma != general)
            throw InternalConsistencyError(
                "algebraCenter: simplified criterion disagrees with the general definition");
    }
    return general;
}

IdealFlags idealFlags(const Algebra& a, const Subspace& s) {
    if (s.ambientDim() != a.dim())
        throw std::invalid_argument("idealFlags: ambient dimension mismatch");
    Subspace whole = Subspace::whole(a.dim());
    IdealFlags f;
    f.left = s.contains(productSpan(a, whole, s));
    f.right = s.contains(productSpan(a, s, whole));
    f.twoSided = f.left && f.right;
    f.lieIdeal = s.contains(LieBracket::commutatorOf(a).bracketSpan(whole, s));
    return f;
}

CentersReport centers(const Algebra& a) {
    requireLeftSymmetric(a, "centers");
    const int n = a.dim();
    LieBracket b = LieBracket::commutatorOf(a);
    Subspace lieC = b.center();
    Subspace algC = algebraCenterLeftSymmetric(a, lieC);
    {
        Subspace general = algebraCenterGeneral(a);
        if (algC != general)
            throw InternalConsistencyError(
                "centers: simplified center disagrees with the general definition");
    }
    // T(A) = kernel of x -> L_x (stacked operator entries).
    Subspace t = n == 0 ? Subspace::zero(0)
                        : kernelOfMap(n, [&](const Vec& x) { return a.leftMul(x).vectorized(); });
    Subspace c = intersect(t, algC);
    CentersReport r{lieC, algC, t, c, {}, {}, {}, {}};
    r.lieCenterFlags = idealFlags(a, lieC);
    r.algebraCenterFlags = idealFlags(a, algC);
    r.translationKernelFlags = idealFlags(a, t);
    r.translationalCenterFlags = idealFlags(a, c);
    return r;
}

Subspace idealClosure(const Algebra& a, const Subspace& s) {
    if (s.ambientDim() != a.dim())
        throw std::invalid_argument("idealClosure: ambient dimension mismatch");
    Subspace whole = Subspace::whole(a.dim());
    Subspace cur = s;
    for (int it = 0; it <= a.dim() + 1; ++it) {
        Subspace next = sum(cur, sum(productSpan(a, whole, cur), productSpan(a, cur, whole)));
        if (next == cur) break;
        cur = next;
    }
    return cur;
}

Vec Quotient::project(const Subspace& ideal, const Vec& v) const {
    Vec red = ideal.reduce(v);
    Vec out(keptColumns.size());
    for (size_t i = 0; i < keptColumns.size(); ++i)
        out[i] = red[static_cast<size_t>(keptColumns[i])];
    return out;
}

Quotient quotient(const Algebra& a, const Subspace& ideal) {
    IdealFlags f = idealFlags(a, ideal);
    if (!f.twoSided) throw std::invalid_argument("quotient: not a two-sided ideal");
    std::vector<int> kept = ideal.freeColumns();
    const int m = static_cast<int>(kept.size());
    Vec t(static_cast<size_t>(m) * static_cast<size_t>(m) * static_cast<size_t>(m));
    Quotient q{Algebra(0, a.field(), {}), kept};
    for (int p = 0; p < m; ++p)
        for (int r = 0; r < m; ++r) {
            Vec prod = a.basisProduct(kept[static_cast<size_t>(p)], kept[static_cast<size_t>(r)]);
            Vec proj = q.project(ideal, prod);
            for (int k = 0; k < m; ++k)
                t[(static_cast<size_t>(p) * static_cast<size_t>(m) + static_cast<size_t>(r)) *
                      static_cast<size_t>(m) +
                  static_cast<size_t>(k)] = proj[static_cast<size_t>(k)];
        }
    std::string name = a.name().empty() ? "" : a.name() + " quotient";
    q.algebra = Algebra(m, a.field(), std::move(t), name);
    // Projection must be an algebra homomorphism on basis pairs.
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            Vec lhs = q.project(ideal, a.basisProduct(i, j));
            Vec rhs = q.algebra.product(q.project(ideal, unitVec(a.dim(), i)),
                                        q.project(ideal, unitVec(a.dim(), j)));
            if (!vecIsZero(vecSub(lhs, rhs)))
                throw InternalConsistencyError("quotient: projection is not a homomorphism");
        }
    return q;
}

InnerResult innerFromEndo(const LieBracket& b, const Matrix& f) {
    const int n = b.dim();
    if (f.rows() != n || f.cols() != n)
        throw std::invalid_argument("innerFromEndo: endomorphism shape mismatch");
    Vec t(static_cast<size_t>(n) * static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Vec fi = f.apply(unitVec(n, i));
        for (int j = 0; j < n; ++j) {
            Vec prod = b.bracket(fi, unitVec(n, j));
            for (int k = 0; k < n; ++k)
                t[(static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)) *
                      static_cast<size_t>(n) +
                  static_cast<size_t>(k)] = prod[static_cast<size_t>(k)];
        }
    }
    Algebra alg(n, b.field(), std::move(t));

    Subspace center = b.center();
    bool cond1 = true, cond2 = true;
    for (int i = 0; i < n && (cond1 || cond2); ++i) {
        Vec ei = unitVec(n, i);
        Vec fi = f.apply(ei);
        for (int j = 0; j < n; ++j) {
            Vec ej = unitVec(n, j);
            Vec fj = f.apply(ej);
            Vec lhs = b.bracketBasis(i, j);
            if (!vecIsZero(vecSub(lhs, vecAdd(b.bracket(fi, ej), b.bracket(ei, fj)))))
                cond1 = false;
            Vec defect = vecSub(f.apply(lhs), b.bracket(fi, fj));
            if (!center.contains(defect)) cond2 = false;
        }
    }
    bool holds = cond1 && cond2;
    if (holds) {
        if (!isLeftSymmetric(alg))
            throw InternalConsistencyError(
                "innerFromEndo: compatible endomorphism must give a left-symmetric product");
        LieBracket comm = LieBracket::commutatorOf(alg);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!vecIsZero(vecSub(comm.bracketBasis(i, j), b.bracketBasis(i, j))))
                    throw InternalConsistencyError(
                        "innerFromEndo: commutator does not reproduce the bracket");
    }
    return {std::move(alg), holds};
}

InnerResult innerFromEndo(const Algebra& a, const Matrix& f) {
    return innerFromEndo(LieBracket::commutatorOf(a), f);
}

}  // namespace lsa
