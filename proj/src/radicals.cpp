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

#include "lsa/radicals.hpp"

#include <random>

#include "lsa/polynomial.hpp"

namespace lsa {

namespace {

Scalar traceOfRightMul(const Algebra& a, int i) {
    Scalar t(0);
    for (int j = 0; j < a.dim(); ++j) t += a.structureConstant(j, i, j);
    return t;
}

Scalar smallRandomRational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    return Scalar(num(rng), den(rng));
}

}  // namespace

Subspace traceKernel(const Algebra& a) {
    const int n = a.dim();
    Matrix functional(1, n);
    for (int i = 0; i < n; ++i) functional.at(0, i) = traceOfRightMul(a, i);
    return Subspace::span(n, functional.nullspaceBasis());
}

Subspace largestLeftIdealIn(const Algebra& a, const Subspace& s) {
    if (s.ambientDim() != a.dim())
        throw std::invalid_argument("largestLeftIdealIn: ambient dimension mismatch");
    const int n = a.dim();
    Subspace w = s;
    while (true) {
        int k = w.dim();
        if (k == 0) return w;
        // x = sum a_r w_r stays in W under every L_{e_j}; the residual of
        // L_{e_j} w_r modulo W is linear in the coordinates a.
        std::vector<Vec> residuals;  // column r stacked over j
        Matrix sys(n * n, k);
        for (int r = 0; r < k; ++r) {
            for (int j = 0; j < n; ++j) {
                Vec res = w.reduce(a.product(unitVec(n, j), w.basisVector(r)));
                for (int c = 0; c < n; ++c) sys.at(j * n + c, r) = res[static_cast<size_t>(c)];
            }
        }
        std::vector<Vec> coords = sys.nullspaceBasis();
        std::vector<Vec> vecs;
        for (const Vec& co : coords) {
            Vec x = zeroVec(n);
            for (int r = 0; r < k; ++r)
                x = vecAdd(x, vecScale(co[static_cast<size_t>(r)], w.basisVector(r)));
            vecs.push_back(std::move(x));
        }
        Subspace next = Subspace::span(n, vecs);
        if (next == w) return w;
        w = next;
    }
}

Subspace koszulRadical(const Algebra& a) {
    requireLeftSymmetric(a, "koszulRadical");
    Subspace r = largestLeftIdealIn(a, traceKernel(a));
    if (!r.isZero()) {
        // The radical is the largest complete left ideal: its restricted right
        // multiplications must be nilpotent and traceless.
        Algebra restricted = restrictToSubalgebra(a, r);
        for (int i = 0; i < restricted.dim(); ++i) {
            if (!restricted.rightMulBasis(i).isNilpotent())
                throw InternalConsistencyError(
                    "koszulRadical: restricted right multiplication is not nilpotent");
            if (!traceOfRightMul(restricted, i).isZero())
                throw InternalConsistencyError("koszulRadical: restriction is not complete");
        }
    }
    return r;
}

bool isComplete(const Algebra& a) {
    requireLeftSymmetric(a, "isComplete");
    bool complete = true;
    for (int i = 0; i < a.dim() && complete; ++i)
        if (!traceOfRightMul(a, i).isZero()) complete = false;
    if (complete) completenessCrossCheck(a, 8, 0xC0FFEE);
    return complete;
}

void completenessCrossCheck(const Algebra& a, int count, uint64_t seed) {
    const int n = a.dim();
    bool complete = true;
    for (int i = 0; i < n && complete; ++i)
        if (!traceOfRightMul(a, i).isZero()) complete = false;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < count; ++t) {
        Vec x(static_cast<size_t>(n));
        for (auto& s : x) s = smallRandomRational(rng);
        Matrix rx = a.rightMul(x);
        bool nil = rx.isNilpotent();
        if (complete && !nil)
            throw InternalConsistencyError(
                "completeness: trace criterion says complete but R_x is not nilpotent");
        if (nil && !rx.trace().isZero())
            throw InternalConsistencyError("completeness: nilpotent operator with nonzero trace");
    }
}

namespace {

bool tracelessClosure(const std::vector<Matrix>& closure) {
    for (const Matrix& u : closure)
        if (!u.trace().isZero()) return false;
    for (size_t i = 0; i < closure.size(); ++i)
        for (size_t j = 0; j < closure.size(); ++j)
            if (!(closure[i] * closure[j]).trace().isZero()) return false;
    return true;
}

// Least m with every product of m generators vanishing; cap relative to the
// closure dimension.
std::optional<int> productChainIndex(const std::vector<Matrix>& gens, int matDim, int cap) {
    if (gens.empty()) return 1;
    std::vector<Matrix> layer = gens;
    auto layerSpan = [&](const std::vector<Matrix>& mats) {
        std::vector<Vec> vs;
        for (const Matrix& m : mats) vs.push_back(m.vectorized());
        return Subspace::span(matDim * matDim, vs);
    };
    for (int m = 1; m <= cap; ++m) {
        if (layerSpan(layer).isZero()) return m;
        std::vector<Matrix> next;
        Subspace seen = Subspace::zero(matDim * matDim);
        for (const Matrix& g : gens)
            for (const Matrix& p : layer) {
                Matrix prod = g * p;
                Vec v = prod.vectorized();
                if (!seen.contains(v)) {
                    seen = sum(seen, Subspace::span(matDim * matDim, {v}));
                    next.push_back(prod);
                }
            }
        layer = std::move(next);
    }
    return std::nullopt;
}

}  // namespace

NilpotencyCheck nilpotentIdealChecks(const Algebra& a, const Subspace& ideal) {
    if (!idealFlags(a, ideal).twoSided)
        throw std::invalid_argument("nilpotentIdealChecks: not a two-sided ideal");
    const int n = a.dim();
    NilpotencyCheck out;
    std::vector<Matrix> lGens, rGens;
    for (int r = 0; r < ideal.dim(); ++r) {
        lGens.push_back(a.leftMul(ideal.basisVector(r)));
        rGens.push_back(a.rightMul(ideal.basisVector(r)));
    }
    std::vector<Matrix> lClosure = Matrix::productSpanClosure(lGens, n);
    std::vector<Matrix> rClosure = Matrix::productSpanClosure(rGens, n);
    out.leftNilpotent = tracelessClosure(lClosure);
    out.rightNilpotent = tracelessClosure(rClosure);
    if (out.leftNilpotent) {
        out.leftIndex = productChainIndex(lGens, n, static_cast<int>(lClosure.size()) + 1);
        if (!out.leftIndex)
            throw InternalConsistencyError("nilpotentIdealChecks: missing left index");
    }
    if (out.rightNilpotent) {
        out.rightIndex = productChainIndex(rGens, n, static_cast<int>(rClosure.size()) + 1);
        if (!out.rightIndex)
            throw InternalConsistencyError("nilpotentIdealChecks: missing right index");
    }
    return out;
}

Subspace novikovRightRadical(const Algebra& a) {
    requireLeftSymmetric(a, "novikovRightRadical");
    IdentityProfile p = identityProfile(a);
    if (!p.novikov) throw std::invalid_argument("novikovRightRadical: algebra is not Novikov");
    // On a Novikov algebra the Koszul radical is a right-nilpotent two-sided
    // ideal and every right-nilpotent two-sided ideal is a complete left
    // ideal, so the maximal one coincides with the Koszul radical. Both
    // halves are verified here.
    Subspace n = koszulRadical(a);
    if (!idealFlags(a, n).twoSided)
        throw InternalConsistencyError("novikovRightRadical: radical is not two-sided");
    if (!nilpotentIdealChecks(a, n).rightNilpotent)
        throw InternalConsistencyError("novikovRightRadical: radical is not right-nilpotent");
    return n;
}

bool novikovTraceKernelEqualsRadical(const Algebra& a) {
    return traceKernel(a) == novikovRightRadical(a);
}

namespace {

// Non-unital minimal polynomial of an element: the least m with
// g^m in span{g, ..., g^(m-1)}, returned with zero constant term and monic.
Polynomial elementMinimalPolynomial(const Algebra& a, const Vec& g) {
    const int n = a.dim();
    std::vector<Vec> powers;  // g^1, g^2, ...
    powers.push_back(g);
    while (true) {
        Subspace span = Subspace::span(n, powers);
        Vec next = a.product(powers.back(), g);
        if (span.contains(next)) {
            // next = sum d_k g^(k+1); coefficients via the span's basis.
            int m = static_cast<int>(powers.size());
            Matrix sys(n, m);
            for (int c = 0; c < m; ++c)
                for (int r = 0; r < n; ++r) sys.at(r, c) = powers[static_cast<size_t>(c)][static_cast<size_t>(r)];
            // Solve sys * d = next by augmenting and reducing.
            Matrix aug(n, m + 1);
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < m; ++c) aug.at(r, c) = sys.at(r, c);
                aug.at(r, m) = next[static_cast<size_t>(r)];
            }
            aug.rrefInPlace();
            Vec coeffs(static_cast<size_t>(m) + 2);  // p(x) = x^(m+1) - sum d_k x^(k+1)
            coeffs[static_cast<size_t>(m) + 1] = Scalar(1);
            // read solution: after RREF, row i gives d_pivot = last column entry
            // (powers are linearly independent, so pivots are exactly 0..m-1).
            for (int r = 0; r < std::min(n, m); ++r) {
                int pivot = -1;
                for (int c = 0; c < m; ++c)
                    if (!aug.at(r, c).isZero()) {
                        pivot = c;
                        break;
                    }
                if (pivot >= 0) coeffs[static_cast<size_t>(pivot) + 1] = -aug.at(r, m);
            }
            return Polynomial(std::move(coeffs));
        }
        powers.push_back(next);
        if (static_cast<int>(powers.size()) > n + 1)
            throw InternalConsistencyError("elementMinimalPolynomial: no dependence found");
    }
}

// Evaluate a zero-constant-term polynomial at an algebra element.
Vec evalAtElement(const Algebra& a, const Polynomial& p, const Vec& g) {
    Vec acc = zeroVec(a.dim());
    Vec power = g;
    for (int k = 1; k <= p.degree(); ++k) {
        if (!p.coeff(k).isZero()) acc = vecAdd(acc, vecScale(p.coeff(k), power));
        if (k < p.degree()) power = a.product(power, g);
    }
    return acc;
}

struct SplitVerification {
    bool ok;
    std::string why;
};

SplitVerification verifySplit(const Algebra& a, const Subspace& a0, const Subspace& aStar,
                              const std::optional<Vec>& unit, const Subspace& center,
                              const Subspace& translationKernel, const Subspace& derived) {
    const int n = a.dim();
    auto fail = [](std::string why) { return SplitVerification{false, std::move(why)}; };
    if (!idealFlags(a, a0).twoSided) return fail("A0 is not a two-sided ideal");
    if (!idealFlags(a, aStar).twoSided) return fail("AStar is not a two-sided ideal");
    if (sum(a0, aStar) != Subspace::whole(n) || !intersect(a0, aStar).isZero())
        return fail("A0 + AStar is not a direct sum decomposition");
    if (!a0.contains(derived)) return fail("derived ideal not inside A0");
    if (!center.contains(aStar)) return fail("AStar is not inside the center");
    if (!a0.contains(translationKernel)) return fail("T(A) not inside A0");
    if (translationKernel.isZero() != a0.isZero()) return fail("T(A) = 0 iff A0 = 0 fails");
    if (!a0.isZero()) {
        Algebra restricted = restrictToSubalgebra(a, a0);
        for (int i = 0; i < restricted.dim(); ++i) {
            Scalar t(0);
            for (int j = 0; j < restricted.dim(); ++j) t += restricted.structureConstant(j, i, j);
            if (!t.isZero()) return fail("A0 is not complete");
            if (!restricted.rightMulBasis(i).isNilpotent()) return fail("A0 is not complete");
        }
    }
    if (!aStar.isZero()) {
        if (!unit) return fail("AStar has no identity element");
        Algebra star = restrictToSubalgebra(a, aStar);
        IdentityProfile p = identityProfile(star);
        if (!p.commutative) return fail("AStar is not commutative");
        if (!aStar.contains(*unit)) return fail("identity element lies outside AStar");
        for (int r = 0; r < aStar.dim(); ++r) {
            Vec b = aStar.basisVector(r);
            if (a.product(*unit, b) != b || a.product(b, *unit) != b)
                return fail("claimed identity does not act as identity on AStar");
        }
    }
    return {true, ""};
}

}  // namespace

DerivationSplit derivationSplit(const Algebra& a, uint64_t seed) {
    requireLeftSymmetric(a, "derivationSplit");
    IdentityProfile prof = identityProfile(a);
    if (!prof.derivation)
        throw std::invalid_argument("derivationSplit: algebra is not a derivation algebra");
    const int n = a.dim();
    Subspace center = algebraCenter(a);
    CentersReport cr = centers(a);
    Subspace derived = LieBracket::commutatorOf(a).bracketSpan(Subspace::whole(n), Subspace::whole(n));

    std::mt19937_64 rng(seed);
    std::string lastWhy = "no attempt made";
    for (int attempt = 0; attempt < 8; ++attempt) {
        Subspace a0 = Subspace::whole(n);
        Subspace aStar = Subspace::zero(n);
        std::optional<Vec> unit;
        if (!center.isZero()) {
            Vec g = zeroVec(n);
            for (int r = 0; r < center.dim(); ++r)
                g = vecAdd(g, vecScale(smallRandomRational(rng), center.basisVector(r)));
            if (!vecIsZero(g)) {
                Polynomial p = elementMinimalPolynomial(a, g);
                // p(x) = x^ord * h(x) with h(0) != 0; ord >= 1 since p has no
                // constant term.
                Polynomial h = p;
                int ord = 0;
                while (!h.isZero() && h.coeff(0).isZero()) {
                    h = divmod(h, Polynomial::x()).first;
                    ++ord;
                }
                if (h.degree() >= 1) {
                    // u = x^ord * w with w = (x^ord)^(-1) mod h; u(g) is the
                    // principal idempotent of the subalgebra generated by g.
                    Vec xo(static_cast<size_t>(ord) + 1);
                    xo.back() = Scalar(1);
                    Polynomial xOrd(std::move(xo));
                    // extended Euclid: s*x^ord + t*h = 1
                    Polynomial r0 = xOrd, r1 = h.monic();
                    Polynomial s0 = Polynomial::constant(Scalar(1)), s1;
                    while (!r1.isZero()) {
                        auto [q, r2] = divmod(r0, r1);
                        Polynomial s2 = s0 - q * s1;
                        r0 = std::move(r1);
                        r1 = std::move(r2);
                        s0 = std::move(s1);
                        s1 = std::move(s2);
                    }
                    if (r0.degree() == 0) {
                        Polynomial w = divmod(Scalar(1) / r0.coeff(0) * s0, h.monic()).second;
                        Polynomial u = xOrd * w;
                        Vec e = evalAtElement(a, u, g);
                        if (!vecIsZero(e) && a.product(e, e) == e) {
                            aStar = productSpan(a, Subspace::span(n, {e}), Subspace::whole(n));
                            a0 = Subspace::span(n, a.leftMul(e).nullspaceBasis());
                            unit = e;
                        }
                    }
                }
            }
        }
        SplitVerification v =
            verifySplit(a, a0, aStar, unit, center, cr.translationKernel, derived);
        if (v.ok) return {a0, aStar, unit};
        lastWhy = v.why;
    }
    throw std::runtime_error(
        "derivationSplit: idempotent search exhausted; the split could not be verified (" +
        lastWhy + ")");
}

RadicalReport radicalReport(const Algebra& a, uint64_t seed) {
    requireLeftSymmetric(a, "radicalReport");
    RadicalReport r{traceKernel(a), koszulRadical(a)};
    r.complete = isComplete(a);
    Subspace derived =
        LieBracket::commutatorOf(a).bracketSpan(Subspace::whole(a.dim()), Subspace::whole(a.dim()));
    r.derivedInRadical = r.koszulRadical.contains(derived);
    IdentityProfile p = identityProfile(a);
    if (p.novikov) r.novikovRadical = novikovRightRadical(a);
    if (p.derivation) r.split = derivationSplit(a, seed);
    return r;
}

}  // namespace lsa
