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

#include "lsa/simplicity.hpp"

#include <random>

#include "lsa/polynomial.hpp"

namespace lsa {

MultiplicationAlgebra multiplicationAlgebra(const Algebra& a) {
    const int n = a.dim();
    MultiplicationAlgebra m;
    for (int i = 0; i < n; ++i) m.generators.push_back(a.leftMulBasis(i));
    for (int i = 0; i < n; ++i) m.generators.push_back(a.rightMulBasis(i));
    m.closureBasis = Matrix::productSpanClosure(m.generators, n);
    std::vector<Vec> vecs;
    for (const Matrix& b : m.closureBasis) vecs.push_back(b.vectorized());
    m.closure = Subspace::span(n * n, vecs);

    // Trace-form radical in closure coordinates: tr(m) = 0 and tr(m u) = 0
    // for every basis element u (Dickson, char 0).
    const int k = static_cast<int>(m.closureBasis.size());
    Matrix sys(k + 1, k);
    for (int c = 0; c < k; ++c) {
        sys.at(0, c) = m.closureBasis[static_cast<size_t>(c)].trace();
        for (int r = 0; r < k; ++r)
            sys.at(1 + r, c) =
                (m.closureBasis[static_cast<size_t>(c)] * m.closureBasis[static_cast<size_t>(r)])
                    .trace();
    }
    std::vector<Vec> radicalVecs;
    for (const Vec& coord : sys.nullspaceBasis()) {
        Vec v = zeroVec(n * n);
        for (int c = 0; c < k; ++c)
            v = vecAdd(v, vecScale(coord[static_cast<size_t>(c)],
                                   m.closureBasis[static_cast<size_t>(c)].vectorized()));
        radicalVecs.push_back(std::move(v));
    }
    m.radical = Subspace::span(n * n, radicalVecs);
    return m;
}

namespace {

// Spin of a vector under a set of operators: smallest invariant subspace
// containing it.
Subspace spin(const std::vector<Matrix>& ops, const Vec& start, int n) {
    Subspace s = Subspace::span(n, {start});
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> next;
        for (int r = 0; r < s.dim(); ++r)
            for (const Matrix& op : ops) {
                Vec img = op.apply(s.basisVector(r));
                if (!s.contains(img)) next.push_back(img);
            }
        if (!next.empty()) {
            for (int r = 0; r < s.dim(); ++r) next.push_back(s.basisVector(r));
            s = Subspace::span(n, next);
            grew = true;
        }
    }
    return s;
}

void verifyWitness(const Algebra& a, const Subspace& w, const char* stage) {
    if (w.isZero() || w.isWhole() || !idealFlags(a, w).twoSided)
        throw InternalConsistencyError(std::string("isSimple: invalid witness from ") + stage);
}

}  // namespace

SimplicityResult isSimple(const Algebra& a, uint64_t seed, int budget) {
    const int n = a.dim();
    if (n < 1) throw std::invalid_argument("isSimple: dimension must be at least 1");
    SimplicityResult res;
    res.seed = seed;

    Subspace whole = Subspace::whole(n);
    Subspace square = productSpan(a, whole, whole);
    if (square != whole) {
        res.verdict = SimplicityVerdict::NotSimple;
        if (n == 1) {
            // the one-dimensional zero algebra: excluded by definition,
            // no proper nonzero ideal exists
            res.method = "one-dimensional zero algebra (definitional exclusion)";
            return res;
        }
        Subspace witness = square.isZero() ? Subspace::span(n, {unitVec(n, 0)}) : square;
        verifyWitness(a, witness, "A*A");
        res.witness = witness;
        res.method = square.isZero() ? "zero product: every line is an ideal"
                                     : "A*A is a proper nonzero two-sided ideal";
        return res;
    }

    MultiplicationAlgebra mult = multiplicationAlgebra(a);
    if (!mult.radical.isZero()) {
        // J*A is a proper nonzero two-sided ideal.
        std::vector<Vec> imgs;
        for (int r = 0; r < mult.radical.dim(); ++r) {
            Matrix op = Matrix::fromVectorized(mult.radical.basisVector(r), n, n);
            for (int i = 0; i < n; ++i) imgs.push_back(op.apply(unitVec(n, i)));
        }
        Subspace witness = Subspace::span(n, imgs);
        verifyWitness(a, witness, "multiplication-algebra radical");
        res.verdict = SimplicityVerdict::NotSimple;
        res.witness = witness;
        res.method = "multiplication-algebra radical acts with a proper image";
        return res;
    }

    // Norton criterion, Las Vegas. Candidate elements: the closure basis in
    // discovery order, then seeded random combinations.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<Matrix> transposedGens;
    for (const Matrix& g : mult.generators) transposedGens.push_back(g.transpose());

    for (int t = 0; t < budget; ++t) {
        ++res.elementsTried;
        Matrix m(n, n);
        if (t < static_cast<int>(mult.closureBasis.size())) {
            m = mult.closureBasis[static_cast<size_t>(t)];
        } else {
            for (const Matrix& b : mult.closureBasis) m = m + Scalar(coeff(rng)) * b;
        }
        Polynomial chi{m.charpoly()};
        for (const auto& [f, multiplicity] : factorOverField(chi, a.field())) {
            (void)multiplicity;
            Matrix fm = f.evalMatrix(m);
            std::vector<Vec> kernel = fm.nullspaceBasis();
            if (kernel.empty()) continue;
            for (const Vec& w : kernel) {
                Subspace generated = idealClosure(a, Subspace::span(n, {w}));
                if (!generated.isWhole()) {
                    verifyWitness(a, generated, "Norton kernel spin");
                    res.verdict = SimplicityVerdict::NotSimple;
                    res.witness = generated;
                    res.method = "Norton kernel spin found a proper ideal";
                    return res;
                }
            }
            std::vector<Vec> dualKernel = fm.transpose().nullspaceBasis();
            for (const Vec& w : dualKernel) {
                Subspace dualSpin = spin(transposedGens, w, n);
                if (!dualSpin.isWhole()) {
                    // annihilator of a proper invariant dual subspace
                    Subspace witness = Subspace::span(n, dualSpin.basis().nullspaceBasis());
                    verifyWitness(a, witness, "Norton dual spin");
                    res.verdict = SimplicityVerdict::NotSimple;
                    res.witness = witness;
                    res.method = "Norton dual spin found a proper ideal";
                    return res;
                }
            }
            if (static_cast<int>(kernel.size()) == f.degree()) {
                // good pair: one full spin on each side certifies irreducibility
                res.verdict = SimplicityVerdict::Simple;
                res.method = "Norton certificate";
                return res;
            }
        }
    }
    res.verdict = SimplicityVerdict::Undecided;
    res.method = "randomness budget exhausted";
    return res;
}

Algebra complexify(const Algebra& a) {
    if (a.field() == Field::Gaussian)
        throw std::invalid_argument("complexify: algebra is already Gaussian-rational");
    std::string name = a.name().empty() ? "" : a.name() + "^C";
    return Algebra(a.dim(), Field::Gaussian, a.tensor(), name);
}

bool isoWitness(const Algebra& a, const Algebra& b, const Matrix& p) {
    if (a.dim() != b.dim()) throw std::invalid_argument("isoWitness: dimension mismatch");
    if (a.field() != b.field()) throw std::invalid_argument("isoWitness: field mismatch");
    const int n = a.dim();
    if (p.rows() != n || p.cols() != n)
        throw std::invalid_argument("isoWitness: matrix shape mismatch");
    if (!p.inverse().has_value()) throw std::invalid_argument("isoWitness: matrix is singular");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec lhs = p.apply(a.basisProduct(i, j));
            Vec rhs = b.product(p.col(i), p.col(j));
            if (!vecIsZero(vecSub(lhs, rhs))) return false;
        }
    return true;
}

}  // namespace lsa
