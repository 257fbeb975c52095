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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lsa/affine.hpp"
#include "test_util.hpp"

using namespace lsa;
using namespace lsatest;

namespace {
Scalar q(long n, long d = 1) { return Scalar(n, d); }
}

TEST_CASE("affine representation blocks") {
    AffineMatrix m = affineRep(a21(), unitVec(2, 0));
    CHECK(m.linearPart() == Matrix::identity(2));
    CHECK(m.translationPart() == unitVec(2, 0));

    AffineMatrix z = affineRep(a21(), zeroVec(2));
    CHECK(z.matrix().isZero());

    // pure infinitesimal translation: L_{e1} = 0 in exp4
    AffineMatrix t = affineRep(exp4(), unitVec(4, 0));
    CHECK(t.linearPart().isZero());
    CHECK(t.translationPart() == unitVec(4, 0));
}

TEST_CASE("affine representation is a Lie homomorphism exactly for left-symmetric products") {
    for (const Algebra& alg : {a21(), a22(), exp4(), a4(), h3r2(), d2(), a2()})
        CHECK(affineHomOnBasis(alg));
    // a non-left-symmetric table must break the homomorphism identity
    Algebra bad = fromTable(2, {{1, 2, 1, 1}}, "bad");
    REQUIRE(!isLeftSymmetric(bad));
    CHECK(!affineHomOnBasis(bad));
    CHECK_THROWS_AS(affineRep(bad, unitVec(2, 0)), std::invalid_argument);
}

TEST_CASE("exact exponentials of nilpotent matrices") {
    CHECK(expNilpotent(Matrix(3, 3)) == Matrix::identity(3));

    Matrix single(2, 2);
    single.at(0, 1) = q(1);
    CHECK(expNilpotent(single) == Matrix::identity(2) + single);

    // exp(M) exp(-M) = identity
    Matrix m(4, 4);
    m.at(0, 1) = q(2);
    m.at(1, 2) = q(-3);
    m.at(0, 3) = q(1, 2);
    CHECK(expNilpotent(m) * expNilpotent(-m) == Matrix::identity(4));

    CHECK_THROWS_AS(expNilpotent(Matrix::identity(2)), std::invalid_argument);
}

TEST_CASE("exp is additive on commuting nilpotent pairs") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> c(-2, 2);
    for (int t = 0; t < 10; ++t) {
        // commuting strictly upper triangular matrices: powers of one matrix
        Matrix m(4, 4);
        for (int i = 0; i < 3; ++i) m.at(i, i + 1) = q(c(rng));
        Matrix a = m * m;
        CHECK((m * a == a * m));
        CHECK(expNilpotent(m + a) == expNilpotent(m) * expNilpotent(a));
    }
}

TEST_CASE("exponential of the affine image of e2 in exp4") {
    Algebra e4 = exp4();
    Matrix aff = affineRep(e4, unitVec(4, 1)).matrix();
    Matrix exp = expNilpotent(aff);
    // aff^2 = 0 here (e2*e2 = 0 and L_{e2}^2 = 0), so exp = I + aff
    CHECK((aff * aff).isZero());
    CHECK(exp == Matrix::identity(5) + aff);
}

TEST_CASE("derived subalgebra acting by translations is the (4) identity") {
    CHECK(derivedActsByTranslations(exp4()));
    CHECK(derivedActsByTranslations(a21()));
    CHECK(derivedActsByTranslations(h3r2()));
    CHECK(!derivedActsByTranslations(a22()));
    CHECK(derivedActsByTranslations(d2()));  // commutative: vacuous
    for (long g : {1L, 2L}) CHECK(!derivedActsByTranslations(a3gamma(q(0), q(0), q(g))));
    CHECK(derivedActsByTranslations(a3gamma(q(0), q(0), q(0))));
}

TEST_CASE("exp of a pure translation in exp4") {
    // e1 spans the derived ideal; its affine image is a pure infinitesimal
    // translation and exponentiates to the unit translation by e1.
    Algebra e4 = exp4();
    Matrix aff = affineRep(e4, unitVec(4, 0)).matrix();
    Matrix exp = expNilpotent(aff);
    CHECK(exp == Matrix::identity(5) + aff);
    AffineMatrix asAffine(exp - Matrix::identity(5));
    CHECK(asAffine.linearPart().isZero());
    CHECK(asAffine.translationPart() == unitVec(4, 0));
}
