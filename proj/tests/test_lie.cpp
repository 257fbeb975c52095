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

#include "lsa/lie.hpp"
#include "test_util.hpp"

using namespace lsa;
using namespace lsatest;

namespace {
Scalar q(long n, long d = 1) { return Scalar(n, d); }

LieBracket heisenberg() {
    // [e2, e3] = e1 on dim 4? no: dim 3
    Vec t(27);
    auto set = [&](int i, int j, int k, long v) {
        t[(static_cast<size_t>(i) * 3 + static_cast<size_t>(j)) * 3 + static_cast<size_t>(k)] =
            q(v);
    };
    set(1, 2, 0, 1);
    set(2, 1, 0, -1);
    return LieBracket(3, Field::Rational, std::move(t));
}
}  // namespace

TEST_CASE("series and classes of the worked examples") {
    LieData e4 = lieData(exp4());
    REQUIRE(e4.nilpotentClass.has_value());
    CHECK(*e4.nilpotentClass == 2);
    CHECK(e4.lowerCentralSeries[1] == Subspace::span(4, {unitVec(4, 0)}));
    REQUIRE(e4.nonsingular.has_value());
    CHECK(!*e4.nonsingular);  // center is span{e1,e4}, last nonzero term span{e1}
    CHECK(e4.bracket.center() == Subspace::span(4, {unitVec(4, 0), unitVec(4, 3)}));

    LieData d = lieData(d2());
    REQUIRE(d.solvableClass.has_value());
    CHECK(*d.solvableClass == 1);
    REQUIRE(d.nilpotentClass.has_value());
    CHECK(*d.nilpotentClass == 1);
    CHECK(!d.nonsingular.has_value());  // abelian: nonsingularity undefined

    LieData a = lieData(a21());
    REQUIRE(a.solvableClass.has_value());
    CHECK(*a.solvableClass == 2);
    CHECK(!a.nilpotentClass.has_value());
    CHECK(a.lowerCentralSeries.back() == Subspace::span(2, {unitVec(2, 1)}));
}

TEST_CASE("series are descending chains with matching first terms") {
    for (const Algebra& alg : {a21(), a22(), exp4(), h3r2(), d2(), a2()}) {
        LieData d = lieData(alg);
        CHECK(d.derivedSeries[0] == Subspace::whole(alg.dim()));
        CHECK(d.derivedSeries[1] == d.lowerCentralSeries[1]);
        for (size_t i = 1; i < d.derivedSeries.size(); ++i)
            CHECK(d.derivedSeries[i - 1].contains(d.derivedSeries[i]));
        for (size_t i = 1; i < d.lowerCentralSeries.size(); ++i)
            CHECK(d.lowerCentralSeries[i - 1].contains(d.lowerCentralSeries[i]));
    }
}

TEST_CASE("lieData rejects non-left-symmetric input") {
    // e1*e2 = e1 alone is not left-symmetric
    Algebra bad = fromTable(2, {{1, 2, 1, 1}}, "bad");
    CHECK(!isLeftSymmetric(bad));
    CHECK_THROWS_AS(lieData(bad), std::invalid_argument);
}

TEST_CASE("algebra center of the worked examples") {
    // exp4: strictly smaller than the Lie center
    CHECK(algebraCenter(exp4()) == Subspace::span(4, {unitVec(4, 0)}));
    // commutative associative: the whole space
    CHECK(algebraCenter(d2()) == Subspace::whole(2));
    CHECK(algebraCenter(a2()) == Subspace::whole(2));
    // Novikov: equals the Lie center (here trivial)
    Algebra b = a22();
    CHECK(algebraCenter(b) == LieBracket::commutatorOf(b).center());
    CHECK(algebraCenter(b).isZero());
}

TEST_CASE("centers report for exp4") {
    CentersReport r = centers(exp4());
    CHECK(r.lieCenter == Subspace::span(4, {unitVec(4, 0), unitVec(4, 3)}));
    CHECK(r.algebraCenter == Subspace::span(4, {unitVec(4, 0)}));
    CHECK(r.translationKernel == Subspace::span(4, {unitVec(4, 0)}));
    CHECK(r.translationalCenter == Subspace::span(4, {unitVec(4, 0)}));
    CHECK(r.translationKernelFlags.twoSided);
    // C^1 G inside C(A)
    LieData d = lieData(exp4());
    CHECK(r.translationalCenter.contains(d.lowerCentralSeries[1]));
}

TEST_CASE("A4 Lie center is not an ideal and the algebra center is trivial") {
    Algebra a = a4();
    CHECK(isLeftSymmetric(a));
    Subspace zl = LieBracket::commutatorOf(a).center();
    CHECK(zl == Subspace::span(4, {unitVec(4, 0)}));
    IdealFlags f = idealFlags(a, zl);
    CHECK(!f.left);
    CHECK(!f.right);
    // the printed table forces (e1,e4,e3) = e1 != 0, so e1 is not in Z(A4)
    CHECK(a.associator(unitVec(4, 0), unitVec(4, 3), unitVec(4, 2)) == unitVec(4, 0));
    CHECK(algebraCenter(a).isZero());
}

TEST_CASE("second nilpotent example: derived values against the printed table") {
    Algebra a = h3r2();
    CHECK(isLeftSymmetric(a));
    IdentityProfile p = identityProfile(a);
    CHECK(p.id4);
    CHECK(!p.novikov);
    CHECK(!p.derivation);
    LieBracket b = LieBracket::commutatorOf(a);
    // the table gives [e2,e3] = -e1
    CHECK(b.bracketBasis(1, 2) == vecScale(q(-1), unitVec(4, 0)));
    CHECK(b.center() == Subspace::span(4, {unitVec(4, 0), unitVec(4, 3)}));
    // (e4,e3,e3) = -e1 != 0 excludes e4 from the algebra center
    CHECK(a.associator(unitVec(4, 3), unitVec(4, 2), unitVec(4, 2)) ==
          vecScale(q(-1), unitVec(4, 0)));
    Subspace z = algebraCenter(a);
    CHECK(z == Subspace::span(4, {unitVec(4, 0)}));
    // and that derived center IS a two-sided ideal here
    CHECK(idealFlags(a, z).twoSided);
}

TEST_CASE("ideal flags on the examples") {
    CHECK(idealFlags(a21(), Subspace::span(2, {unitVec(2, 1)})).twoSided);
    CHECK(!idealFlags(a4(), Subspace::span(4, {unitVec(4, 0)})).left);
    IdealFlags zf = idealFlags(exp4(), Subspace::zero(4));
    CHECK(zf.left);
    CHECK(zf.right);
    CHECK(zf.twoSided);
    CHECK(zf.lieIdeal);
}

TEST_CASE("ideal closure") {
    CHECK(idealClosure(a21(), Subspace::span(2, {unitVec(2, 1)})) ==
          Subspace::span(2, {unitVec(2, 1)}));
    CHECK(idealClosure(a2(), Subspace::span(2, {unitVec(2, 0)})) == Subspace::whole(2));
    CHECK(idealClosure(exp4(), Subspace::whole(4)) == Subspace::whole(4));
}

TEST_CASE("quotients of the worked examples") {
    // Exp4 / span{e1}: 3-dim, the only product is the image of e4*e4 = e2
    Quotient q1 = quotient(exp4(), Subspace::span(4, {unitVec(4, 0)}));
    CHECK(q1.algebra.dim() == 3);
    CHECK(q1.keptColumns == std::vector<int>{1, 2, 3});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                Scalar want = (i == 2 && j == 2 && k == 0) ? q(1) : q(0);
                CHECK(q1.algebra.structureConstant(i, j, k) == want);
            }
    IdentityProfile p = identityProfile(q1.algebra);
    CHECK(p.commutative);
    CHECK(p.id4);

    // A / A: zero algebra of dimension 0
    Quotient q2 = quotient(a21(), Subspace::whole(2));
    CHECK(q2.algebra.dim() == 0);

    // A21 / span{e2}: one-dimensional with E*E = E
    Quotient q3 = quotient(a21(), Subspace::span(2, {unitVec(2, 1)}));
    CHECK(q3.algebra.dim() == 1);
    CHECK(q3.algebra.structureConstant(0, 0, 0) == q(1));
    IdentityProfile p3 = identityProfile(q3.algebra);
    CHECK(p3.commutative);
    CHECK(p3.associative);

    CHECK_THROWS_AS(quotient(a4(), Subspace::span(4, {unitVec(4, 0)})), std::invalid_argument);
}

TEST_CASE("quotient dimensions add up") {
    Algebra a = exp4();
    for (const Subspace& ideal :
         {Subspace::span(4, {unitVec(4, 0)}), Subspace::whole(4), Subspace::zero(4)}) {
        Quotient qq = quotient(a, ideal);
        CHECK(qq.algebra.dim() + ideal.dim() == a.dim());
    }
}

TEST_CASE("inner-derivation construction on the Heisenberg bracket") {
    LieBracket h = heisenberg();
    Matrix half = Scalar(1, 2) * Matrix::identity(3);
    InnerResult r = innerFromEndo(h, half);
    CHECK(r.conditionsHold);
    // e2 * e3 = e1/2, e3 * e2 = -e1/2
    CHECK(r.algebra.basisProduct(1, 2) == vecScale(q(1, 2), unitVec(3, 0)));
    CHECK(r.algebra.basisProduct(2, 1) == vecScale(q(-1, 2), unitVec(3, 0)));
    IdentityProfile p = identityProfile(r.algebra);
    CHECK(p.id4);

    // f = identity violates the first compatibility condition
    InnerResult bad = innerFromEndo(h, Matrix::identity(3));
    CHECK(!bad.conditionsHold);
}

TEST_CASE("inner construction with an abelian bracket gives the zero product") {
    LieBracket abelian(3, Field::Rational, Vec(27));
    Matrix f(3, 3);
    f.at(0, 1) = q(5);
    f.at(2, 2) = q(-2);
    InnerResult r = innerFromEndo(abelian, f);
    CHECK(r.conditionsHold);
    CHECK(identityProfile(r.algebra).commutative);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(vecIsZero(r.algebra.basisProduct(i, j)));
}

TEST_CASE("bracket validation rejects non-Lie tensors") {
    Vec notAntisym(27);
    notAntisym[0] = q(1);  // [e1,e1] = e1
    CHECK_THROWS_AS(LieBracket(3, Field::Rational, notAntisym), std::invalid_argument);
}

TEST_CASE("commutator bracket of left-symmetric algebras satisfies Jacobi") {
    for (const Algebra& alg : {a21(), a22(), exp4(), a4(), h3r2(), d2(), a2()})
        CHECK_NOTHROW(LieBracket::commutatorOf(alg));
}
