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

#include "lsa/algebra.hpp"
#include "test_util.hpp"

using namespace lsa;
using namespace lsatest;

namespace {

Scalar q(long n, long d = 1) { return Scalar(n, d); }

Vec randomVec(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    Vec v(static_cast<size_t>(n));
    for (auto& x : v) x = q(num(rng));
    return v;
}

}  // namespace

TEST_CASE("product reads the structure tensor on basis vectors") {
    Algebra e4 = exp4();
    CHECK(e4.product(unitVec(4, 1), unitVec(4, 2)) == unitVec(4, 0));  // e2*e3 = e1
    CHECK(vecIsZero(e4.product(randomVec(4, *(new std::mt19937_64(1))), zeroVec(4))));
    // (e2+e4)*e3 = 2e1
    Vec x = vecAdd(unitVec(4, 1), unitVec(4, 3));
    Vec want = vecScale(q(2), unitVec(4, 0));
    CHECK(e4.product(x, unitVec(4, 2)) == want);
}

TEST_CASE("product is bilinear on random vectors") {
    std::mt19937_64 rng(5);
    Algebra e4 = exp4();
    for (int t = 0; t < 25; ++t) {
        Vec x = randomVec(4, rng), xp = randomVec(4, rng), y = randomVec(4, rng);
        Vec lhs = e4.product(vecAdd(x, xp), y);
        Vec rhs = vecAdd(e4.product(x, y), e4.product(xp, y));
        CHECK(lhs == rhs);
        Scalar c = q(3, 2);
        CHECK(e4.product(x, vecScale(c, y)) == vecScale(c, e4.product(x, y)));
    }
}

TEST_CASE("multiplication operators match the product") {
    Algebra a = a21();
    CHECK(a.leftMul(unitVec(2, 0)) == Matrix::identity(2));  // L_e1 = id
    CHECK(a.leftMul(unitVec(2, 1)).isZero());                // L_e2 = 0
    Algebra b = a22();
    CHECK(b.rightMul(unitVec(2, 0)) == q(-1) * Matrix::identity(2));  // R_e1 = -id

    std::mt19937_64 rng(9);
    for (int t = 0; t < 10; ++t) {
        Vec x = randomVec(4, rng), y = randomVec(4, rng);
        Algebra e4 = exp4();
        CHECK(e4.leftMul(x).apply(y) == e4.product(x, y));
        CHECK(e4.rightMul(x).apply(y) == e4.product(y, x));
    }
}

TEST_CASE("associator values") {
    Algebra e4 = exp4();
    // (e4,e4,e3) = e2*e3 - e4*e1 = e1
    CHECK(e4.associator(unitVec(4, 3), unitVec(4, 3), unitVec(4, 2)) == unitVec(4, 0));
    std::mt19937_64 rng(3);
    Vec x = randomVec(4, rng), y = randomVec(4, rng);
    CHECK(vecIsZero(e4.associator(x, y, zeroVec(4))));
    Algebra a = a21();
    CHECK(vecIsZero(a.associator(unitVec(2, 0), unitVec(2, 0), unitVec(2, 1))));
}

TEST_CASE("identity battery on the affine-line pair") {
    IdentityProfile p21 = identityProfile(a21());
    CHECK(p21.leftSymmetric);
    CHECK(p21.id4);
    CHECK(!p21.novikov);
    CHECK(!p21.derivation);
    CHECK(p21.associative);
    CHECK(!p21.commutative);
    REQUIRE(p21.novikovWitness.has_value());
    // lexicographically smallest counterexample (x*y)*z != (x*z)*y
    CHECK(*p21.novikovWitness == std::array<int, 3>{1, 1, 2});

    IdentityProfile p22 = identityProfile(a22());
    CHECK(p22.leftSymmetric);
    CHECK(p22.novikov);
    CHECK(!p22.derivation);
    CHECK(!p22.id4);
    CHECK(!p22.commutative);
}

TEST_CASE("identity battery on the zero algebra") {
    IdentityProfile p = identityProfile(zeroAlgebra(3));
    CHECK(p.leftSymmetric);
    CHECK(p.novikov);
    CHECK(p.derivation);
    CHECK(p.id4);
    CHECK(p.associative);
    CHECK(p.commutative);
}

TEST_CASE("derivation family profile across parameters") {
    for (long g : {0L, 1L, -2L}) {
        IdentityProfile p = identityProfile(a3gamma(q(1), q(-1, 2), q(g)));
        CHECK(p.leftSymmetric);
        CHECK(p.derivation);
        CHECK(p.novikov == (g == 0));
        CHECK(p.id4 == (g == 0));
    }
}

TEST_CASE("commutative left-symmetric algebras satisfy everything") {
    IdentityProfile p = identityProfile(d2());
    CHECK(p.commutative);
    CHECK(p.leftSymmetric);
    CHECK(p.novikov);
    CHECK(p.derivation);
    CHECK(p.id4);
    CHECK(p.associative);
}

TEST_CASE("exp4 satisfies (4) but not the other two") {
    IdentityProfile p = identityProfile(exp4());
    CHECK(p.leftSymmetric);
    CHECK(p.id4);
    CHECK(!p.novikov);
    CHECK(!p.derivation);
    CHECK(!p.associative);
}

TEST_CASE("never exactly two of the three identities hold") {
    std::vector<Algebra> algebras{a21(),        a22(),  exp4(), a4(), h3r2(), d2(), a2(),
                                  zeroAlgebra(3), fieldAlgebra()};
    for (long g : {0L, 1L, 3L}) algebras.push_back(a3gamma(q(0), q(1), q(g)));
    for (const Algebra& a : algebras) {
        IdentityProfile p = identityProfile(a);
        int count = (p.novikov ? 1 : 0) + (p.derivation ? 1 : 0) + (p.id4 ? 1 : 0);
        CHECK(count != 2);
    }
}

TEST_CASE("opposite-negative transform") {
    Algebra op = oppositeNegative(a21());
    CHECK(op == a22());
    CHECK(oppositeNegative(op) == a21());
    CHECK(oppositeNegative(zeroAlgebra(2)) == zeroAlgebra(2));

    // associative is preserved both ways; A21 associative and satisfying (4)
    // turns into a Novikov algebra.
    IdentityProfile p = identityProfile(op);
    CHECK(p.associative);
    CHECK(p.novikov);
}

TEST_CASE("opposite-negative swaps (4) with Novikov on associative algebras") {
    std::vector<Algebra> assoc{a21(), a22(), d2(), a2(), zeroAlgebra(2), fieldAlgebra()};
    for (const Algebra& a : assoc) {
        IdentityProfile p = identityProfile(a);
        REQUIRE(p.associative);
        IdentityProfile po = identityProfile(oppositeNegative(a));
        CHECK(p.id4 == po.novikov);
        CHECK(po.associative);
    }
}

TEST_CASE("product span over subspaces") {
    Algebra e4 = exp4();
    Subspace u = Subspace::span(4, {unitVec(4, 1)});
    Subspace v = Subspace::span(4, {unitVec(4, 2)});
    CHECK(productSpan(e4, u, v) == Subspace::span(4, {unitVec(4, 0)}));
    CHECK_THROWS_AS(productSpan(e4, Subspace::span(3, {unitVec(3, 0)}), v),
                    std::invalid_argument);
}

TEST_CASE("restriction to a product-closed subspace") {
    Algebra a = a21();
    Subspace s = Subspace::span(2, {unitVec(2, 1)});
    Algebra r = restrictToSubalgebra(a, s);
    CHECK(r.dim() == 1);
    CHECK(r.structureConstant(0, 0, 0).isZero());
    Subspace diag = Subspace::span(2, {vecAdd(unitVec(2, 0), unitVec(2, 1))});
    // e1+e2 squares to e1+e2 in A21, so the line is closed
    Algebra rd = restrictToSubalgebra(a21(), diag);
    CHECK(rd.structureConstant(0, 0, 0) == q(1));
}

TEST_CASE("rational-tagged algebras reject gaussian entries") {
    Vec t(8);
    t[0] = Scalar(BigRational(0), BigRational(1));
    CHECK_THROWS_AS(Algebra(2, Field::Rational, t), std::invalid_argument);
    CHECK_NOTHROW(Algebra(2, Field::Gaussian, t));
}
