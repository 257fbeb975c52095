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

#include "lsa/radicals.hpp"
#include "lsa/simplicity.hpp"
#include "test_util.hpp"

using namespace lsa;
using namespace lsatest;

namespace {
Scalar q(long n, long d = 1) { return Scalar(n, d); }
Scalar gi(long re, long im) { return Scalar(BigRational(re), BigRational(im)); }
}  // namespace

TEST_CASE("multiplication algebra of the simple two-dimensional algebra") {
    MultiplicationAlgebra m = multiplicationAlgebra(a2());
    CHECK(m.closure.dim() == 2);  // identity and the rotation-like operator
    CHECK(m.radical.isZero());
}

TEST_CASE("multiplication algebra of the zero algebra is trivial") {
    MultiplicationAlgebra m = multiplicationAlgebra(zeroAlgebra(3));
    CHECK(m.closure.isZero());
    CHECK(m.radical.isZero());
}

TEST_CASE("multiplication algebra of A21 has a nonzero radical") {
    MultiplicationAlgebra m = multiplicationAlgebra(a21());
    CHECK(!m.radical.isZero());
    CHECK(m.radical.dim() == 1);
}

TEST_CASE("A2 is simple over the rationals with the default seed") {
    SimplicityResult r = isSimple(a2(), 0, 32);
    CHECK(r.verdict == SimplicityVerdict::Simple);
    CHECK(r.method == "Norton certificate");
    CHECK(r.seed == 0);
    CHECK(r.elementsTried <= 32);
}

TEST_CASE("the one-dimensional field is simple") {
    CHECK(isSimple(fieldAlgebra()).verdict == SimplicityVerdict::Simple);
}

TEST_CASE("A21 is not simple with witness span{e2}") {
    SimplicityResult r = isSimple(a21());
    CHECK(r.verdict == SimplicityVerdict::NotSimple);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == Subspace::span(2, {unitVec(2, 1)}));
    CHECK(idealFlags(a21(), *r.witness).twoSided);
}

TEST_CASE("zero algebras are not simple") {
    SimplicityResult r3 = isSimple(zeroAlgebra(3));
    CHECK(r3.verdict == SimplicityVerdict::NotSimple);
    REQUIRE(r3.witness.has_value());
    CHECK(r3.witness->dim() == 1);

    SimplicityResult r1 = isSimple(zeroAlgebra(1));
    CHECK(r1.verdict == SimplicityVerdict::NotSimple);
    CHECK(!r1.witness.has_value());  // definitional exclusion, no proper ideal exists
}

TEST_CASE("every not-simple verdict on the catalog ships a verified witness") {
    for (const Algebra& alg : {a21(), a22(), exp4(), a4(), h3r2(), d2(), zeroAlgebra(2)}) {
        SimplicityResult r = isSimple(alg);
        REQUIRE(r.verdict == SimplicityVerdict::NotSimple);
        REQUIRE(r.witness.has_value());
        CHECK(!r.witness->isZero());
        CHECK(!r.witness->isWhole());
        CHECK(idealFlags(alg, *r.witness).twoSided);
    }
}

TEST_CASE("complexification re-tags the tensor") {
    Algebra c = complexify(a2());
    CHECK(c.field() == Field::Gaussian);
    CHECK(c.dim() == 2);
    CHECK(c.tensor() == a2().tensor());
    CHECK_THROWS_AS(complexify(c), std::invalid_argument);
    CHECK(complexify(zeroAlgebra(2)).field() == Field::Gaussian);
}

TEST_CASE("complexification preserves the identity profile flag for flag") {
    for (const Algebra& alg : {a21(), a22(), exp4(), d2(), a2()}) {
        IdentityProfile before = identityProfile(alg);
        IdentityProfile after = identityProfile(complexify(alg));
        CHECK(before.leftSymmetric == after.leftSymmetric);
        CHECK(before.novikov == after.novikov);
        CHECK(before.derivation == after.derivation);
        CHECK(before.id4 == after.id4);
        CHECK(before.associative == after.associative);
        CHECK(before.commutative == after.commutative);
    }
}

TEST_CASE("the complexification of A2 is not simple") {
    SimplicityResult r = isSimple(complexify(a2()), 0, 32);
    CHECK(r.verdict == SimplicityVerdict::NotSimple);
    REQUIRE(r.witness.has_value());
    // one of the two summands span{e1 +- i e2}; the deterministic element
    // order lands on span{e1 - i e2}
    Subspace expected = Subspace::span(2, {Vec{q(1), gi(0, -1)}});
    CHECK(*r.witness == expected);
    CHECK(idealFlags(complexify(a2()), *r.witness).twoSided);
    // and the conjugate line is a proper two-sided ideal as well
    Subspace conjugate = Subspace::span(2, {Vec{q(1), gi(0, 1)}});
    CHECK(idealFlags(complexify(a2()), conjugate).twoSided);
}

TEST_CASE("complexified A2 is isomorphic to a direct sum of two fields") {
    Algebra c = complexify(a2());
    Table t{{1, 1, 1, q(1)}, {2, 2, 2, q(1)}};
    Algebra ff = fromTable(2, t, "FxF", Field::Gaussian);
    // columns: images of e1 -> f1 + f2, e2 -> -i f1 + i f2
    Matrix p(2, 2);
    p.at(0, 0) = q(1);
    p.at(1, 0) = q(1);
    p.at(0, 1) = gi(0, -1);
    p.at(1, 1) = gi(0, 1);
    CHECK(isoWitness(c, ff, p));
}

TEST_CASE("iso witness basics") {
    CHECK(isoWitness(a21(), a21(), Matrix::identity(2)));
    // profiles are isomorphism invariants, so no invertible map can work
    Matrix p(2, 2);
    p.at(0, 0) = q(2);
    p.at(0, 1) = q(1);
    p.at(1, 0) = q(1);
    p.at(1, 1) = q(1);
    CHECK(!isoWitness(a21(), a22(), p));
    CHECK(!isoWitness(a21(), a22(), Matrix::identity(2)));
    Matrix sing(2, 2);
    CHECK_THROWS_AS(isoWitness(a21(), a22(), sing), std::invalid_argument);
    CHECK_THROWS_AS(isoWitness(a21(), exp4(), Matrix::identity(2)), std::invalid_argument);
}

TEST_CASE("budget exhaustion reports undecided, never a guess") {
    SimplicityResult r = isSimple(a2(), 0, 0);
    CHECK(r.verdict == SimplicityVerdict::Undecided);
    CHECK(!r.witness.has_value());
}

TEST_CASE("dimension zero is rejected") {
    CHECK_THROWS_AS(isSimple(zeroAlgebra(0)), std::invalid_argument);
}

TEST_CASE("complete Novikov algebras in the fixture set are not simple") {
    // zero algebras are complete Novikov
    for (int d : {2, 3, 4}) {
        Algebra z = zeroAlgebra(d);
        REQUIRE(isComplete(z));
        REQUIRE(identityProfile(z).novikov);
        CHECK(isSimple(z).verdict == SimplicityVerdict::NotSimple);
    }
}
