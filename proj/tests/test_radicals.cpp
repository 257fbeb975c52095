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
#include "test_util.hpp"

using namespace lsa;
using namespace lsatest;

namespace {
Scalar q(long n, long d = 1) { return Scalar(n, d); }
Subspace line(int n, int i) { return Subspace::span(n, {unitVec(n, i)}); }
}  // namespace

TEST_CASE("trace kernel values") {
    // A21: tr R_e1 = 1, tr R_e2 = 0
    CHECK(traceKernel(a21()) == line(2, 1));
    CHECK(traceKernel(zeroAlgebra(3)) == Subspace::whole(3));
    // two-dim commutative example: tr R_e1 = 2
    CHECK(traceKernel(d2()) == line(2, 1));
    CHECK(traceKernel(a22()) == line(2, 1));
}

TEST_CASE("largest left ideal inside a subspace") {
    CHECK(largestLeftIdealIn(a21(), line(2, 1)) == line(2, 1));
    // A22, S = span{e1}: one refinement step empties it (e2*e1 = -e2)
    CHECK(largestLeftIdealIn(a22(), line(2, 0)).isZero());
    CHECK(largestLeftIdealIn(exp4(), Subspace::whole(4)) == Subspace::whole(4));
}

TEST_CASE("Koszul radical on the examples") {
    CHECK(koszulRadical(d2()) == line(2, 1));
    Subspace r21 = koszulRadical(a21());
    CHECK(r21 == line(2, 1));
    // contains the derived ideal
    Subspace derived =
        LieBracket::commutatorOf(a21()).bracketSpan(Subspace::whole(2), Subspace::whole(2));
    CHECK(r21.contains(derived));
    CHECK(koszulRadical(zeroAlgebra(2)) == Subspace::whole(2));
    // complete algebras: the radical is everything
    CHECK(koszulRadical(exp4()) == Subspace::whole(4));
}

TEST_CASE("completeness") {
    CHECK(isComplete(zeroAlgebra(3)));
    CHECK(!isComplete(a21()));
    CHECK(!isComplete(a2()));
    CHECK(isComplete(exp4()));
    CHECK(isComplete(h3r2()));
    for (long g : {0L, 2L}) CHECK(isComplete(a3gamma(q(1), q(1), q(g))));
    CHECK_NOTHROW(completenessCrossCheck(exp4(), 100, 1));
    CHECK_NOTHROW(completenessCrossCheck(a21(), 100, 1));
}

TEST_CASE("left and right nilpotency of ideals") {
    // Exp4, I = [A,A] = span{e1}: L_e1 = 0, R_e1 = 0
    NilpotencyCheck c = nilpotentIdealChecks(exp4(), line(4, 0));
    CHECK(c.leftNilpotent);
    REQUIRE(c.leftIndex.has_value());
    CHECK(*c.leftIndex == 1);
    CHECK(c.rightNilpotent);

    // A22, I = span{e2}: R_e2 = 0 but L is not nilpotent? L_e2: e2*e1 = -e2
    NilpotencyCheck c2 = nilpotentIdealChecks(a22(), line(2, 1));
    CHECK(c2.rightNilpotent);
    REQUIRE(c2.rightIndex.has_value());
    CHECK(*c2.rightIndex == 1);

    // A22, I = A: R_e1 = -id has trace -2
    NilpotencyCheck c3 = nilpotentIdealChecks(a22(), Subspace::whole(2));
    CHECK(!c3.rightNilpotent);
    bool indexOnlyForNilpotentSides = !c3.index().has_value() || c3.leftNilpotent;
    CHECK(indexOnlyForNilpotentSides);

    CHECK_THROWS_AS(nilpotentIdealChecks(a4(), line(4, 0)), std::invalid_argument);
}

TEST_CASE("Novikov right radical") {
    CHECK(novikovRightRadical(a22()) == line(2, 1));
    CHECK(novikovRightRadical(d2()) == line(2, 1));
    CHECK(novikovRightRadical(zeroAlgebra(3)) == Subspace::whole(3));
    // simple folds the radical to zero
    CHECK(novikovRightRadical(a2()).isZero());
    // not Novikov
    CHECK_THROWS_AS(novikovRightRadical(a21()), std::invalid_argument);
}

TEST_CASE("the printed trace-kernel equality holds on nilpotent-flavoured instances only") {
    CHECK(novikovTraceKernelEqualsRadical(a22()));
    CHECK(novikovTraceKernelEqualsRadical(d2()));
    CHECK(novikovTraceKernelEqualsRadical(zeroAlgebra(2)));
    // the two-dimensional simple algebra falsifies it: I = span{e2} is not
    // even a subalgebra, while N = R = 0
    CHECK(!novikovTraceKernelEqualsRadical(a2()));
    CHECK(traceKernel(a2()) == line(2, 1));
}

TEST_CASE("derivation split of the two-dimensional example") {
    DerivationSplit s = derivationSplit(d2());
    CHECK(s.a0.isZero());
    CHECK(s.aStar == Subspace::whole(2));
    REQUIRE(s.unitElement.has_value());
    CHECK(*s.unitElement == unitVec(2, 0));  // identity element e1
}

TEST_CASE("derivation split of complete derivation algebras is trivial") {
    for (long g : {0L, 1L, -3L}) {
        DerivationSplit s = derivationSplit(a3gamma(q(2), q(1, 2), q(g)));
        CHECK(s.a0 == Subspace::whole(3));
        CHECK(s.aStar.isZero());
        CHECK(!s.unitElement.has_value());
    }
    DerivationSplit z = derivationSplit(zeroAlgebra(3));
    CHECK(z.a0 == Subspace::whole(3));
    CHECK(z.aStar.isZero());
}

TEST_CASE("derivation split of a mixed direct sum") {
    // D2 ⊕ (zero algebra of dim 1): A0 = span{e3}, AStar = span{e1,e2}
    Algebra mixed = fromTable(3, {{1, 1, 1, 1}, {1, 2, 2, 1}, {2, 1, 2, 1}}, "D2+zero");
    REQUIRE(identityProfile(mixed).derivation);
    DerivationSplit s = derivationSplit(mixed);
    CHECK(s.aStar == Subspace::span(3, {unitVec(3, 0), unitVec(3, 1)}));
    CHECK(s.a0 == Subspace::span(3, {unitVec(3, 2)}));
    REQUIRE(s.unitElement.has_value());
    CHECK(*s.unitElement == unitVec(3, 0));
}

TEST_CASE("derivation split of a direct sum of two unital pieces") {
    // D2 ⊕ A2: commutative associative, AStar should be everything
    Algebra twoUnits = fromTable(
        4, {{1, 1, 1, 1}, {1, 2, 2, 1}, {2, 1, 2, 1}, {3, 3, 3, 1}, {3, 4, 4, 1}, {4, 3, 4, 1},
            {4, 4, 3, -1}},
        "D2+A2");
    REQUIRE(identityProfile(twoUnits).derivation);
    DerivationSplit s = derivationSplit(twoUnits);
    CHECK(s.aStar == Subspace::whole(4));
    CHECK(s.a0.isZero());
    REQUIRE(s.unitElement.has_value());
    CHECK(*s.unitElement == vecAdd(unitVec(4, 0), unitVec(4, 2)));  // e1 + e3
}

TEST_CASE("split rejects non-derivation algebras") {
    CHECK_THROWS_AS(derivationSplit(a21()), std::invalid_argument);
    CHECK_THROWS_AS(derivationSplit(exp4()), std::invalid_argument);
}

TEST_CASE("radical report assembles the pieces") {
    RadicalReport r = radicalReport(a22());
    CHECK(r.traceKernel == line(2, 1));
    CHECK(r.koszulRadical == line(2, 1));
    CHECK(!r.complete);
    REQUIRE(r.novikovRadical.has_value());
    CHECK(*r.novikovRadical == line(2, 1));
    CHECK(!r.split.has_value());

    RadicalReport rd = radicalReport(d2());
    REQUIRE(rd.split.has_value());
    CHECK(rd.split->a0.isZero());
    CHECK(rd.derivedInRadical);  // [A,A] = 0
}
