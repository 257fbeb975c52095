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

#include "lsa/catalog.hpp"
#include "lsa/format.hpp"
#include "test_util.hpp"

using namespace lsa;
using namespace lsatest;

namespace {
Scalar q(long n, long d = 1) { return Scalar(n, d); }

CatalogParams a3Params(long a, long b, long g) {
    return {{"alpha", q(a)}, {"beta", q(b)}, {"gamma", q(g)}};
}
}  // namespace

TEST_CASE("parser reproduces the fixture tables") {
    CHECK(parseAlgebra("dim 2\nfield Q\ne1*e1 = e1\ne1*e2 = e2\n") == a21());
    CHECK(parseAlgebra("dim 1\nfield Q\n") == zeroAlgebra(1));
    CHECK(parseAlgebra("dim 4\nfield Q\ne2*e3 = e1\ne3*e4 = e1\ne4*e3 = e1\ne4*e4 = e2\n") ==
          exp4());
}

TEST_CASE("parser handles comments, spacing and coefficients") {
    Algebra a = parseAlgebra(
        "# a comment\n"
        "dim 3\n"
        "field Q   # trailing comment\n"
        "\n"
        "e1*e2 = 2*e2 - 1/3*e3\n"
        "e2*e1 = 0\n");
    CHECK(a.structureConstant(0, 1, 1) == q(2));
    CHECK(a.structureConstant(0, 1, 2) == q(-1, 3));
    CHECK(vecIsZero(a.basisProduct(1, 0)));
}

TEST_CASE("parser handles gaussian coefficients") {
    Algebra a = parseAlgebra("dim 2\nfield Qi\ne1*e1 = (1/2)+(3)i*e2\ne2*e2 = (2)i*e1\n");
    CHECK(a.field() == Field::Gaussian);
    CHECK(a.structureConstant(0, 0, 1) == Scalar(BigRational(1, 2), BigRational(3)));
    CHECK(a.structureConstant(1, 1, 0) == Scalar(BigRational(0), BigRational(2)));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parseAlgebra("dim 2\ne1*e1 = e3\n"), ParseError);
    CHECK_THROWS_AS(parseAlgebra("e1*e1 = e1\n"), ParseError);          // dim first
    CHECK_THROWS_AS(parseAlgebra("dim 2\ne1*e1 = e1\ne1*e1 = e2\n"), ParseError);  // duplicate
    CHECK_THROWS_AS(parseAlgebra("dim 2\nfield Q\ne1*e1 = (1)i*e1\n"), ParseError);
    CHECK_THROWS_AS(parseAlgebra("dim 2\nfield Q\ne1*e1 = 1/0*e1\n"), ParseError);
    CHECK_THROWS_AS(parseAlgebra(""), ParseError);
    try {
        parseAlgebra("dim 2\nfield Q\ne1*e1 = e9\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.col() > 1);
    }
}

TEST_CASE("serialize-parse round trip on all catalog entries") {
    for (const std::string& name : catalogNames()) {
        CatalogParams params;
        if (name == "A3gamma") params = a3Params(1, -2, 3);
        if (name == "zero") params = {{"dim", q(3)}};
        CatalogEntry e = getExample(name, params);
        Algebra reparsed = parseAlgebra(serializeAlgebra(e.algebra));
        CHECK(reparsed == e.algebra);
        // the stored source text is in the same grammar
        CHECK(parseAlgebra(e.sourceText) == e.algebra);
    }
}

TEST_CASE("round trip keeps gaussian tables") {
    Algebra a = parseAlgebra("dim 2\nfield Qi\ne1*e2 = (0)+(-1)i*e1 + 3*e2\n");
    CHECK(parseAlgebra(serializeAlgebra(a)) == a);
}

TEST_CASE("lin-comb parsing for ideal specs") {
    Vec v = parseLinComb("e1 + 2*e3", 4, Field::Rational);
    CHECK(v == Vec{q(1), q(0), q(2), q(0)});
    auto vs = parseVectorList("e2, e1 - e4", 4, Field::Rational);
    REQUIRE(vs.size() == 2);
    CHECK(vs[1] == Vec{q(1), q(0), q(0), q(-1)});
    CHECK_THROWS_AS(parseLinComb("e5", 4, Field::Rational), ParseError);
}

TEST_CASE("all fixed catalog fixtures pass") {
    for (const std::string& name : {"A21", "A22", "exp4", "A4", "H3R2", "D2", "A2", "F1"}) {
        CatalogEntry e = getExample(name);
        FixtureReport r = runFixtures(e);
        for (const auto& res : r.results) {
            INFO(name, " ", res.expectation.path, ": expected ", res.expectation.expected,
                 ", got ", res.actual);
            CHECK(res.pass);
        }
    }
}

TEST_CASE("parametric and sized fixtures pass") {
    for (auto [a, b, g] : {std::tuple<long, long, long>{0, 0, 0},
                           {1, 2, 0},
                           {1, -1, 1},
                           {0, 2, -3},
                           {2, 1, 5}}) {
        CatalogEntry e = getExample("A3gamma", a3Params(a, b, g));
        FixtureReport r = runFixtures(e);
        for (const auto& res : r.results) {
            INFO("A3gamma(", a, ",", b, ",", g, ") ", res.expectation.path, ": expected ",
                 res.expectation.expected, ", got ", res.actual);
            CHECK(res.pass);
        }
        CHECK(!r.findings.empty());
    }
    for (long d : {1L, 3L, 5L}) {
        CatalogEntry e = getExample("zero", {{"dim", q(d)}});
        CHECK(runFixtures(e).allPass());
    }
}

TEST_CASE("the three table-vs-prose conflicts are reported as findings") {
    CHECK(getExample("A4").discrepancyLog.size() == 1);
    CHECK(getExample("H3R2").discrepancyLog.size() == 2);
    CHECK(getExample("A3gamma", a3Params(0, 0, 1)).discrepancyLog.size() == 1);
    // and they are findings, not failures
    FixtureReport r = runFixtures(getExample("A4"));
    CHECK(r.allPass());
    CHECK(!r.findings.empty());
}

TEST_CASE("derived expectations name their oracle") {
    for (const std::string& name : catalogNames()) {
        CatalogParams params;
        if (name == "A3gamma") params = a3Params(1, 1, 1);
        if (name == "zero") params = {{"dim", q(2)}};
        for (const Expectation& ex : getExample(name, params).expectations)
            if (ex.provenance == Provenance::Derived) {
                INFO(name, " ", ex.path);
                CHECK(!ex.note.empty());
            }
    }
}

TEST_CASE("unknown names and missing parameters are rejected") {
    CHECK_THROWS_AS(getExample("nope"), std::invalid_argument);
    CHECK_THROWS_AS(getExample("A3gamma"), std::invalid_argument);
    CHECK_THROWS_AS(getExample("zero"), std::invalid_argument);
}
