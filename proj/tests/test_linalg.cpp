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

#include "lsa/matrix.hpp"
#include "lsa/subspace.hpp"

using namespace lsa;

namespace {

Scalar q(long n, long d = 1) { return Scalar(n, d); }

Vec randomVec(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    Vec v(static_cast<size_t>(n));
    for (auto& x : v) x = Scalar(num(rng), den(rng));
    return v;
}

Subspace randomSubspace(int n, int gens, std::mt19937_64& rng) {
    std::vector<Vec> vs;
    for (int i = 0; i < gens; ++i) vs.push_back(randomVec(n, rng));
    return Subspace::span(n, vs);
}

}  // namespace

TEST_CASE("scalar arithmetic is exact and canonical") {
    Scalar a(1, 3), b(-2, 6);
    CHECK((a + b).isZero());
    CHECK(Scalar(2, 4) == Scalar(1, 2));
    Scalar z = Scalar::i() * Scalar::i();
    CHECK(z == q(-1));
    Scalar g(BigRational(1, 2), BigRational(3, 1));
    CHECK(g.str() == "(1/2)+(3)i");
    CHECK((g * g.conj()).isRational());
    CHECK(g * g.inverse() == q(1));
    CHECK(q(-1, 3).str() == "-1/3");
    CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
}

TEST_CASE("matrix product, trace, inverse") {
    Matrix a(2, 2);
    a.at(0, 0) = q(1);
    a.at(0, 1) = q(2);
    a.at(1, 0) = q(3);
    a.at(1, 1) = q(4);
    Matrix b = a * a;
    CHECK(b.at(0, 0) == q(7));
    CHECK(b.at(1, 1) == q(22));
    CHECK(a.trace() == q(5));
    auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK(*inv * a == Matrix::identity(2));
    Matrix sing(2, 2);
    sing.at(0, 0) = q(1);
    sing.at(1, 0) = q(2);
    CHECK(!sing.inverse().has_value());
}

TEST_CASE("charpoly satisfies Cayley-Hamilton on random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::uniform_int_distribution<int> num(-3, 3);
                m.at(i, j) = q(num(rng));
            }
        Vec cp = m.charpoly();
        REQUIRE(static_cast<int>(cp.size()) == n + 1);
        CHECK(cp.back() == q(1));
        // evaluate p(M)
        Matrix acc(n, n);
        for (size_t i = cp.size(); i-- > 0;) {
            acc = m * acc;
            for (int d = 0; d < n; ++d) acc.at(d, d) += cp[i];
        }
        CHECK(acc.isZero());
    }
}

TEST_CASE("charpoly of companion-style examples") {
    // rotation-like matrix [[0,1],[-1,0]] has x^2 + 1
    Matrix m(2, 2);
    m.at(0, 1) = q(1);
    m.at(1, 0) = q(-1);
    Vec cp = m.charpoly();
    CHECK(cp[0] == q(1));
    CHECK(cp[1] == q(0));
    CHECK(cp[2] == q(1));
}

TEST_CASE("nullspace basis spans the kernel") {
    Matrix m(2, 4);
    m.at(0, 0) = q(1);
    m.at(0, 2) = q(2);
    m.at(1, 1) = q(1);
    m.at(1, 3) = q(-1);
    auto ns = m.nullspaceBasis();
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns) CHECK(vecIsZero(m.apply(v)));
    CHECK(Subspace::span(4, ns).dim() == 2);
}

TEST_CASE("nested subspaces intersect correctly") {
    // intersect(span{e1,e4}, span{e1}) in ambient dim 4 -> span{e1}
    Subspace a = Subspace::span(4, {unitVec(4, 0), unitVec(4, 3)});
    Subspace b = Subspace::span(4, {unitVec(4, 0)});
    CHECK(intersect(a, b) == b);
}

TEST_CASE("complementary lines sum with exact dimension count") {
    Subspace a = Subspace::span(2, {unitVec(2, 0)});
    Subspace b = Subspace::span(2, {unitVec(2, 1)});
    Subspace s = sum(a, b);
    CHECK(s == Subspace::whole(2));
    CHECK(a.dim() + b.dim() == s.dim() + intersect(a, b).dim());
}

TEST_CASE("RREF canonicalization is idempotent") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Subspace u = randomSubspace(n, 1 + static_cast<int>(rng() % 4), rng);
        std::vector<Vec> rows;
        for (int r = 0; r < u.dim(); ++r) rows.push_back(u.basisVector(r));
        CHECK(Subspace::span(n, rows) == u);
    }
}

TEST_CASE("subspace lattice properties on random pairs") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Subspace u = randomSubspace(n, 1 + static_cast<int>(rng() % 3), rng);
        Subspace v = randomSubspace(n, 1 + static_cast<int>(rng() % 3), rng);
        Subspace s = sum(u, v);
        Subspace i = intersect(u, v);
        CHECK(s.contains(u));
        CHECK(u.contains(i));
        CHECK(v.contains(i));
        CHECK(u.dim() + v.dim() == s.dim() + i.dim());
        for (int r = 0; r < u.dim(); ++r) CHECK(s.contains(u.basisVector(r)));
    }
}

TEST_CASE("membership, coordinates and reduction") {
    Subspace u = Subspace::span(3, {Vec{q(1), q(0), q(2)}, Vec{q(0), q(1), q(-1)}});
    Vec member{q(2), q(3), q(1)};
    CHECK(u.contains(member));
    Vec coords = u.coordinates(member);
    REQUIRE(coords.size() == 2);
    CHECK(coords[0] == q(2));
    CHECK(coords[1] == q(3));
    Vec outside{q(0), q(0), q(1)};
    CHECK(!u.contains(outside));
    CHECK_THROWS(u.coordinates(outside));
}

TEST_CASE("ambient dimension mismatch is rejected") {
    Subspace a = Subspace::span(3, {unitVec(3, 0)});
    Subspace b = Subspace::span(4, {unitVec(4, 0)});
    CHECK_THROWS_AS(sum(a, b), std::invalid_argument);
    CHECK_THROWS_AS(intersect(a, b), std::invalid_argument);
}

TEST_CASE("subspace printing is canonical") {
    CHECK(Subspace::span(4, {unitVec(4, 0)}).str() == "span{e1}");
    CHECK(Subspace::zero(2).str() == "0");
    Subspace u = Subspace::span(3, {Vec{q(2), q(0), q(-4)}});
    CHECK(u.str() == "span{e1 - 2*e3}");
}
