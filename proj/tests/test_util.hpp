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

#ifndef LSAKIT_TEST_UTIL_HPP
#define LSAKIT_TEST_UTIL_HPP

#include <tuple>
#include <vector>

#include "lsa/algebra.hpp"

namespace lsatest {

using lsa::Algebra;
using lsa::Field;
using lsa::Scalar;
using lsa::Vec;

// (i, j, k, c) entries meaning e_i * e_j = ... + c * e_k, 1-based indices.
using Table = std::vector<std::tuple<int, int, int, Scalar>>;

inline Algebra fromTable(int dim, const Table& entries, const std::string& name,
                         Field field = Field::Rational) {
    Vec t(static_cast<size_t>(dim) * static_cast<size_t>(dim) * static_cast<size_t>(dim));
    for (const auto& [i, j, k, c] : entries)
        t[(static_cast<size_t>(i - 1) * static_cast<size_t>(dim) + static_cast<size_t>(j - 1)) *
              static_cast<size_t>(dim) +
          static_cast<size_t>(k - 1)] = c;
    return Algebra(dim, field, std::move(t), name);
}

// e1*e1 = e1, e1*e2 = e2 (affine-line family, satisfies the (4) identity)
inline Algebra a21() { return fromTable(2, {{1, 1, 1, 1}, {1, 2, 2, 1}}, "A21"); }

// e1*e1 = -e1, e2*e1 = -e2 (Novikov, fails the (4) identity)
inline Algebra a22() { return fromTable(2, {{1, 1, 1, -1}, {2, 1, 2, -1}}, "A22"); }

// Completed 3-dim derivation family: e1*e1 = a*e2 + b*e3, e1*e2 = e2 + g*e3,
// e2*e1 = g*e3, e1*e3 = e3.
inline Algebra a3gamma(const Scalar& a, const Scalar& b, const Scalar& g) {
    return fromTable(3,
                     {{1, 1, 2, a}, {1, 1, 3, b}, {1, 2, 2, Scalar(1)}, {1, 2, 3, g},
                      {2, 1, 3, g}, {1, 3, 3, Scalar(1)}},
                     "A3gamma");
}

// e2*e3 = e3*e4 = e4*e3 = e1, e4*e4 = e2 (complete, satisfies (4))
inline Algebra exp4() {
    return fromTable(4, {{2, 3, 1, 1}, {3, 4, 1, 1}, {4, 3, 1, 1}, {4, 4, 2, 1}}, "Exp4");
}

// e1*e4 = e4*e1 = e2, e2*e3 = e1, e2*e4 = -e3, e3*e3 = e2
inline Algebra a4() {
    return fromTable(4, {{1, 4, 2, 1}, {4, 1, 2, 1}, {2, 3, 1, 1}, {2, 4, 3, -1}, {3, 3, 2, 1}},
                     "A4");
}

// e2*e3 = e1, e3*e2 = 2e1, e3*e3 = e4, e3*e4 = e4*e3 = e2, e4*e4 = 2e1
inline Algebra h3r2() {
    return fromTable(4,
                     {{2, 3, 1, 1}, {3, 2, 1, 2}, {3, 3, 4, 1}, {3, 4, 2, 1}, {4, 3, 2, 1},
                      {4, 4, 1, 2}},
                     "H3R2");
}

// e1*e1 = e1, e1*e2 = e2*e1 = e2 (2-dim commutative associative)
inline Algebra d2() { return fromTable(2, {{1, 1, 1, 1}, {1, 2, 2, 1}, {2, 1, 2, 1}}, "D2"); }

// e1*e1 = e1, e1*e2 = e2*e1 = e2, e2*e2 = -e1 (simple over Q)
inline Algebra a2() {
    return fromTable(2, {{1, 1, 1, 1}, {1, 2, 2, 1}, {2, 1, 2, 1}, {2, 2, 1, -1}}, "A2");
}

inline Algebra zeroAlgebra(int dim) {
    return Algebra(dim, Field::Rational,
                   Vec(static_cast<size_t>(dim) * static_cast<size_t>(dim) *
                       static_cast<size_t>(dim)),
                   "zero" + std::to_string(dim));
}

inline Algebra fieldAlgebra() { return fromTable(1, {{1, 1, 1, 1}}, "F1"); }

}  // namespace lsatest

#endif
