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

#include "lsa/generators.hpp"

namespace lsa {

namespace {

Scalar smallRational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    return Scalar(num(rng), den(rng));
}

size_t tensorIndex(int n, int i, int j, int k) {
    return (static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)) *
               static_cast<size_t>(n) +
           static_cast<size_t>(k);
}

}  // namespace

Algebra randomCommutativeAssociative(int dim, std::mt19937_64& rng) {
    Matrix p(dim, dim);
    std::optional<Matrix> pInv;
    do {
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) p.at(i, j) = smallRational(rng);
        pInv = p.inverse();
    } while (!pInv);
    Vec tensor(static_cast<size_t>(dim) * static_cast<size_t>(dim) * static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Vec pi = p.col(i), pj = p.col(j);
            Vec pointwise(static_cast<size_t>(dim));
            for (int k = 0; k < dim; ++k)
                pointwise[static_cast<size_t>(k)] =
                    pi[static_cast<size_t>(k)] * pj[static_cast<size_t>(k)];
            Vec prod = pInv->apply(pointwise);
            for (int k = 0; k < dim; ++k)
                tensor[tensorIndex(dim, i, j, k)] = prod[static_cast<size_t>(k)];
        }
    return Algebra(dim, Field::Rational, std::move(tensor), "commutative-conjugated");
}

InnerSample randomInnerOnNilpotent(int dim, int centerDim, std::mt19937_64& rng) {
    if (centerDim < 1 || centerDim >= dim)
        throw std::invalid_argument("randomInnerOnNilpotent: need 1 <= centerDim < dim");
    const int head = dim - centerDim;
    Vec tensor(static_cast<size_t>(dim) * static_cast<size_t>(dim) * static_cast<size_t>(dim));
    // Brackets of the leading part land in the tail span; the tail is central.
    // That forces 2-step nilpotency and the Jacobi identity outright.
    for (int i = 0; i < head; ++i)
        for (int j = i + 1; j < head; ++j)
            for (int k = head; k < dim; ++k) {
                Scalar c = smallRational(rng);
                tensor[tensorIndex(dim, i, j, k)] = c;
                tensor[tensorIndex(dim, j, i, k)] = -c;
            }
    LieBracket bracket(dim, Field::Rational, std::move(tensor));
    Matrix f = Scalar(1, 2) * Matrix::identity(dim);
    for (int k = head; k < dim; ++k)
        for (int i = 0; i < dim; ++i) f.at(k, i) += smallRational(rng);
    InnerResult inner = innerFromEndo(bracket, f);
    if (!inner.conditionsHold)
        throw InternalConsistencyError(
            "randomInnerOnNilpotent: construction must satisfy the compatibility conditions");
    return {bracket, f, inner.algebra.withName("inner-nilpotent")};
}

Algebra randomDerivationFamilySample(std::mt19937_64& rng) {
    Scalar alpha = smallRational(rng);
    Scalar beta = smallRational(rng);
    std::uniform_int_distribution<int> quarter(0, 3);
    Scalar gamma = quarter(rng) == 0 ? Scalar(0) : smallRational(rng);
    Vec tensor(27);
    auto set = [&](int i, int j, int k, const Scalar& c) {
        tensor[tensorIndex(3, i - 1, j - 1, k - 1)] = c;
    };
    set(1, 1, 2, alpha);
    set(1, 1, 3, beta);
    set(1, 2, 2, Scalar(1));
    set(1, 2, 3, gamma);
    set(2, 1, 3, gamma);
    set(1, 3, 3, Scalar(1));
    return Algebra(3, Field::Rational, std::move(tensor), "derivation-family");
}

std::vector<GeneratedAlgebra> generateFamilies(int commutative, int inner, int a3,
                                               uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<GeneratedAlgebra> out;
    std::uniform_int_distribution<int> commDim(1, 5);
    for (int t = 0; t < commutative; ++t)
        out.push_back({randomCommutativeAssociative(commDim(rng), rng), "commutative"});
    std::uniform_int_distribution<int> innerDim(3, 6);
    for (int t = 0; t < inner; ++t) {
        int dim = innerDim(rng);
        std::uniform_int_distribution<int> center(1, dim - 2);
        out.push_back({randomInnerOnNilpotent(dim, center(rng), rng).algebra, "inner"});
    }
    for (int t = 0; t < a3; ++t)
        out.push_back({randomDerivationFamilySample(rng), "a3"});
    return out;
}

}  // namespace lsa
