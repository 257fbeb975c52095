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

#ifndef LSAKIT_SUBSPACE_HPP
#define LSAKIT_SUBSPACE_HPP

#include "lsa/matrix.hpp"

namespace lsa {

/// Linear subspace of F^n held as a canonical reduced-row-echelon basis
/// (one row per basis vector, pivots strictly increasing, pivot entries 1,
/// pivot columns otherwise zero). Canonicality makes equality a matrix
/// comparison and every derived report deterministic.
class Subspace {
public:
    explicit Subspace(int ambientDim) : ambient_(ambientDim), basis_(0, ambientDim) {}

    static Subspace span(int ambientDim, const std::vector<Vec>& vectors);
    static Subspace whole(int ambientDim);
    static Subspace zero(int ambientDim) { return Subspace(ambientDim); }

    int ambientDim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    bool isZero() const { return dim() == 0; }
    bool isWhole() const { return dim() == ambient_; }

    const Matrix& basis() const { return basis_; }
    Vec basisVector(int r) const { return basis_.row(r); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    /// Reduce v against the basis; zero remainder iff v is a member.
    Vec reduce(const Vec& v) const;

    /// Coordinates of a member vector in the RREF basis (pivot-column reads).
    /// Throws if v is not a member.
    Vec coordinates(const Vec& v) const;

    std::vector<int> pivotColumns() const;
    /// Ambient coordinates not used as pivots, ascending.
    std::vector<int> freeColumns() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    friend Subspace sum(const Subspace& a, const Subspace& b);
    friend Subspace intersect(const Subspace& a, const Subspace& b);

    std::string str() const;  // e.g. "span{e1, e2 - 3*e4}" or "0" or "whole"

private:
    static void checkSameAmbient(const Subspace& a, const Subspace& b);

    int ambient_;
    Matrix basis_;
};

}  // namespace lsa

#endif
