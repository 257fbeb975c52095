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

#ifndef LSAKIT_ALGEBRA_HPP
#define LSAKIT_ALGEBRA_HPP

#include <array>
#include <optional>

#include "lsa/subspace.hpp"

namespace lsa {

/// Raised when two provably-equivalent computation routes disagree; it
/// always indicates a bug in this library, never bad input.
class InternalConsistencyError : public std::logic_error {
public:
    explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

/// Finite-dimensional algebra over Q or Q(i), given by its structure-constant
/// tensor: e_i * e_j = sum_k c[i][j][k] e_k. Immutable after construction.
class Algebra {
public:
    Algebra(int dim, Field field, Vec tensor, std::string name = "");

    int dim() const { return dim_; }
    Field field() const { return field_; }
    const std::string& name() const { return name_; }
    const Vec& tensor() const { return tensor_; }

    const Scalar& structureConstant(int i, int j, int k) const { return tensor_[idx(i, j, k)]; }

    /// e_i * e_j as a coordinate vector (reads the tensor row).
    Vec basisProduct(int i, int j) const;
    /// Bilinear extension of the structure tensor.
    Vec product(const Vec& x, const Vec& y) const;
    Vec associator(const Vec& x, const Vec& y, const Vec& z) const;

    Matrix leftMul(const Vec& x) const;   // L_x: y -> x*y
    Matrix rightMul(const Vec& x) const;  // R_x: y -> y*x
    Matrix leftMulBasis(int i) const { return leftMul(unitVec(dim_, i)); }
    Matrix rightMulBasis(int i) const { return rightMul(unitVec(dim_, i)); }

    Algebra withName(std::string name) const;

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.dim_ == b.dim_ && a.field_ == b.field_ && a.tensor_ == b.tensor_;
    }

private:
    size_t idx(int i, int j, int k) const {
        if (i < 0 || i >= dim_ || j < 0 || j >= dim_ || k < 0 || k >= dim_)
            throw std::out_of_range("Algebra: basis index out of range");
        return (static_cast<size_t>(i) * static_cast<size_t>(dim_) + static_cast<size_t>(j)) *
                   static_cast<size_t>(dim_) +
               static_cast<size_t>(k);
    }

    int dim_;
    Field field_;
    Vec tensor_;
    std::string name_;
};

/// Identity battery result. Every flag is decided by exhaustive evaluation of
/// the identity on basis triples (exact by multilinearity) and cross-checked
/// against its multiplication-operator form; a mismatch raises
/// InternalConsistencyError. A failed flag carries its lexicographically
/// smallest falsifying basis triple (1-based).
struct IdentityProfile {
    bool leftSymmetric = false;
    bool novikov = false;
    bool derivation = false;
    bool id4 = false;
    bool associative = false;
    bool commutative = false;

    std::optional<std::array<int, 3>> leftSymmetricWitness;
    std::optional<std::array<int, 3>> novikovWitness;
    std::optional<std::array<int, 3>> derivationWitness;
    std::optional<std::array<int, 3>> id4Witness;
    std::optional<std::array<int, 3>> associativeWitness;
    std::optional<std::pair<int, int>> commutativeWitness;
};

IdentityProfile identityProfile(const Algebra& a);

/// The algebra (A, o) with x o y = -y * x; an involution. Carries associativity
/// back and forth and swaps the (4)-identity with the Novikov identity on the
/// associative class.
Algebra oppositeNegative(const Algebra& a);

/// span{ u*v : u in basis(U), v in basis(V) }.
Subspace productSpan(const Algebra& a, const Subspace& u, const Subspace& v);

/// A restricted to a subspace closed under the product (throws otherwise).
/// Structure constants are taken in the subspace's canonical basis.
Algebra restrictToSubalgebra(const Algebra& a, const Subspace& s, const std::string& name = "");

}  // namespace lsa

#endif
