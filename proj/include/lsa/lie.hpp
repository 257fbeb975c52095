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

#ifndef LSAKIT_LIE_HPP
#define LSAKIT_LIE_HPP

#include "lsa/algebra.hpp"

namespace lsa {

/// Quick left-symmetry scan (basis triples), without the full profile.
bool isLeftSymmetric(const Algebra& a);
/// Throws std::invalid_argument when the algebra is not left-symmetric.
void requireLeftSymmetric(const Algebra& a, const char* who);

/// A Lie bracket given by its structure tensor [e_i, e_j] = sum_k b[i][j][k] e_k.
/// Construction validates antisymmetry and the Jacobi identity.
class LieBracket {
public:
    LieBracket(int dim, Field field, Vec tensor);
    static LieBracket commutatorOf(const Algebra& a);

    int dim() const { return dim_; }
    Field field() const { return field_; }
    Vec bracketBasis(int i, int j) const;
    Vec bracket(const Vec& x, const Vec& y) const;
    /// span{ [u,v] : u in basis(U), v in basis(V) }
    Subspace bracketSpan(const Subspace& u, const Subspace& v) const;
    /// { z : [z, x] = 0 for all x }
    Subspace center() const;

private:
    int dim_;
    Field field_;
    Vec tensor_;
};

/// Associated Lie algebra data: bracket, both series run to stabilization,
/// solvability/nilpotency classes, and (for nonabelian nilpotent algebras)
/// the nonsingularity verdict.
struct LieData {
    LieBracket bracket;
    std::vector<Subspace> derivedSeries;       // D^0 = A, D^(m+1) = [D^m, D^m]
    std::vector<Subspace> lowerCentralSeries;  // C^0 = A, C^(m+1) = [A, C^m]
    std::optional<int> solvableClass;          // least k with D^k = 0
    std::optional<int> nilpotentClass;         // least k with C^k = 0
    std::optional<bool> nonsingular;           // center == C^(class-1); class >= 2 only

    bool nilpotent() const { return nilpotentClass.has_value(); }
    bool solvable() const { return solvableClass.has_value(); }
};

LieData lieData(const Algebra& a);

/// Center Z(A): commuting elements whose three associator slots vanish.
/// For left-symmetric input the simplified criterion (Lie-central z with
/// (z,x,y) = 0) is used and cross-checked against the general definition.
Subspace algebraCenter(const Algebra& a);

struct IdealFlags {
    bool left = false;
    bool right = false;
    bool twoSided = false;
    bool lieIdeal = false;
};

IdealFlags idealFlags(const Algebra& a, const Subspace& s);

/// The four centers with ideal flags for each.
struct CentersReport {
    Subspace lieCenter;            // Z_Lie
    Subspace algebraCenter;        // Z(A)
    Subspace translationKernel;    // T(A) = { x : x*y = 0 for all y }
    Subspace translationalCenter;  // C(A) = T(A) ∩ Z(A)
    IdealFlags lieCenterFlags, algebraCenterFlags, translationKernelFlags,
        translationalCenterFlags;
};

CentersReport centers(const Algebra& a);

/// Smallest two-sided ideal containing S.
Subspace idealClosure(const Algebra& a, const Subspace& s);

/// Quotient by a two-sided ideal, on the basis complementary to the ideal's
/// pivot coordinates (ascending). keptColumns maps quotient basis indices back
/// to ambient coordinates.
struct Quotient {
    Algebra algebra;
    std::vector<int> keptColumns;
    /// Projection of an ambient vector to quotient coordinates.
    Vec project(const Subspace& ideal, const Vec& v) const;
};

Quotient quotient(const Algebra& a, const Subspace& ideal);

/// Inner-derivation style product x*y = [f(x), y] from a bracket and an
/// endomorphism. conditionsHold records whether f is compatible
/// ([x,y] = [f(x),y] + [x,f(y)] and f([x,y]) - [f(x),f(y)] central); when it
/// does hold the returned algebra is left-symmetric with the given bracket as
/// its commutator (verified).
struct InnerResult {
    Algebra algebra;
    bool conditionsHold;
};

InnerResult innerFromEndo(const LieBracket& bracket, const Matrix& f);
InnerResult innerFromEndo(const Algebra& a, const Matrix& f);

}  // namespace lsa

#endif
