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

#ifndef LSAKIT_SIMPLICITY_HPP
#define LSAKIT_SIMPLICITY_HPP

#include "lsa/lie.hpp"

namespace lsa {

/// The associative matrix algebra generated by all left and right
/// multiplications. Its invariant subspaces are exactly the two-sided ideals
/// of the algebra; its trace-form radical drives the deterministic part of
/// the simplicity decision.
struct MultiplicationAlgebra {
    std::vector<Matrix> generators;    // L_{e_1..e_n}, R_{e_1..e_n}
    std::vector<Matrix> closureBasis;  // basis of the span closure, discovery order
    Subspace closure{0};               // vectorized, inside the n^2 space
    Subspace radical{0};               // { m : tr(m)=0 and tr(m u)=0 for all u }
};

MultiplicationAlgebra multiplicationAlgebra(const Algebra& a);

enum class SimplicityVerdict { Simple, NotSimple, Undecided };

struct SimplicityResult {
    SimplicityVerdict verdict = SimplicityVerdict::Undecided;
    /// Verified proper nonzero two-sided ideal for every NotSimple verdict,
    /// except the one-dimensional zero algebra (excluded by definition).
    std::optional<Subspace> witness;
    std::string method;      // which stage decided
    int elementsTried = 0;   // Norton candidates consumed
    uint64_t seed = 0;
};

/// Two-stage decision: deterministic rejection via A*A != A or a nonzero
/// multiplication-algebra radical (both produce witnesses), then a seeded
/// Norton-criterion search. Las Vegas: NotSimple always carries a verified
/// witness, Simple is certified, Undecided only on budget exhaustion.
SimplicityResult isSimple(const Algebra& a, uint64_t seed = 0, int budget = 32);

/// Same structure constants re-tagged over the Gaussian rationals.
/// Errors when the input is already Gaussian.
Algebra complexify(const Algebra& a);

/// Does P carry the product of A to the product of B? P must be invertible
/// and the algebras must share dimension and field.
bool isoWitness(const Algebra& a, const Algebra& b, const Matrix& p);

}  // namespace lsa

#endif
