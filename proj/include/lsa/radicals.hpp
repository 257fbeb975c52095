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

#ifndef LSAKIT_RADICALS_HPP
#define LSAKIT_RADICALS_HPP

#include "lsa/lie.hpp"

namespace lsa {

/// I(A) = { a : tr(R_a) = 0 }; kernel of a single linear functional, so the
/// codimension is at most 1.
Subspace traceKernel(const Algebra& a);

/// Largest left ideal of A contained in S: the fixed point of
/// W <- { x in W : A*x ⊆ W } starting from S.
Subspace largestLeftIdealIn(const Algebra& a, const Subspace& s);

/// Koszul radical R(A): largest left ideal inside the trace kernel, equal to
/// the largest complete left ideal. The result's restricted right
/// multiplications are verified nilpotent.
Subspace koszulRadical(const Algebra& a);

/// Completeness via the trace criterion (linear in x, so basis traces
/// suffice); cross-checked internally against direct nilpotency of R_x on a
/// few seeded sample vectors.
bool isComplete(const Algebra& a);

/// Trace-criterion vs direct-nilpotency agreement on `count` seeded random
/// vectors; throws InternalConsistencyError on any disagreement.
void completenessCrossCheck(const Algebra& a, int count, uint64_t seed);

struct NilpotencyCheck {
    bool leftNilpotent = false;
    bool rightNilpotent = false;
    std::optional<int> leftIndex;   // least m with all m-fold L-products zero
    std::optional<int> rightIndex;  // likewise for R
    std::optional<int> index() const {
        if (leftIndex && rightIndex) return std::min(*leftIndex, *rightIndex);
        return leftIndex ? leftIndex : rightIndex;
    }
};

/// Left/right nilpotency of a two-sided ideal, decided by the trace form on
/// the associative closure of the restricted multiplication operators
/// (char 0); the index is certified by direct product chains.
NilpotencyCheck nilpotentIdealChecks(const Algebra& a, const Subspace& ideal);

/// Right radical N(A) of a Novikov algebra: the Koszul radical, verified to
/// be a right-nilpotent two-sided ideal.
Subspace novikovRightRadical(const Algebra& a);

/// Whether N(A) additionally equals the plain trace kernel { a : tr R_a = 0 }.
/// That stronger printed equality fails on unital Novikov algebras (the
/// 2-dim simple one has trace kernel span{e2}, which is not even a
/// subalgebra); callers report failures as findings rather than errors.
bool novikovTraceKernelEqualsRadical(const Algebra& a);

/// Unique split of a derivation algebra into a complete two-sided ideal A0
/// (containing [A,A] and T(A)) and a commutative unital ideal AStar ⊆ Z(A).
struct DerivationSplit {
    Subspace a0;
    Subspace aStar;
    std::optional<Vec> unitElement;  // identity of AStar when AStar != 0
};

DerivationSplit derivationSplit(const Algebra& a, uint64_t seed = 0);

/// Assembled radical data for reports.
struct RadicalReport {
    Subspace traceKernel;
    Subspace koszulRadical;
    bool complete = false;
    bool derivedInRadical = false;  // [A,A] ⊆ R(A)
    std::optional<Subspace> novikovRadical;
    std::optional<DerivationSplit> split;
};

RadicalReport radicalReport(const Algebra& a, uint64_t seed = 0);

}  // namespace lsa

#endif
