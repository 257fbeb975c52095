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

#ifndef LSAKIT_GENERATORS_HPP
#define LSAKIT_GENERATORS_HPP

#include <random>

#include "lsa/lie.hpp"

namespace lsa {

/// Seeded algebra families for the property suites. Sampling raw structure
/// constants almost never gives a left-symmetric product, so each family is
/// built from a construction that guarantees it.

/// Coordinatewise multiplication on F^dim conjugated by a random invertible
/// rational matrix: commutative and associative by construction.
Algebra randomCommutativeAssociative(int dim, std::mt19937_64& rng);

/// Inner-derivation sample on a random 2-step nilpotent bracket, with
/// f = id/2 + g where g maps into the bracket's center. Both compatibility
/// conditions hold by construction and the result satisfies the (4) identity.
struct InnerSample {
    LieBracket bracket;
    Matrix endo;
    Algebra algebra;
};

InnerSample randomInnerOnNilpotent(int dim, int centerDim, std::mt19937_64& rng);

/// The 3-dimensional derivation family at random small rational parameters
/// (the completed table); roughly a quarter of draws take the Novikov corner.
Algebra randomDerivationFamilySample(std::mt19937_64& rng);

struct GeneratedAlgebra {
    Algebra algebra;
    std::string family;  // "commutative", "inner", "a3"
};

/// The mixed pool used by the proposition suite: `commutative` + `inner` +
/// `a3` algebras, deterministically derived from the seed.
std::vector<GeneratedAlgebra> generateFamilies(int commutative, int inner, int a3,
                                               uint64_t seed);

}  // namespace lsa

#endif
