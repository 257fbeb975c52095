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

#ifndef LSAKIT_CATALOG_HPP
#define LSAKIT_CATALOG_HPP

#include <map>

#include "lsa/algebra.hpp"

namespace lsa {

/// Where an expected value comes from: stated in the source material,
/// trivially forced by the definitions, or derived here by a named
/// independent computation.
enum class Provenance { Stated, Trivial, Derived };

inline const char* provenanceName(Provenance p) {
    switch (p) {
        case Provenance::Stated: return "stated";
        case Provenance::Trivial: return "trivial";
        default: return "derived";
    }
}

struct Expectation {
    std::string path;      // evaluator key, e.g. "profile.id4" or "associator(4,4,3)"
    std::string expected;  // canonical string form of the expected value
    Provenance provenance;
    std::string citation;  // which statement or table this expectation tracks
    std::string note;      // for derived values: the oracle that produced them
};

/// One worked example: its algebra (kept in the same text grammar the CLI
/// parses), the expectations to re-check, and any logged conflicts between
/// the printed table and the prose claims around it.
struct CatalogEntry {
    std::string name;
    std::string sourceText;  // .lsa grammar, the single source of truth
    Algebra algebra{0, Field::Rational, {}};
    std::vector<Expectation> expectations;
    std::vector<std::string> discrepancyLog;
};

using CatalogParams = std::map<std::string, Scalar>;

/// Entry names accepted by getExample, in canonical order.
std::vector<std::string> catalogNames();

/// Build a catalog entry. "A3gamma" needs alpha/beta/gamma, "zero" needs dim.
CatalogEntry getExample(const std::string& name, const CatalogParams& params = {});

struct ExpectationResult {
    Expectation expectation;
    std::string actual;
    bool pass = false;
};

struct FixtureReport {
    std::string entryName;
    std::vector<ExpectationResult> results;
    std::vector<std::string> findings;  // informational, never failures
    bool allPass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

FixtureReport runFixtures(const CatalogEntry& entry);

/// Canonical string value of one property path of an algebra (the engine
/// behind expectation checking; exposed for the verification suites).
std::string evaluatePath(const Algebra& a, const std::string& path);

}  // namespace lsa

#endif
