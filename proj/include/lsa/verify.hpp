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

#ifndef LSAKIT_VERIFY_HPP
#define LSAKIT_VERIFY_HPP

#include "lsa/catalog.hpp"

namespace lsa {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct VerifySummary {
    std::vector<CheckResult> checks;
    std::vector<std::string> findings;  // informational, never fatal
    int failures() const {
        int n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }
    void merge(const VerifySummary& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
        findings.insert(findings.end(), other.findings.begin(), other.findings.end());
    }
};

/// Every catalog fixture (the parametric family at its documented samples),
/// one check per expectation. `filter` selects entries by substring.
VerifySummary runCatalogSuite(const std::string& filter = "");

/// The proposition battery over the catalog plus `generated` seeded algebras
/// (three families). One aggregated check per proposition, with non-vacuity
/// counts in the detail strings.
VerifySummary runPropositionSuite(uint64_t seed = 0, int generated = 210);

/// Internal-consistency oracles: elementwise vs operator identity forms, the
/// two center routes, translations vs the (4) identity, and the completeness
/// trace criterion against direct nilpotency on >= `vectorsPerAlgebra`
/// sampled vectors per algebra.
VerifySummary runConsistencySuite(uint64_t seed = 0, int vectorsPerAlgebra = 100);

/// Simplicity determinism and soundness: pinned verdicts with seed 0 and
/// budget 32, verified witnesses, and the named complexification regression.
VerifySummary runSimplicitySuite();

/// Parse/serialize round trips, the opposite-product involution, and
/// quotient dimension bookkeeping.
VerifySummary runRoundTripSuite(uint64_t seed = 0);

struct TraceabilityRow {
    std::string id;         // stable claim identifier
    std::string statement;  // the checked mathematical content, in brief
    std::vector<std::string> coverage;  // check ids / fixture paths exercising it
};

/// Claim-to-check coverage matrix printed by verify-paper. Every tracked
/// claim carries at least one coverage reference (asserted in tests).
const std::vector<TraceabilityRow>& traceabilityMatrix();

struct VerifyOptions {
    std::string filter;  // substring filter for catalog entries / suite names
    uint64_t seed = 0;
    int generated = 210;
    bool withMatrix = true;
};

VerifySummary runAllSuites(const VerifyOptions& options);
std::string renderVerifyReport(const VerifySummary& summary, const VerifyOptions& options);

}  // namespace lsa

#endif
