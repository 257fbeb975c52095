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

#ifndef LSAKIT_REPORT_HPP
#define LSAKIT_REPORT_HPP

#include <json.hpp>

#include "lsa/affine.hpp"
#include "lsa/radicals.hpp"
#include "lsa/simplicity.hpp"

namespace lsa {

struct AnalysisOptions {
    uint64_t seed = 0;
    int budget = 32;
};

/// Full structured result of analyzing one algebra. The Lie/center/radical
/// sections exist only for left-symmetric input; the general center and the
/// identity profile always do.
struct AnalysisReport {
    Algebra algebra{0, Field::Rational, {}};
    AnalysisOptions options;
    IdentityProfile profile;
    Subspace generalCenter{0};
    std::optional<LieData> lie;
    std::optional<CentersReport> centersReport;
    std::optional<RadicalReport> radicals;
    std::optional<SimplicityResult> simplicity;  // absent for dim 0
    std::optional<bool> derivedTranslations;
};

AnalysisReport analyze(const Algebra& a, const AnalysisOptions& options = {});

/// One-line profile summary used by the `check` command.
std::string profileLine(const IdentityProfile& p);

std::string renderText(const AnalysisReport& r);
/// Stable field order; byte-identical for fixed input, seed and version.
nlohmann::ordered_json renderJson(const AnalysisReport& r);

std::string radicalsText(const AnalysisReport& r);
std::string simplicityText(const AnalysisReport& r);

}  // namespace lsa

#endif
