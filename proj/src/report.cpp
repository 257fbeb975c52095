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

#include "lsa/report.hpp"

#include <sstream>

#include "lsa/format.hpp"
#include "lsa/version.hpp"

namespace lsa {

namespace {

using json = nlohmann::ordered_json;

const char* yesNo(bool b) { return b ? "yes" : "no"; }

json subspaceJson(const Subspace& s) {
    json basis = json::array();
    for (int r = 0; r < s.dim(); ++r) {
        json row = json::array();
        for (int c = 0; c < s.ambientDim(); ++c) row.push_back(s.basis().at(r, c).str());
        basis.push_back(row);
    }
    return json{{"dim", s.dim()}, {"basis", basis}, {"span", s.str()}};
}

json witnessJson(const std::optional<std::array<int, 3>>& w) {
    if (!w) return nullptr;
    return json::array({(*w)[0], (*w)[1], (*w)[2]});
}

json flagsJson(const IdealFlags& f) {
    return json{{"left", f.left},
                {"right", f.right},
                {"two_sided", f.twoSided},
                {"lie_ideal", f.lieIdeal}};
}

std::string verdictName(SimplicityVerdict v) {
    switch (v) {
        case SimplicityVerdict::Simple: return "simple";
        case SimplicityVerdict::NotSimple: return "not_simple";
        default: return "undecided";
    }
}

std::vector<int> seriesDims(const std::vector<Subspace>& series) {
    std::vector<int> dims;
    for (const Subspace& s : series) dims.push_back(s.dim());
    return dims;
}

}  // namespace

AnalysisReport analyze(const Algebra& a, const AnalysisOptions& options) {
    AnalysisReport r;
    r.algebra = a;
    r.options = options;
    r.profile = identityProfile(a);
    r.generalCenter = algebraCenter(a);
    if (r.profile.leftSymmetric && a.dim() > 0) {
        r.lie = lieData(a);
        r.centersReport = centers(a);
        r.radicals = radicalReport(a, options.seed);
        r.derivedTranslations = derivedActsByTranslations(a);
    }
    if (a.dim() >= 1) r.simplicity = isSimple(a, options.seed, options.budget);
    return r;
}

std::string profileLine(const IdentityProfile& p) {
    std::ostringstream os;
    os << "left-symmetric: " << yesNo(p.leftSymmetric) << "; (4): " << yesNo(p.id4)
       << "; Novikov: " << yesNo(p.novikov) << "; derivation: " << yesNo(p.derivation)
       << "; associative: " << yesNo(p.associative) << "; commutative: " << yesNo(p.commutative);
    return os.str();
}

std::string radicalsText(const AnalysisReport& r) {
    std::ostringstream os;
    if (!r.radicals) {
        os << "radicals: not available (algebra is not left-symmetric)\n";
        return os.str();
    }
    const RadicalReport& rad = *r.radicals;
    os << "trace kernel I(A):  " << rad.traceKernel.str() << "\n";
    os << "Koszul radical R(A): " << rad.koszulRadical.str() << "\n";
    os << "complete:            " << yesNo(rad.complete) << "\n";
    os << "[A,A] inside R(A):   " << yesNo(rad.derivedInRadical) << "\n";
    if (rad.novikovRadical)
        os << "right radical N(A):  " << rad.novikovRadical->str() << "\n";
    if (rad.split) {
        os << "derivation split:    A0 = " << rad.split->a0.str()
           << ", A* = " << rad.split->aStar.str();
        if (rad.split->unitElement)
            os << " (identity " << linCombString(*rad.split->unitElement) << ")";
        os << "\n";
    }
    return os.str();
}

std::string simplicityText(const AnalysisReport& r) {
    std::ostringstream os;
    if (!r.simplicity) {
        os << "simple: not defined for dimension 0\n";
        return os.str();
    }
    const SimplicityResult& s = *r.simplicity;
    switch (s.verdict) {
        case SimplicityVerdict::Simple:
            os << "simple: yes (Norton certificate, seed " << s.seed << ")\n";
            break;
        case SimplicityVerdict::NotSimple:
            os << "simple: no";
            if (s.witness) os << " (witness ideal " << s.witness->str() << ")";
            os << "\n  reason: " << s.method << "\n";
            break;
        default:
            os << "simple: undecided (" << s.method << ")\n";
            break;
    }
    return os.str();
}

std::string renderText(const AnalysisReport& r) {
    std::ostringstream os;
    const Algebra& a = r.algebra;
    os << "algebra: " << (a.name().empty() ? "(unnamed)" : a.name()) << "  [dim " << a.dim()
       << ", field " << fieldName(a.field()) << "]\n";
    os << "profile: " << profileLine(r.profile) << "\n";
    auto witnessLine = [&](const char* label, const std::optional<std::array<int, 3>>& w) {
        if (w)
            os << "  " << label << " fails first at basis triple (e" << (*w)[0] << ", e"
               << (*w)[1] << ", e" << (*w)[2] << ")\n";
    };
    witnessLine("left-symmetry", r.profile.leftSymmetricWitness);
    witnessLine("Novikov identity", r.profile.novikovWitness);
    witnessLine("derivation identity", r.profile.derivationWitness);
    witnessLine("identity (4)", r.profile.id4Witness);
    witnessLine("associativity", r.profile.associativeWitness);
    if (r.profile.commutativeWitness)
        os << "  commutativity fails first at basis pair (e" << r.profile.commutativeWitness->first
           << ", e" << r.profile.commutativeWitness->second << ")\n";

    os << "center Z(A):         " << r.generalCenter.str() << "\n";
    if (r.lie) {
        const LieData& d = *r.lie;
        os << "derived series dims: ";
        for (size_t i = 0; i < d.derivedSeries.size(); ++i)
            os << (i ? " > " : "") << d.derivedSeries[i].dim();
        os << "\nlower central dims:  ";
        for (size_t i = 0; i < d.lowerCentralSeries.size(); ++i)
            os << (i ? " > " : "") << d.lowerCentralSeries[i].dim();
        os << "\n";
        os << "solvable class:      "
           << (d.solvableClass ? std::to_string(*d.solvableClass) : "not solvable") << "\n";
        os << "nilpotent class:     "
           << (d.nilpotentClass ? std::to_string(*d.nilpotentClass) : "not nilpotent") << "\n";
        if (d.nonsingular) os << "nonsingular:         " << yesNo(*d.nonsingular) << "\n";
    }
    if (r.centersReport) {
        const CentersReport& c = *r.centersReport;
        os << "Lie center:          " << c.lieCenter.str() << "\n";
        os << "translation kernel:  " << c.translationKernel.str() << "\n";
        os << "translational center:" << c.translationalCenter.str() << "\n";
    }
    os << radicalsText(r);
    os << simplicityText(r);
    if (r.derivedTranslations)
        os << "derived part acts by translations: " << yesNo(*r.derivedTranslations) << "\n";
    return os.str();
}

json renderJson(const AnalysisReport& r) {
    json j;
    j["tool"] = json{{"name", kToolName},
                     {"version", kToolVersion},
                     {"seed", r.options.seed},
                     {"budget", r.options.budget}};
    json table = json::array();
    for (int i = 0; i < r.algebra.dim(); ++i)
        for (int k = 0; k < r.algebra.dim(); ++k) {
            Vec p = r.algebra.basisProduct(i, k);
            if (!vecIsZero(p))
                table.push_back("e" + std::to_string(i + 1) + "*e" + std::to_string(k + 1) +
                                " = " + linCombString(p));
        }
    j["algebra"] = json{{"name", r.algebra.name()},
                        {"dim", r.algebra.dim()},
                        {"field", fieldName(r.algebra.field())},
                        {"table", table}};
    j["profile"] = json{
        {"left_symmetric", r.profile.leftSymmetric},
        {"novikov", r.profile.novikov},
        {"derivation", r.profile.derivation},
        {"id4", r.profile.id4},
        {"associative", r.profile.associative},
        {"commutative", r.profile.commutative},
        {"witnesses",
         json{{"left_symmetric", witnessJson(r.profile.leftSymmetricWitness)},
              {"novikov", witnessJson(r.profile.novikovWitness)},
              {"derivation", witnessJson(r.profile.derivationWitness)},
              {"id4", witnessJson(r.profile.id4Witness)},
              {"associative", witnessJson(r.profile.associativeWitness)},
              {"commutative",
               r.profile.commutativeWitness
                   ? json::array({r.profile.commutativeWitness->first,
                                  r.profile.commutativeWitness->second})
                   : json(nullptr)}}}};
    j["center"] = subspaceJson(r.generalCenter);
    if (r.lie) {
        const LieData& d = *r.lie;
        j["lie"] = json{
            {"derived_series_dims", seriesDims(d.derivedSeries)},
            {"lower_central_series_dims", seriesDims(d.lowerCentralSeries)},
            {"solvable_class", d.solvableClass ? json(*d.solvableClass) : json(nullptr)},
            {"nilpotent_class", d.nilpotentClass ? json(*d.nilpotentClass) : json(nullptr)},
            {"nonsingular", d.nonsingular ? json(*d.nonsingular) : json(nullptr)}};
    } else {
        j["lie"] = nullptr;
    }
    if (r.centersReport) {
        const CentersReport& c = *r.centersReport;
        j["centers"] = json{{"lie_center", subspaceJson(c.lieCenter)},
                            {"algebra_center", subspaceJson(c.algebraCenter)},
                            {"translation_kernel", subspaceJson(c.translationKernel)},
                            {"translational_center", subspaceJson(c.translationalCenter)},
                            {"flags",
                             json{{"lie_center", flagsJson(c.lieCenterFlags)},
                                  {"algebra_center", flagsJson(c.algebraCenterFlags)},
                                  {"translation_kernel", flagsJson(c.translationKernelFlags)},
                                  {"translational_center",
                                   flagsJson(c.translationalCenterFlags)}}}};
    } else {
        j["centers"] = nullptr;
    }
    if (r.radicals) {
        const RadicalReport& rad = *r.radicals;
        json jr{{"trace_kernel", subspaceJson(rad.traceKernel)},
                {"koszul_radical", subspaceJson(rad.koszulRadical)},
                {"complete", rad.complete},
                {"derived_in_radical", rad.derivedInRadical}};
        jr["novikov_radical"] =
            rad.novikovRadical ? subspaceJson(*rad.novikovRadical) : json(nullptr);
        if (rad.split) {
            jr["derivation_split"] =
                json{{"a0", subspaceJson(rad.split->a0)},
                     {"a_star", subspaceJson(rad.split->aStar)},
                     {"unit", rad.split->unitElement ? json(linCombString(*rad.split->unitElement))
                                                     : json(nullptr)}};
        } else {
            jr["derivation_split"] = nullptr;
        }
        j["radicals"] = jr;
    } else {
        j["radicals"] = nullptr;
    }
    if (r.simplicity) {
        const SimplicityResult& s = *r.simplicity;
        j["simplicity"] = json{
            {"verdict", verdictName(s.verdict)},
            {"witness", s.witness ? subspaceJson(*s.witness) : json(nullptr)},
            {"method", s.method},
            {"elements_tried", s.elementsTried},
            {"seed", s.seed}};
    } else {
        j["simplicity"] = nullptr;
    }
    j["affine"] = r.derivedTranslations
                      ? json{{"derived_acts_by_translations", *r.derivedTranslations}}
                      : json(nullptr);
    return j;
}

}  // namespace lsa
