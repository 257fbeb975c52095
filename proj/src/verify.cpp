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

#include "lsa/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "lsa/affine.hpp"
#include "lsa/format.hpp"
#include "lsa/generators.hpp"
#include "lsa/radicals.hpp"
#include "lsa/report.hpp"
#include "lsa/simplicity.hpp"

namespace lsa {

namespace {

// The catalog instances every suite sees: all fixed entries, the zero cube,
// and the parametric family at the zero corner plus three nonzero samples.
std::vector<CatalogEntry> catalogInstances() {
    std::vector<CatalogEntry> entries;
    for (const std::string& name : {"A21", "A22", "exp4", "A4", "H3R2", "D2", "A2", "F1"})
        entries.push_back(getExample(name));
    entries.push_back(getExample("zero", {{"dim", Scalar(3)}}));
    auto a3 = [](long a, long Beta, long g) {
        return CatalogParams{
            {"alpha", Scalar(a)}, {"beta", Scalar(Beta)}, {"gamma", Scalar(g)}};
    };
    for (auto [a, b, g] :
         {std::tuple<long, long, long>{0, 0, 0}, {1, 2, 1}, {0, 1, -2}, {2, -1, 3}}) {
        CatalogEntry e = getExample("A3gamma", a3(a, b, g));
        e.name = "A3gamma(" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(g) + ")";
        entries.push_back(std::move(e));
    }
    return entries;
}

struct PropStat {
    int applicable = 0;
    std::vector<std::string> failures;
    void check(bool ok, const std::string& instance, const std::string& why) {
        ++applicable;
        if (!ok) failures.push_back(instance + ": " + why);
    }
};

class PropositionRunner {
public:
    explicit PropositionRunner(uint64_t seed) : seed_(seed) {}

    void run(const std::string& instance, const Algebra& a, const std::string& family) {
        try {
            runChecked(instance, a, family);
        } catch (const std::exception& e) {
            stats_["prop/no-internal-errors"].check(false, instance, e.what());
        }
        ++instances_;
    }

    VerifySummary summary() {
        VerifySummary s;
        // A missing entry still reports as a passing zero-instance row.
        for (const char* id :
             {"prop/no-internal-errors", "prop/two-of-three", "prop/commutative-lemma",
              "prop/affine-homomorphism", "prop/opposite-novikov",
              "prop/assoc-novikov-2step-solvable", "prop/id4-2step-solvable",
              "prop/id4-derived-two-sided", "prop/id4-radical-two-sided-contains-derived",
              "prop/id4-extension-commutative-by-complete", "prop/centers-equal",
              "prop/center-right-mult-vanishes-on-derived", "prop/center-two-sided-eqs67",
              "prop/translation-kernel-two-sided", "prop/central-term-in-translational-center",
              "prop/nonsingular-centers-collapse", "prop/central-extension-quotient",
              "prop/novikov-radicals", "prop/left-nilpotent-ideals-inside-radical",
              "prop/derivation-split-clauses", "prop/derivation-complete-part-in-radical",
              "prop/noncommutative-derivation-T-nonzero",
              "prop/nonsingular-derivation-complete", "prop/complete-not-simple",
              "prop/simple-implies-commutative", "prop/zelmanov-gaussian-oracle",
              "prop/inner-family-id4", "prop/complexify-preserves-profile"}) {
            PropStat& st = stats_[id];
            std::ostringstream detail;
            detail << st.applicable << " applicable of " << instances_ << " instances";
            if (!st.failures.empty()) {
                detail << "; failures:";
                for (size_t i = 0; i < st.failures.size() && i < 5; ++i)
                    detail << " [" << st.failures[i] << "]";
            }
            s.checks.push_back({id, st.failures.empty(), detail.str()});
        }
        if (traceEqualityFailures_ > 0) {
            std::ostringstream f;
            f << "novikov radical: the printed trace-kernel equality N = {a : tr R_a = 0} fails "
                 "on "
              << traceEqualityFailures_ << " of " << traceEqualityApplicable_
              << " Novikov instances (unital ones, e.g. the simple 2-dim algebra); the verified "
                 "content is N = R, a right-nilpotent two-sided ideal";
            s.findings.push_back(f.str());
        }
        return s;
    }

    int instances() const { return instances_; }

private:
    void runChecked(const std::string& inst, const Algebra& a, const std::string& family) {
        const int n = a.dim();
        IdentityProfile p = identityProfile(a);
        stats_["prop/no-internal-errors"].check(true, inst, "");

        int idCount = (p.novikov ? 1 : 0) + (p.derivation ? 1 : 0) + (p.id4 ? 1 : 0);
        stats_["prop/two-of-three"].check(idCount != 2, inst,
                                          "exactly two of the three identities hold");

        if (!p.leftSymmetric) return;  // all families are left-symmetric by construction
        LieData d = lieData(a);
        Subspace derived = d.lowerCentralSeries.size() > 1 ? d.lowerCentralSeries[1]
                                                           : Subspace::zero(n);

        bool abelian = derived.isZero();
        stats_["prop/commutative-lemma"].check(
            p.commutative == abelian &&
                (!p.commutative ||
                 (p.associative && p.novikov && p.derivation && p.id4)),
            inst, "commutative iff abelian, and commutative implies every identity");

        stats_["prop/affine-homomorphism"].check(affineHomOnBasis(a), inst,
                                                 "affine map is not a homomorphism");

        if (p.associative) {
            IdentityProfile po = identityProfile(oppositeNegative(a));
            stats_["prop/opposite-novikov"].check(p.id4 == po.novikov, inst,
                                                  "(4) vs opposite Novikov mismatch");
            if (p.novikov)
                stats_["prop/assoc-novikov-2step-solvable"].check(
                    d.solvableClass && *d.solvableClass <= 2, inst,
                    "associative Novikov with solvable class > 2");
        }

        CentersReport cr = centers(a);
        stats_["prop/translation-kernel-two-sided"].check(
            cr.translationKernelFlags.twoSided && cr.translationKernelFlags.lieIdeal, inst,
            "T(A) is not a two-sided ideal");

        Subspace radical = koszulRadical(a);
        if (p.id4) {
            stats_["prop/id4-2step-solvable"].check(d.solvableClass && *d.solvableClass <= 2,
                                                    inst, "solvable class exceeds 2");
            stats_["prop/id4-derived-two-sided"].check(idealFlags(a, derived).twoSided, inst,
                                                       "derived ideal is not two-sided");
            stats_["prop/id4-radical-two-sided-contains-derived"].check(
                idealFlags(a, radical).twoSided && radical.contains(derived), inst,
                "radical not two-sided or misses the derived ideal");
            // extension: commutative associative quotient, complete kernel
            Quotient q = quotient(a, radical);
            IdentityProfile qp = identityProfile(q.algebra);
            bool kernelGood = true;
            Algebra restricted = restrictToSubalgebra(a, radical);
            kernelGood = isComplete(restricted) && identityProfile(restricted).id4;
            stats_["prop/id4-extension-commutative-by-complete"].check(
                qp.commutative && qp.associative && kernelGood, inst,
                "quotient/kernel extension clauses fail");
        }

        if (p.novikov || p.derivation) {
            stats_["prop/centers-equal"].check(cr.algebraCenter == cr.lieCenter, inst,
                                               "algebra center differs from the Lie center");
            bool rzVanishes = true;
            for (int r = 0; r < cr.algebraCenter.dim() && rzVanishes; ++r)
                for (int u = 0; u < derived.dim() && rzVanishes; ++u)
                    if (!vecIsZero(
                            a.product(derived.basisVector(u), cr.algebraCenter.basisVector(r))))
                        rzVanishes = false;
            stats_["prop/center-right-mult-vanishes-on-derived"].check(
                rzVanishes, inst, "R_z does not vanish on the derived ideal");
            bool eqs = idealFlags(a, cr.algebraCenter).twoSided;
            for (int r = 0; r < cr.algebraCenter.dim() && eqs; ++r) {
                Vec z = cr.algebraCenter.basisVector(r);
                for (int i = 0; i < n && eqs; ++i)
                    for (int j = 0; j < n && eqs; ++j) {
                        Vec x = unitVec(n, i), y = unitVec(n, j);
                        if (!vecIsZero(vecSub(a.product(x, a.product(y, z)),
                                              a.product(y, a.product(x, z)))))
                            eqs = false;
                        if (!vecIsZero(vecSub(a.product(a.product(x, z), y),
                                              a.product(x, a.product(z, y)))))
                            eqs = false;
                    }
            }
            stats_["prop/center-two-sided-eqs67"].check(
                eqs, inst, "center ideal property or exchange identities fail");
        }

        if (p.id4 && d.nilpotentClass && *d.nilpotentClass >= 2) {
            const Subspace& lastNonzero =
                d.lowerCentralSeries[static_cast<size_t>(*d.nilpotentClass) - 1];
            stats_["prop/central-term-in-translational-center"].check(
                cr.translationalCenter.contains(lastNonzero) &&
                    !cr.translationalCenter.isZero(),
                inst, "last central term escapes the translational center");
            if (d.nonsingular && *d.nonsingular)
                stats_["prop/nonsingular-centers-collapse"].check(
                    cr.translationalCenter == cr.algebraCenter &&
                        cr.algebraCenter == cr.lieCenter,
                    inst, "nonsingular case: centers do not collapse");
            // central extension of a smaller algebra through C(A)
            if (!cr.translationalCenter.isZero()) {
                Quotient q = quotient(a, cr.translationalCenter);
                stats_["prop/central-extension-quotient"].check(
                    identityProfile(q.algebra).id4 && q.algebra.dim() < n, inst,
                    "quotient by the translational center is not a smaller (4)-algebra");
            }
        }

        if (p.novikov) {
            ++traceEqualityApplicable_;
            Subspace nrad = novikovRightRadical(a);
            stats_["prop/novikov-radicals"].check(
                nrad == radical && idealFlags(a, nrad).twoSided &&
                    nilpotentIdealChecks(a, nrad).rightNilpotent,
                inst, "right radical clauses fail");
            if (!novikovTraceKernelEqualsRadical(a)) ++traceEqualityFailures_;
        }

        {
            bool ok = true;
            std::string why;
            for (const Subspace& candidate : {derived, cr.translationKernel,
                                              cr.translationalCenter}) {
                if (!idealFlags(a, candidate).twoSided) continue;
                NilpotencyCheck nil = nilpotentIdealChecks(a, candidate);
                if (nil.leftNilpotent && !radical.contains(candidate)) {
                    ok = false;
                    why = "left-nilpotent ideal escapes the Koszul radical";
                }
            }
            stats_["prop/left-nilpotent-ideals-inside-radical"].check(ok, inst, why);
        }

        if (p.derivation) {
            DerivationSplit split = derivationSplit(a, seed_);
            stats_["prop/derivation-split-clauses"].check(true, inst, "");
            stats_["prop/derivation-complete-part-in-radical"].check(
                radical.contains(split.a0), inst, "A0 escapes the Koszul radical");
            if (!p.commutative)
                stats_["prop/noncommutative-derivation-T-nonzero"].check(
                    !cr.translationKernel.isZero(), inst, "T(A) is zero");
            if (d.nonsingular && *d.nonsingular)
                stats_["prop/nonsingular-derivation-complete"].check(
                    isComplete(a), inst, "nonsingular nilpotent derivation algebra incomplete");
        }

        std::optional<SimplicityResult> simplicity;
        auto simpleResult = [&]() -> const SimplicityResult& {
            if (!simplicity) simplicity = isSimple(a, seed_, 32);
            return *simplicity;
        };

        if (n >= 1 && (p.novikov || p.derivation || p.id4) && isComplete(a))
            stats_["prop/complete-not-simple"].check(
                simpleResult().verdict == SimplicityVerdict::NotSimple, inst,
                "complete algebra claimed simple or undecided");

        if (n >= 1 && (p.derivation || p.id4))
            stats_["prop/simple-implies-commutative"].check(
                simpleResult().verdict != SimplicityVerdict::Simple || p.commutative, inst,
                "simple but noncommutative");

        if (p.novikov && n >= 1 && n <= 4 && a.field() == Field::Rational) {
            Algebra c = complexify(a);
            SimplicityResult s = isSimple(c, seed_, 32);
            stats_["prop/zelmanov-gaussian-oracle"].check(
                s.verdict != SimplicityVerdict::Simple || n == 1, inst,
                "simple Novikov algebra of dimension >= 2 over the gaussian rationals");
        }

        if (family == "inner")
            stats_["prop/inner-family-id4"].check(p.id4, inst,
                                                  "inner nilpotent sample misses the (4) identity");

        if (a.field() == Field::Rational && instances_ % 7 == 0) {
            IdentityProfile cp = identityProfile(complexify(a));
            stats_["prop/complexify-preserves-profile"].check(
                cp.leftSymmetric == p.leftSymmetric && cp.novikov == p.novikov &&
                    cp.derivation == p.derivation && cp.id4 == p.id4 &&
                    cp.associative == p.associative && cp.commutative == p.commutative,
                inst, "profile changed under complexification");
        }
    }

    uint64_t seed_;
    int instances_ = 0;
    int traceEqualityFailures_ = 0;
    int traceEqualityApplicable_ = 0;
    std::map<std::string, PropStat> stats_;
};

}  // namespace

VerifySummary runCatalogSuite(const std::string& filter) {
    VerifySummary s;
    for (const CatalogEntry& entry : catalogInstances()) {
        if (!filter.empty() && entry.name.find(filter) == std::string::npos) continue;
        FixtureReport r = runFixtures(entry);
        for (const auto& res : r.results) {
            std::ostringstream detail;
            detail << "(" << provenanceName(res.expectation.provenance) << ") expected "
                   << res.expectation.expected;
            if (!res.pass) detail << ", got " << res.actual;
            s.checks.push_back(
                {"catalog/" + entry.name + "/" + res.expectation.path, res.pass, detail.str()});
        }
        for (const std::string& f : r.findings) s.findings.push_back(entry.name + ": " + f);
    }
    return s;
}

VerifySummary runPropositionSuite(uint64_t seed, int generated) {
    PropositionRunner runner(seed);
    for (const CatalogEntry& entry : catalogInstances())
        runner.run("catalog:" + entry.name, entry.algebra, "catalog");
    int commutative = generated / 3;
    int inner = generated / 3;
    int a3 = generated - commutative - inner;
    for (const GeneratedAlgebra& g : generateFamilies(commutative, inner, a3, seed)) {
        std::ostringstream name;
        name << g.family << ":dim" << g.algebra.dim() << ":#" << runner.instances();
        runner.run(name.str(), g.algebra, g.family);
    }
    VerifySummary s = runner.summary();
    std::ostringstream info;
    info << "instance pool: " << runner.instances() << " algebras ("
         << catalogInstances().size() << " catalog + " << generated << " generated)";
    s.checks.push_back({"prop/instance-pool-size", runner.instances() >= generated, info.str()});
    return s;
}

VerifySummary runConsistencySuite(uint64_t seed, int vectorsPerAlgebra) {
    VerifySummary s;
    for (const CatalogEntry& entry : catalogInstances()) {
        const Algebra& a = entry.algebra;
        std::string base = "consistency/" + entry.name + "/";
        auto guard = [&](const std::string& id, const std::function<bool()>& f,
                         const std::string& okDetail) {
            try {
                bool ok = f();
                s.checks.push_back({base + id, ok, okDetail});
            } catch (const std::exception& e) {
                s.checks.push_back({base + id, false, e.what()});
            }
        };
        guard(
            "operator-forms",
            [&] {
                identityProfile(a);  // throws on elementwise/operator disagreement
                return true;
            },
            "elementwise and operator identity forms agree");
        guard(
            "center-routes",
            [&] {
                algebraCenter(a);  // throws when the two routes disagree
                return true;
            },
            "simplified and general center computations agree");
        if (isLeftSymmetric(a)) {
            guard(
                "translations-iff-id4",
                [&] { return derivedActsByTranslations(a) == identityProfile(a).id4; },
                "derived translations match the (4) identity");
            guard(
                "completeness-trace-vs-nilpotency",
                [&] {
                    completenessCrossCheck(a, vectorsPerAlgebra, seed);
                    return true;
                },
                std::to_string(vectorsPerAlgebra) + " sampled vectors agree");
            guard(
                "jacobi",
                [&] {
                    LieBracket::commutatorOf(a);
                    return true;
                },
                "commutator satisfies the Jacobi identity");
        }
    }
    // negative control: a non-left-symmetric table must fail the affine test
    Vec t(8);
    t[0] = Scalar(1);  // e1*e2 = e1 only
    Algebra bad(2, Field::Rational, Vec{Scalar(0), Scalar(0), Scalar(1), Scalar(0), Scalar(0),
                                        Scalar(0), Scalar(0), Scalar(0)},
                "non-ls-control");
    s.checks.push_back({"consistency/negative-control/affine-fails",
                        !isLeftSymmetric(bad) && !affineHomOnBasis(bad),
                        "non-left-symmetric control breaks the homomorphism identity"});
    return s;
}

VerifySummary runSimplicitySuite() {
    VerifySummary s;
    Algebra a2 = getExample("A2").algebra;
    SimplicityResult r = isSimple(a2, 0, 32);
    s.checks.push_back({"simplicity/A2-simple-seed0",
                        r.verdict == SimplicityVerdict::Simple && r.seed == 0,
                        "verdict " + r.method});
    Algebra a2c = complexify(a2);
    SimplicityResult rc = isSimple(a2c, 0, 32);
    bool witnessGood = rc.verdict == SimplicityVerdict::NotSimple && rc.witness &&
                       !rc.witness->isZero() && !rc.witness->isWhole() &&
                       idealFlags(a2c, *rc.witness).twoSided;
    s.checks.push_back({"simplicity/A2-complexified-not-simple", witnessGood,
                        rc.witness ? "witness " + rc.witness->str() : "no witness"});
    s.checks.push_back({"simplicity/complexification-regression",
                        r.verdict == SimplicityVerdict::Simple &&
                            rc.verdict == SimplicityVerdict::NotSimple,
                        "simple over Q, not simple over Q(i)"});

    int verified = 0;
    bool witnessesOk = true;
    std::string why;
    for (const CatalogEntry& entry : catalogInstances()) {
        if (entry.algebra.dim() < 1) continue;
        SimplicityResult res = isSimple(entry.algebra, 0, 32);
        if (res.verdict != SimplicityVerdict::NotSimple) continue;
        if (entry.algebra.dim() == 1 && !res.witness) continue;  // definitional exclusion
        ++verified;
        if (!res.witness || res.witness->isZero() || res.witness->isWhole() ||
            !idealFlags(entry.algebra, *res.witness).twoSided) {
            witnessesOk = false;
            why = entry.name;
        }
    }
    s.checks.push_back({"simplicity/not-simple-witnesses-verified", witnessesOk,
                        witnessesOk ? std::to_string(verified) + " witnesses verified"
                                    : "bad witness for " + why});

    SimplicityResult undecided = isSimple(a2, 0, 0);
    s.checks.push_back({"simplicity/zero-budget-undecided",
                        undecided.verdict == SimplicityVerdict::Undecided,
                        "exhausted budget reports undecided, never a guess"});

    SimplicityResult f1 = isSimple(getExample("F1").algebra, 0, 32);
    s.checks.push_back(
        {"simplicity/real-classification-instances",
         r.verdict == SimplicityVerdict::Simple && f1.verdict == SimplicityVerdict::Simple &&
             rc.verdict == SimplicityVerdict::NotSimple,
         "the 2-dim commutative algebra and the field are simple; the complexification is not"});

    // the three prescribed table-vs-prose findings must surface, non-fatally
    VerifySummary catalog = runCatalogSuite();
    auto hasFinding = [&](const std::string& prefix) {
        for (const std::string& f : catalog.findings)
            if (f.rfind(prefix, 0) == 0) return true;
        return false;
    };
    s.checks.push_back({"simplicity/prescribed-findings-emitted",
                        hasFinding("A4:") && hasFinding("H3R2:") && hasFinding("A3gamma"),
                        "table-vs-prose conflicts for A4, H3R2 and the parametric family"});
    return s;
}

VerifySummary runRoundTripSuite(uint64_t seed) {
    VerifySummary s;
    bool parseOk = true;
    std::string parseWhy;
    for (const CatalogEntry& entry : catalogInstances()) {
        Algebra reparsed = parseAlgebra(serializeAlgebra(entry.algebra), entry.algebra.name());
        if (!(reparsed == entry.algebra)) {
            parseOk = false;
            parseWhy = entry.name;
        }
        if (!(parseAlgebra(entry.sourceText) == entry.algebra)) {
            parseOk = false;
            parseWhy = entry.name + " (source text)";
        }
    }
    {
        Algebra a2c = complexify(getExample("A2").algebra);
        if (!(parseAlgebra(serializeAlgebra(a2c)) == a2c)) {
            parseOk = false;
            parseWhy = "complexified A2";
        }
    }
    s.checks.push_back({"roundtrip/parse-serialize", parseOk,
                        parseOk ? "all fixtures round-trip byte-exactly" : parseWhy});

    bool invOk = true;
    std::string invWhy;
    std::vector<Algebra> pool;
    for (const CatalogEntry& entry : catalogInstances()) pool.push_back(entry.algebra);
    for (const GeneratedAlgebra& g : generateFamilies(10, 10, 10, seed)) pool.push_back(g.algebra);
    for (const Algebra& a : pool)
        if (!(oppositeNegative(oppositeNegative(a)) == a)) {
            invOk = false;
            invWhy = a.name();
        }
    s.checks.push_back({"roundtrip/opposite-involution", invOk,
                        invOk ? std::to_string(pool.size()) + " algebras" : invWhy});

    bool dimsOk = true;
    std::string dimsWhy;
    int quotients = 0;
    for (const Algebra& a : pool) {
        if (!isLeftSymmetric(a)) continue;
        std::vector<Subspace> ideals{Subspace::zero(a.dim()), Subspace::whole(a.dim())};
        Subspace r = koszulRadical(a);
        if (idealFlags(a, r).twoSided) ideals.push_back(r);
        for (const Subspace& ideal : ideals) {
            Quotient q = quotient(a, ideal);
            ++quotients;
            if (q.algebra.dim() + ideal.dim() != a.dim()) {
                dimsOk = false;
                dimsWhy = a.name();
            }
        }
    }
    s.checks.push_back({"roundtrip/quotient-dimension-bookkeeping", dimsOk,
                        dimsOk ? std::to_string(quotients) + " quotients" : dimsWhy});
    return s;
}

const std::vector<TraceabilityRow>& traceabilityMatrix() {
    static const std::vector<TraceabilityRow> rows = {
        {"flatness-identity", "left-symmetry elementwise vs both operator forms",
         {"consistency/*/operator-forms"}},
        {"completeness-def", "complete iff every right multiplication is nilpotent",
         {"consistency/*/completeness-trace-vs-nilpotency", "catalog/exp4/radicals.complete"}},
        {"novikov-def", "right-commutativity vs commuting right multiplications",
         {"consistency/*/operator-forms", "catalog/A22/profile.novikov"}},
        {"derivation-def", "derivation identity vs L_{xy} = R_x R_y",
         {"consistency/*/operator-forms", "catalog/A3gamma*/profile.derivation"}},
        {"id4-def", "(xy)z = (yx)z vs vanishing L on the derived ideal",
         {"consistency/*/translations-iff-id4", "catalog/A21/profile.id4"}},
        {"commutative-lemma", "commutative iff abelian Lie algebra, then all identities hold",
         {"prop/commutative-lemma"}},
        {"example-A21", "2-dim (4)-example, neither Novikov nor derivation, not complete",
         {"catalog/A21/*"}},
        {"example-A22", "2-dim Novikov example failing derivation and (4)", {"catalog/A22/*"}},
        {"example-A3gamma", "3-dim derivation family, Novikov/(4) exactly at the zero parameter",
         {"catalog/A3gamma*/*"}},
        {"two-of-three", "any two of Novikov/derivation/(4) force the third",
         {"prop/two-of-three"}},
        {"id4-2step-solvable", "(4) forces a 2-step solvable Lie algebra",
         {"prop/id4-2step-solvable"}},
        {"id4-derived-two-sided", "(4) makes the derived ideal two-sided",
         {"prop/id4-derived-two-sided", "catalog/A21/flags.derived.twoSided"}},
        {"opposite-novikov", "associative: (4) holds iff the reversed-negated product is Novikov",
         {"prop/opposite-novikov", "catalog/A21/opposite.table"}},
        {"assoc-novikov-2step", "Lie algebras with associative Novikov structure are 2-step "
                                "solvable",
         {"prop/assoc-novikov-2step-solvable"}},
        {"center-def-simplification", "center via one associator slot on left-symmetric input",
         {"consistency/*/center-routes"}},
        {"centers-coincide", "Novikov or derivation: algebra center equals the Lie center",
         {"prop/centers-equal", "catalog/A22/centers.algebraCenterEqualsLieCenter"}},
        {"example-exp4", "4-dim complete (4)-example with distinct centers", {"catalog/exp4/*"}},
        {"center-rightmult-remark", "central right multiplications vanish on the derived ideal",
         {"prop/center-right-mult-vanishes-on-derived"}},
        {"example-A4", "4-dim example whose Lie center is not an ideal", {"catalog/A4/*"}},
        {"center-two-sided-prop", "Novikov/derivation center is a two-sided ideal with the two "
                                  "exchange identities",
         {"prop/center-two-sided-eqs67"}},
        {"example-H3R2", "second nilpotent (4)-example; derived values follow the table",
         {"catalog/H3R2/*"}},
        {"translation-kernel-ideal", "T(A) is a two-sided ideal",
         {"prop/translation-kernel-two-sided", "catalog/exp4/flags.translationKernel.twoSided"}},
        {"translational-center-def", "C(A) = T(A) ∩ Z(A)",
         {"catalog/exp4/centers.translationalCenter"}},
        {"nonsingular-def", "nonsingular: center equals the last nonzero lower-central term",
         {"catalog/exp4/lie.nonsingular"}},
        {"central-term-in-C", "nilpotent (4)-algebras: last central term sits in C(A), C(A) != 0",
         {"prop/central-term-in-translational-center",
          "catalog/exp4/translational.containsLastCentral"}},
        {"nonsingular-collapse", "nonsingular nilpotent (4)-algebras: C(A) = Z(A) = Lie center",
         {"prop/nonsingular-centers-collapse"}},
        {"central-extension", "nilpotent (4)-algebras are central extensions of smaller ones",
         {"prop/central-extension-quotient", "catalog/exp4/quotient.derived.id4"}},
        {"inner-conditions", "inner products x*y = [f(x),y] need the two compatibility "
                             "conditions",
         {"prop/inner-family-id4"}},
        {"inner-2step-id4", "inner products on 2-step nilpotent algebras satisfy (4)",
         {"prop/inner-family-id4"}},
        {"derivation-split", "derivation algebras split as complete ideal + unital central "
                             "ideal, uniquely",
         {"prop/derivation-split-clauses", "catalog/D2/split.a0", "catalog/D2/split.aStar"}},
        {"derivation-T-nonzero", "noncommutative derivation algebras have T(A) != 0",
         {"prop/noncommutative-derivation-T-nonzero",
          "catalog/A3gamma*/translationKernel.nonzero"}},
        {"nonsingular-derivation-complete", "derivation + nonsingular nilpotent => complete",
         {"prop/nonsingular-derivation-complete"}},
        {"koszul-radical-def", "largest left ideal inside the trace kernel; largest complete "
                               "left ideal",
         {"catalog/A21/radicals.koszulRadical", "consistency/*/completeness-trace-vs-nilpotency"}},
        {"id4-radical-theorem", "(4): the radical is two-sided and contains the derived ideal",
         {"prop/id4-radical-two-sided-contains-derived",
          "catalog/A21/radicals.derivedInRadical"}},
        {"extension-corollary", "(4)-algebras: commutative associative quotient by a complete "
                                "kernel",
         {"prop/id4-extension-commutative-by-complete", "catalog/A21/quotient.koszul.table"}},
        {"left-radical-inclusion", "left-nilpotent ideals land inside the Koszul radical",
         {"prop/left-nilpotent-ideals-inside-radical"}},
        {"novikov-right-radical", "Novikov: right radical exists and equals the Koszul radical",
         {"prop/novikov-radicals", "catalog/A22/radicals.novikovRadical",
          "catalog/D2/radicals.novikovRadical"}},
        {"example-D2", "2-dim commutative example: N = R = the trace line, trivial split",
         {"catalog/D2/*"}},
        {"simplicity-def", "simple: no proper nonzero two-sided ideal; A*A = A",
         {"simplicity/not-simple-witnesses-verified"}},
        {"zelmanov-theorem", "simple Novikov over the gaussian rationals is one-dimensional "
                             "(oracle)",
         {"prop/zelmanov-gaussian-oracle"}},
        {"example-A2", "2-dim simple commutative Novikov algebra over the rationals",
         {"catalog/A2/*", "simplicity/A2-simple-seed0"}},
        {"complexification-def", "pair construction, scalar action and the conjugation map",
         {"prop/complexify-preserves-profile", "catalog/A2/complexified.isoToFieldPair"}},
        {"complexification-remark", "complexification of a simple algebra need not be simple",
         {"simplicity/complexification-regression"}},
        {"real-novikov-classification", "only the 2-dim algebra and the field are simple over "
                                        "the reals (instances)",
         {"simplicity/real-classification-instances"}},
        {"simple-implies-commutative", "simple derivation or (4)-algebras are commutative",
         {"prop/simple-implies-commutative"}},
        {"real-ls-classification-instances", "the same classification for derivation/(4) "
                                             "(instances)",
         {"simplicity/real-classification-instances"}},
        {"complete-novikov-not-simple", "complete Novikov algebras are not simple",
         {"prop/complete-not-simple"}},
        {"complete-der-id4-not-simple", "complete derivation/(4)-algebras are not simple",
         {"prop/complete-not-simple"}},
        {"translations-geometry", "the derived part acts by translations iff (4) holds",
         {"consistency/*/translations-iff-id4", "catalog/A21/affine.derivedActsByTranslations"}},
    };
    return rows;
}

VerifySummary runAllSuites(const VerifyOptions& options) {
    VerifySummary s;
    bool filtered = !options.filter.empty();
    auto suiteWanted = [&](const char* name) {
        return !filtered || std::string(name).find(options.filter) != std::string::npos;
    };
    s.merge(runCatalogSuite(options.filter));
    if (suiteWanted("propositions"))
        s.merge(runPropositionSuite(options.seed, options.generated));
    if (suiteWanted("consistency")) s.merge(runConsistencySuite(options.seed));
    if (suiteWanted("simplicity")) s.merge(runSimplicitySuite());
    if (suiteWanted("roundtrip")) s.merge(runRoundTripSuite(options.seed));
    return s;
}

std::string renderVerifyReport(const VerifySummary& summary, const VerifyOptions& options) {
    std::ostringstream os;
    std::string section;
    for (const CheckResult& c : summary.checks) {
        std::string prefix = c.id.substr(0, c.id.find('/'));
        if (prefix != section) {
            section = prefix;
            os << "== " << section << " ==\n";
        }
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.id;
        if (!c.detail.empty()) os << "  -- " << c.detail;
        os << "\n";
    }
    if (!summary.findings.empty()) {
        os << "== findings (informational, non-fatal) ==\n";
        for (const std::string& f : summary.findings) os << "[FINDING] " << f << "\n";
    }
    if (options.withMatrix) {
        os << "== claim coverage ==\n";
        for (const TraceabilityRow& row : traceabilityMatrix()) {
            os << row.id << ": " << row.statement << "\n    covered by:";
            for (const std::string& c : row.coverage) os << " " << c;
            os << "\n";
        }
    }
    int failures = summary.failures();
    os << "SUMMARY: " << summary.checks.size() << " checks, " << failures << " failures, "
       << summary.findings.size() << " findings\n";
    return os.str();
}

}  // namespace lsa
