#pragma once

// Experiment harness: modus-ponens closure sweeps over enumerated
// corpora, structural audits of the D10+D13 validity set, rule-set
// containment comparisons, and the golden table of expected verdicts.
// Every experiment produces a deterministic JSON report (results sorted
// by corpus order) plus a human-readable summary.

#include <cstdint>
#include <string>
#include <vector>

#include "dialogic/corpus.hpp"
#include "dialogic/formula.hpp"
#include "dialogic/rules.hpp"
#include "dialogic/search.hpp"

#include "json.hpp"

namespace dialogic {

using Json = nlohmann::json;

struct CorpusSpec {
    int maxSize = 6;
    std::vector<Atom> atoms;
};

struct MpCounterexample {
    std::string premise;      // φ with ⊨ φ
    std::string implication;  // φ→ψ with ⊨ φ→ψ
    std::string conclusion;   // ψ with ⊭ ψ
};

struct ClosureReport {
    std::string ruleSet;
    CorpusSpec corpus;
    int formulaCount = 0;
    int validCount = 0;
    int mpPairsChecked = 0;
    std::vector<std::pair<std::string, VerdictKind>> results;  // corpus order
    std::vector<MpCounterexample> counterexamples;
    std::vector<std::string> unknowns;

    bool closed() const { return counterexamples.empty(); }
    Json toJson() const;
    std::string summary() const;
};

// Enumerates the corpus, decides every formula under `rs`, and checks
// each valid pair (φ, φ→ψ) for a valid ψ.  Budget exhaustion shows up
// in `unknowns`, never silently.
ClosureReport closureTest(const RuleSet& rs, int maxSize, const std::vector<Atom>& atoms,
                          const SearchConfig& cfg = {});

struct AuditViolation {
    std::string check;    // "characterization" | "double-negation" | "weakening"
    std::string formula;
    std::string detail;
};

struct AuditReport {
    CorpusSpec corpus;
    std::uint64_t seed = 0;
    int validCount = 0;
    int weakeningSamples = 0;
    std::vector<AuditViolation> violations;
    std::vector<std::string> unknowns;

    Json toJson() const;
    std::string summary() const;
};

// Audits the D10+D13 validity set over the corpus: every valid
// implication has an atomic antecedent, a negated antecedent, or a
// valid consequent; every valid negation is a double negation with a
// valid core; weakening holds on `samplesPerFormula` seeded antecedents
// per valid formula.
AuditReport characterizationAudit(int maxSize, const std::vector<Atom>& atoms,
                                  const SearchConfig& cfg = {}, std::uint64_t seed = 0,
                                  int samplesPerFormula = 20);

struct ContainmentReport {
    std::string rulesA, rulesB;
    CorpusSpec corpus;
    std::vector<std::string> aOnly, bOnly, both, neither, unknowns;
    std::vector<std::string> extraFormulas;  // checked beyond the corpus
    std::string relation;                    // "A = B" | "A < B" | "B < A" | "incomparable"

    Json toJson() const;
    std::string summary() const;
};

// Classifies every corpus formula (plus any named extras) as valid in A
// only, B only, both or neither, and reports the witnessed relation.
ContainmentReport compareRuleSets(const RuleSet& a, const RuleSet& b, int maxSize,
                                  const std::vector<Atom>& atoms, const SearchConfig& cfg = {},
                                  const std::vector<std::string>& extraFormulas = {});

struct TableRow {
    std::string formula;
    VerdictKind expected;
    VerdictKind got;
    bool ok = false;
};

struct TablesReport {
    std::vector<TableRow> rows;
    bool allOk = false;

    Json toJson() const;
    std::string summary() const;
};

// The expected-Valid and expected-Invalid formulas under D10+D13
// collected from the dialogical-logic literature; any mismatch or
// Unknown is a hard failure.
const std::vector<std::string>& tableValidFormulas();
const std::vector<std::string>& tableInvalidFormulas();

TablesReport paperTables(const SearchConfig& cfg = {});

}  // namespace dialogic
