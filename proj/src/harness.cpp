#include "dialogic/harness.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace dialogic {

namespace {

Json corpusJson(const CorpusSpec& c) {
    Json atoms = Json::array();
    for (const Atom& a : c.atoms) atoms.push_back(a.name);
    return Json{{"maxSize", c.maxSize}, {"atoms", atoms}};
}

}  // namespace

// ── closure ─────────────────────────────────────────────────────────────────

ClosureReport closureTest(const RuleSet& rs, int maxSize, const std::vector<Atom>& atoms,
                          const SearchConfig& cfg) {
    ClosureReport report;
    report.ruleSet = rs.name();
    report.corpus = CorpusSpec{maxSize, atoms};

    const auto corpus = enumerateFormulas(maxSize, atoms);
    const auto verdicts = evaluateCorpus(corpus, rs, cfg);
    report.formulaCount = static_cast<int>(corpus.size());

    std::map<std::string, VerdictKind> byText;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        byText[corpus[i]->text()] = verdicts[i].kind;
        report.results.emplace_back(corpus[i]->text(), verdicts[i].kind);
        if (verdicts[i].kind == VerdictKind::Valid) ++report.validCount;
        if (verdicts[i].kind == VerdictKind::Unknown)
            report.unknowns.push_back(corpus[i]->text());
    }

    // Every enumerated valid implication whose antecedent is also valid
    // must have a valid consequent.  Antecedent and consequent are
    // proper subformulas, hence always enumerated themselves.
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const FormulaPtr& f = corpus[i];
        if (f->kind() != Conn::Imp || verdicts[i].kind != VerdictKind::Valid) continue;
        const auto antecedent = byText.find(f->left()->text());
        if (antecedent == byText.end() || antecedent->second != VerdictKind::Valid) continue;
        ++report.mpPairsChecked;
        const VerdictKind conclusion = byText.at(f->right()->text());
        if (conclusion == VerdictKind::Invalid)
            report.counterexamples.push_back(
                MpCounterexample{f->left()->text(), f->text(), f->right()->text()});
    }
    return report;
}

Json ClosureReport::toJson() const {
    Json resultsJson = Json::array();
    for (const auto& [text, kind] : results)
        resultsJson.push_back(Json{{"formula", text}, {"verdict", verdictName(kind)}});
    Json ces = Json::array();
    for (const auto& ce : counterexamples)
        ces.push_back(Json{{"premise", ce.premise},
                           {"implication", ce.implication},
                           {"conclusion", ce.conclusion}});
    Json unknownsJson = Json::array();
    for (const auto& u : unknowns) unknownsJson.push_back(u);
    return Json{{"experiment", "closure"},
                {"rules", Json::array({ruleSet})},
                {"corpus", corpusJson(corpus)},
                {"results", resultsJson},
                {"counterexamples", ces},
                {"summary",
                 Json{{"formulas", formulaCount},
                      {"valid", validCount},
                      {"mpPairsChecked", mpPairsChecked},
                      {"counterexamples", static_cast<int>(counterexamples.size())},
                      {"unknowns", unknownsJson}}}};
}

std::string ClosureReport::summary() const {
    std::ostringstream out;
    out << "closure under " << ruleSet << " (maxSize " << corpus.maxSize << "): "
        << formulaCount << " formulas, " << validCount << " valid, " << mpPairsChecked
        << " modus-ponens pairs, " << counterexamples.size() << " counterexample(s), "
        << unknowns.size() << " unknown(s)";
    for (const auto& ce : counterexamples)
        out << "\n  counterexample: |= " << ce.premise << "  and  |= " << ce.implication
            << "  but  =/= " << ce.conclusion;
    return out.str();
}

// ── audit ───────────────────────────────────────────────────────────────────

AuditReport characterizationAudit(int maxSize, const std::vector<Atom>& atoms,
                                  const SearchConfig& cfg, std::uint64_t seed,
                                  int samplesPerFormula) {
    AuditReport report;
    report.corpus = CorpusSpec{maxSize, atoms};
    report.seed = seed;

    const RuleSet n = RuleSet::presetN();
    const auto corpus = enumerateFormulas(maxSize, atoms);
    const auto verdicts = evaluateCorpus(corpus, n, cfg);

    std::map<std::string, VerdictKind> byText;
    std::vector<FormulaPtr> valid;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        byText[corpus[i]->text()] = verdicts[i].kind;
        if (verdicts[i].kind == VerdictKind::Valid) valid.push_back(corpus[i]);
        if (verdicts[i].kind == VerdictKind::Unknown)
            report.unknowns.push_back(corpus[i]->text());
    }
    report.validCount = static_cast<int>(valid.size());

    for (const FormulaPtr& f : valid) {
        if (f->kind() == Conn::Imp) {
            const FormulaPtr& ant = f->left();
            if (!ant->isAtomic() && ant->kind() != Conn::Neg &&
                byText.at(f->right()->text()) != VerdictKind::Valid)
                report.violations.push_back(AuditViolation{
                    "characterization", f->text(),
                    "valid implication with compound, non-negated antecedent and invalid "
                    "consequent"});
        }
        if (f->kind() == Conn::Neg) {
            const FormulaPtr& inner = f->left();
            if (inner->kind() != Conn::Neg)
                report.violations.push_back(AuditViolation{
                    "double-negation", f->text(), "valid negation of a non-negation"});
            else if (byText.at(inner->left()->text()) != VerdictKind::Valid)
                report.violations.push_back(AuditViolation{
                    "double-negation", f->text(), "valid double negation with invalid core"});
        }
    }

    // Weakening: a valid consequent makes any implication valid.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
    for (const FormulaPtr& psi : valid) {
        for (int s = 0; s < samplesPerFormula; ++s) {
            const FormulaPtr& phi = corpus[pick(rng)];
            const auto v = searchStrategy(Formula::imp(phi, psi), n, cfg);
            ++report.weakeningSamples;
            if (v.kind != VerdictKind::Valid)
                report.violations.push_back(AuditViolation{
                    "weakening", phi->text() + " -> " + psi->text(),
                    std::string("expected valid, got ") + verdictName(v.kind)});
        }
    }
    return report;
}

Json AuditReport::toJson() const {
    Json results = Json::array();
    for (const auto& v : violations)
        results.push_back(
            Json{{"formula", v.formula}, {"verdict", v.check}, {"detail", v.detail}});
    Json unknownsJson = Json::array();
    for (const auto& u : unknowns) unknownsJson.push_back(u);
    return Json{{"experiment", "audit"},
                {"rules", Json::array({"N"})},
                {"corpus", corpusJson(corpus)},
                {"results", results},
                {"counterexamples", Json::array()},
                {"summary", Json{{"valid", validCount},
                                 {"violations", static_cast<int>(violations.size())},
                                 {"weakeningSamples", weakeningSamples},
                                 {"seed", seed},
                                 {"unknowns", unknownsJson}}}};
}

std::string AuditReport::summary() const {
    std::ostringstream out;
    out << "audit over maxSize " << corpus.maxSize << " corpus: " << validCount
        << " valid formulas, " << weakeningSamples << " weakening samples (seed " << seed
        << "), " << violations.size() << " violation(s), " << unknowns.size() << " unknown(s)";
    for (const auto& v : violations)
        out << "\n  " << v.check << ": " << v.formula << " — " << v.detail;
    return out.str();
}

// ── compare ─────────────────────────────────────────────────────────────────

ContainmentReport compareRuleSets(const RuleSet& a, const RuleSet& b, int maxSize,
                                  const std::vector<Atom>& atoms, const SearchConfig& cfg,
                                  const std::vector<std::string>& extraFormulas) {
    ContainmentReport report;
    report.rulesA = a.name();
    report.rulesB = b.name();
    report.corpus = CorpusSpec{maxSize, atoms};
    report.extraFormulas = extraFormulas;

    auto corpus = enumerateFormulas(maxSize, atoms);
    for (const std::string& text : extraFormulas) corpus.push_back(parse(text));

    const auto va = evaluateCorpus(corpus, a, cfg);
    const auto vb = evaluateCorpus(corpus, b, cfg);

    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const std::string& text = corpus[i]->text();
        if (va[i].kind == VerdictKind::Unknown || vb[i].kind == VerdictKind::Unknown) {
            report.unknowns.push_back(text);
            continue;
        }
        const bool inA = va[i].kind == VerdictKind::Valid;
        const bool inB = vb[i].kind == VerdictKind::Valid;
        if (inA && inB) report.both.push_back(text);
        else if (inA) report.aOnly.push_back(text);
        else if (inB) report.bOnly.push_back(text);
        else report.neither.push_back(text);
    }

    if (report.aOnly.empty() && report.bOnly.empty()) report.relation = "A = B";
    else if (report.aOnly.empty()) report.relation = "A < B";
    else if (report.bOnly.empty()) report.relation = "B < A";
    else report.relation = "incomparable";
    return report;
}

Json ContainmentReport::toJson() const {
    Json results = Json::array();
    auto add = [&results](const std::vector<std::string>& v, const char* cls) {
        for (const auto& text : v) results.push_back(Json{{"formula", text}, {"verdict", cls}});
    };
    add(aOnly, "A-only");
    add(bOnly, "B-only");
    add(both, "both");
    add(neither, "neither");
    Json unknownsJson = Json::array();
    for (const auto& u : unknowns) unknownsJson.push_back(u);
    Json extras = Json::array();
    for (const auto& e : extraFormulas) extras.push_back(e);
    return Json{{"experiment", "compare"},
                {"rules", Json::array({rulesA, rulesB})},
                {"corpus", corpusJson(corpus)},
                {"results", results},
                {"counterexamples", Json::array()},
                {"summary", Json{{"relation", relation},
                                 {"aOnly", static_cast<int>(aOnly.size())},
                                 {"bOnly", static_cast<int>(bOnly.size())},
                                 {"both", static_cast<int>(both.size())},
                                 {"neither", static_cast<int>(neither.size())},
                                 {"extras", extras},
                                 {"unknowns", unknownsJson}}}};
}

std::string ContainmentReport::summary() const {
    std::ostringstream out;
    out << rulesA << " vs " << rulesB << " (maxSize " << corpus.maxSize
        << "): " << relation << " — A-only " << aOnly.size() << ", B-only " << bOnly.size()
        << ", both " << both.size() << ", neither " << neither.size() << ", unknown "
        << unknowns.size();
    if (!aOnly.empty()) out << "\n  A-only witness: " << aOnly.front();
    if (!bOnly.empty()) out << "\n  B-only witness: " << bOnly.front();
    return out.str();
}

// ── expected-verdict tables ─────────────────────────────────────────────────

const std::vector<std::string>& tableValidFormulas() {
    static const std::vector<std::string> rows = {
        "p | ~p",
        "~p | ~~p",
        "(p -> q) | (p -> ~q)",
        "(p -> q) | (q -> p)",
        "~~p -> p",
        "p -> ~~p",
        "p -> (p | q)",
        "p -> (p & p)",
        "~p -> (p -> q)",
        "~(p | ~p) -> q",
        "~(p & q) -> (~p | ~q)",
        "~(p | q) -> (~p & ~q)",
    };
    return rows;
}

const std::vector<std::string>& tableInvalidFormulas() {
    static const std::vector<std::string> rows = {
        "((p -> q) -> p) -> p",
        "p -> ((p -> q) -> q)",
        "(p & (p -> q)) -> q",
        "p & q -> p",
        "(~p | ~q) -> ~(p & q)",
        "~(p & q)",
        "(p & p) -> ~~(p & p)",
        "(p & p) | ~(p & p)",
        "(p -> (~q | ~r)) -> ((~p -> ~q) | (~p -> ~r))",
    };
    return rows;
}

TablesReport paperTables(const SearchConfig& cfg) {
    TablesReport report;
    const RuleSet n = RuleSet::presetN();

    std::vector<FormulaPtr> corpus;
    std::vector<VerdictKind> expected;
    for (const auto& text : tableValidFormulas()) {
        corpus.push_back(parse(text));
        expected.push_back(VerdictKind::Valid);
    }
    for (const auto& text : tableInvalidFormulas()) {
        corpus.push_back(parse(text));
        expected.push_back(VerdictKind::Invalid);
    }

    const auto verdicts = evaluateCorpus(corpus, n, cfg);
    report.allOk = true;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        TableRow row;
        row.formula = corpus[i]->text();
        row.expected = expected[i];
        row.got = verdicts[i].kind;
        row.ok = row.expected == row.got;  // Unknown never matches
        report.allOk = report.allOk && row.ok;
        report.rows.push_back(row);
    }
    return report;
}

Json TablesReport::toJson() const {
    Json results = Json::array();
    for (const auto& row : rows)
        results.push_back(Json{{"formula", row.formula},
                               {"verdict", verdictName(row.got)},
                               {"expected", verdictName(row.expected)},
                               {"ok", row.ok}});
    int failures = 0;
    for (const auto& row : rows)
        if (!row.ok) ++failures;
    return Json{{"experiment", "paper-tables"},
                {"rules", Json::array({"N"})},
                {"corpus", Json{{"fixed", static_cast<int>(rows.size())}}},
                {"results", results},
                {"counterexamples", Json::array()},
                {"summary", Json{{"rows", static_cast<int>(rows.size())},
                                 {"failures", failures},
                                 {"allOk", allOk}}}};
}

std::string TablesReport::summary() const {
    std::ostringstream out;
    out << "expected-verdict tables under N: " << rows.size() << " rows, "
        << (allOk ? "all match" : "MISMATCHES PRESENT");
    for (const auto& row : rows)
        if (!row.ok)
            out << "\n  " << row.formula << ": expected " << verdictName(row.expected)
                << ", got " << verdictName(row.got);
    return out.str();
}

}  // namespace dialogic
