#include "doctest.h"

#include "dialogic/harness.hpp"
#include "dialogic/oracles.hpp"

using namespace dialogic;

namespace {
const std::vector<Atom> pq{Atom("p"), Atom("q")};
}

TEST_CASE("closure holds at small scale for N and CL") {
    const auto n = closureTest(RuleSet::presetN(), 4, {Atom("p")});
    CHECK(n.closed());
    CHECK(n.unknowns.empty());
    CHECK(n.formulaCount == 16);  // sizes 1..4 over one atom: 1+1+4+10

    const auto cl = closureTest(RuleSet::presetCL(), 4, {Atom("p")});
    CHECK(cl.closed());
    CHECK(cl.unknowns.empty());
}

TEST_CASE("closure checks real pairs once implications of valid formulas fit") {
    // (p -> p) -> (p -> p) is the smallest valid implication with a
    // valid antecedent over one atom.
    const auto report = closureTest(RuleSet::presetN(), 7, {Atom("p")});
    CHECK(report.mpPairsChecked > 0);
    CHECK(report.closed());
    CHECK(report.unknowns.empty());
}

TEST_CASE("closure report carries consistent counts") {
    const auto report = closureTest(RuleSet::presetN(), 4, pq);
    CHECK(report.formulaCount == static_cast<int>(report.results.size()));
    int valid = 0;
    for (const auto& [text, kind] : report.results)
        if (kind == VerdictKind::Valid) ++valid;
    CHECK(valid == report.validCount);
    const auto json = report.toJson();
    CHECK(json["experiment"] == "closure");
    CHECK(json.contains("rules"));
    CHECK(json.contains("corpus"));
    CHECK(json.contains("results"));
    CHECK(json.contains("counterexamples"));
    CHECK(json.contains("summary"));
    CHECK(json["results"].size() == report.results.size());
    for (const auto& row : json["results"]) {
        CHECK(row.contains("formula"));
        CHECK(row.contains("verdict"));
    }
}

TEST_CASE("audit finds no violations on a small corpus") {
    const auto report = characterizationAudit(4, pq, {}, 0, 5);
    CAPTURE(report.summary());
    CHECK(report.violations.empty());
    CHECK(report.unknowns.empty());
    CHECK(report.validCount > 0);
    CHECK(report.weakeningSamples == report.validCount * 5);
}

TEST_CASE("the audited conditions are necessary, not sufficient") {
    // An implication with an atomic antecedent can still be invalid; the
    // audit must not flag it because it only inspects valid formulas.
    const auto v = searchStrategy(parse("p -> ((p -> q) -> q)"), RuleSet::presetN());
    CHECK(v.kind == VerdictKind::Invalid);
    const auto report = characterizationAudit(4, pq, {}, 0, 3);
    for (const auto& violation : report.violations)
        CHECK(violation.formula != "p -> ((p -> q) -> q)");
}

TEST_CASE("double negation of a validity is consistent with the audit") {
    CHECK(searchStrategy(parse("p -> p"), RuleSet::presetN()).kind == VerdictKind::Valid);
    CHECK(searchStrategy(parse("~~(p -> p)"), RuleSet::presetN()).kind == VerdictKind::Valid);
}

TEST_CASE("compare: D and D+E validate the same corpus formulas") {
    const auto report = compareRuleSets(RuleSet::presetD(), RuleSet::presetDE(), 4, pq);
    CHECK(report.relation == "A = B");
    CHECK(report.aOnly.empty());
    CHECK(report.bOnly.empty());
    CHECK(report.unknowns.empty());
}

TEST_CASE("compare: N and D are incomparable") {
    const std::string deMorganConverse = parse("(~p | ~q) -> ~(p & q)")->text();
    const auto report = compareRuleSets(RuleSet::presetN(), RuleSet::presetD(), 5, pq, {},
                                        {deMorganConverse});
    CHECK(report.relation == "incomparable");
    bool lemInAOnly = false;
    for (const auto& text : report.aOnly) lemInAOnly = lemInAOnly || text == "p | ~p";
    CHECK(lemInAOnly);
    bool deMorganInBOnly = false;
    for (const auto& text : report.bOnly)
        deMorganInBOnly = deMorganInBOnly || text == deMorganConverse;
    CHECK(deMorganInBOnly);
}

TEST_CASE("sub-classicality on a small corpus") {
    const auto corpus = enumerateFormulas(4, pq);
    const auto verdicts = evaluateCorpus(corpus, RuleSet::presetN(), {});
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (verdicts[i].kind != VerdictKind::Valid) continue;
        CAPTURE(corpus[i]->text());
        CHECK(classicalValid(corpus[i]));
    }
}

TEST_CASE("the N validity set is consistent: every atom is invalid") {
    for (const char* atom : {"p", "q", "r"})
        CHECK(searchStrategy(parse(atom), RuleSet::presetN()).kind == VerdictKind::Invalid);
}

TEST_CASE("expected-verdict tables snapshot") {
    CHECK(tableValidFormulas().size() == 12);
    CHECK(tableInvalidFormulas().size() == 9);
    // Two spot checks; the full sweep is the first acceptance criterion.
    CHECK(searchStrategy(parse("~p | ~~p"), RuleSet::presetN()).kind == VerdictKind::Valid);
    CHECK(searchStrategy(parse("p & q -> p"), RuleSet::presetN()).kind == VerdictKind::Invalid);
}
