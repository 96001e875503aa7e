#include "doctest.h"

#include "dialogic/export.hpp"
#include "dialogic/search.hpp"

using namespace dialogic;

namespace {

VerdictKind decide(const char* text, const RuleSet& rs) {
    return searchStrategy(parse(text), rs).kind;
}

}  // namespace

TEST_CASE("headline verdicts under N") {
    const auto n = RuleSet::presetN();
    CHECK(decide("p | ~p", n) == VerdictKind::Valid);
    CHECK(decide("((p -> q) -> p) -> p", n) == VerdictKind::Invalid);  // Peirce
    CHECK(decide("p", n) == VerdictKind::Invalid);
    CHECK(decide("(p & p) | ~(p & p)", n) == VerdictKind::Invalid);
    CHECK(decide("p -> ~~p", n) == VerdictKind::Valid);
    CHECK(decide("~~p", n) == VerdictKind::Invalid);
}

TEST_CASE("Peirce's law is classically valid") {
    CHECK(decide("((p -> q) -> p) -> p", RuleSet::presetCL()) == VerdictKind::Valid);
}

TEST_CASE("rule sets without D10 validate atoms trivially") {
    const auto bare = RuleSet::named("D13+E");
    const auto v = searchStrategy(parse("p"), bare);
    CHECK(v.kind == VerdictKind::Valid);
    REQUIRE(v.strategy.has_value());
    CHECK(v.strategy->children.empty());
    CHECK(verifyStrategy(*v.strategy, parse("p"), bare));
}

TEST_CASE("valid verdicts come with verifiable strategies") {
    const auto n = RuleSet::presetN();
    for (const char* text : {"p | ~p", "p -> ~~p", "~~p -> p", "(p -> q) | (p -> ~q)",
                             "~(p & q) -> (~p | ~q)"}) {
        const auto f = parse(text);
        const auto v = searchStrategy(f, n);
        REQUIRE(v.kind == VerdictKind::Valid);
        REQUIRE(v.strategy.has_value());
        CAPTURE(text);
        CHECK(verifyStrategy(*v.strategy, f, n));
    }
}

TEST_CASE("verifyStrategy rejects corrupted trees") {
    const auto n = RuleSet::presetN();
    const auto f = parse("p -> ~~p");
    const auto v = searchStrategy(f, n);
    REQUIRE(v.strategy.has_value());

    SUBCASE("duplicated P reply under an O node") {
        StrategyNode bad = *v.strategy;
        REQUIRE(bad.children.size() == 1);          // O's single attack
        REQUIRE(bad.children[0].children.size() == 1);
        bad.children[0].children.push_back(bad.children[0].children[0]);
        CHECK(!verifyStrategy(bad, f, n));
    }
    SUBCASE("missing O option") {
        // p -> (p & p): after P defends with p & p, O may pick &L or &R.
        const auto g = parse("p -> (p & p)");
        const auto vg = searchStrategy(g, n);
        REQUIRE(vg.kind == VerdictKind::Valid);
        StrategyNode bad = *vg.strategy;
        StrategyNode* node = &bad;
        while (node->children.size() < 2 && !node->children.empty())
            node = &node->children.front();
        REQUIRE(node->children.size() == 2);
        node->children.pop_back();
        CHECK(!verifyStrategy(bad, g, n));
    }
    SUBCASE("wrong root") {
        CHECK(!verifyStrategy(*v.strategy, parse("q -> ~~q"), n));
    }
    SUBCASE("no strategy exists for an atom") {
        CHECK(!verifyStrategy(*v.strategy, parse("p"), n));
    }
}

TEST_CASE("naive bounded minimax on the examples") {
    const auto n = RuleSet::presetN();
    CHECK(naiveSearch(parse("p | ~p"), n, 10) == NaiveOutcome::WinWithin);
    CHECK(naiveSearch(parse("p"), n, 6) == NaiveOutcome::NoWinWithin);
    CHECK(naiveSearch(parse("p -> p"), n, 10) == NaiveOutcome::WinWithin);
    CHECK(naiveSearch(parse("p | ~p"), n, 2) == NaiveOutcome::NoWinWithin);  // too shallow
}

TEST_CASE("pruneCorollary2 drops P moves that let O defend") {
    const auto n = RuleSet::presetN();

    SUBCASE("attacking O's disjunction is a dead end") {
        Dialogue d(parse("(p | q) -> r"));
        d.push(Move{Player::O, Statement(parse("p | q")), Stance::Attack, 0});
        const auto candidates = legalMoves(d, n);
        const Move attack{Player::P, Statement::question(), Stance::Attack, 1};
        REQUIRE(std::count(candidates.begin(), candidates.end(), attack) == 1);
        const auto kept = pruneCorollary2(d, candidates, n);
        CHECK(std::count(kept.begin(), kept.end(), attack) == 0);
    }
    SUBCASE("attacking O's implication is a dead end") {
        Dialogue d(parse("(~s -> q) -> r"));
        d.push(Move{Player::O, Statement(parse("~s -> q")), Stance::Attack, 0});
        const auto candidates = legalMoves(d, n);
        const Move attack{Player::P, Statement(parse("~s")), Stance::Attack, 1};
        REQUIRE(std::count(candidates.begin(), candidates.end(), attack) == 1);
        const auto kept = pruneCorollary2(d, candidates, n);
        CHECK(std::count(kept.begin(), kept.end(), attack) == 0);
    }
    SUBCASE("attacking O's negation is kept") {
        Dialogue d(parse("~~q -> q"));
        d.push(Move{Player::O, Statement(parse("~~q")), Stance::Attack, 0});
        const auto candidates = legalMoves(d, n);
        const Move attack{Player::P, Statement(parse("~q")), Stance::Attack, 1};
        REQUIRE(std::count(candidates.begin(), candidates.end(), attack) == 1);
        const auto kept = pruneCorollary2(d, candidates, n);
        CHECK(std::count(kept.begin(), kept.end(), attack) == 1);
    }
}

TEST_CASE("corollary-2 pruning changes stats, never verdicts") {
    const auto n = RuleSet::presetN();
    SearchConfig on, off;
    on.corollary2Pruning = true;
    off.corollary2Pruning = false;
    for (const auto& f : enumerateFormulas(4, {Atom("p"), Atom("q")})) {
        const auto vOn = searchStrategy(f, n, on);
        const auto vOff = searchStrategy(f, n, off);
        CAPTURE(f->text());
        CHECK(vOn.kind == vOff.kind);
    }
}

TEST_CASE("no N strategy contains an O defense") {
    const auto n = RuleSet::presetN();
    for (const auto& f : enumerateFormulas(5, {Atom("p"), Atom("q")})) {
        const auto v = searchStrategy(f, n);
        if (v.kind != VerdictKind::Valid) continue;
        CAPTURE(f->text());
        CHECK(!containsODefense(*v.strategy));
    }
}

TEST_CASE("search is deterministic") {
    const auto n = RuleSet::presetN();
    for (const char* text : {"p | ~p", "(p -> q) | (q -> p)", "~(p | q) -> (~p & ~q)"}) {
        const auto f = parse(text);
        const auto a = searchStrategy(f, n);
        const auto b = searchStrategy(f, n);
        CHECK(a.kind == b.kind);
        CHECK(verdictToJson(f, n, a)["strategy"] == verdictToJson(f, n, b)["strategy"]);
        CHECK(a.stats.nodesExpanded == b.stats.nodesExpanded);
    }
}

TEST_CASE("budgets produce honest unknowns") {
    SearchConfig tiny;
    tiny.maxNodes = 5;
    const auto v = searchStrategy(parse("(p -> q) | (p -> ~q)"), RuleSet::presetN(), tiny);
    CHECK(v.kind == VerdictKind::Unknown);
    CHECK(v.budgetExceeded);

    SearchConfig shallow;
    shallow.maxDepth = 3;
    const auto v2 = searchStrategy(parse("(p -> q) | (p -> ~q)"), RuleSet::presetN(), shallow);
    CHECK(v2.kind == VerdictKind::Unknown);

    CHECK_THROWS_AS(searchStrategy(parse("p"), RuleSet::presetN(), SearchConfig{0, 10, true, {}}),
                    std::invalid_argument);
}

TEST_CASE("abstract positions merge interchangeable occurrences") {
    const auto n = RuleSet::presetN();
    // Two routes to the same abstract state: defending the initial
    // ?-attack twice with the same disjunct.
    Dialogue d(parse("~p | ~p"));
    d.push(Move{Player::O, Statement::question(), Stance::Attack, 0});
    d.push(Move{Player::P, Statement(parse("~p")), Stance::Defend, 1});
    d.push(Move{Player::O, Statement(parse("p")), Stance::Attack, 2});
    const auto before = AbstractPosition::of(d, n);
    d.push(Move{Player::P, Statement(parse("~p")), Stance::Defend, 1});
    d.push(Move{Player::O, Statement(parse("p")), Stance::Attack, 4});
    const auto after = AbstractPosition::of(d, n);
    CHECK(before.key() == after.key());
    CHECK(after.dominates(before));
}

TEST_CASE("domination is pointwise on fresh occurrences") {
    AbstractPosition lean, rich, otherTurn;
    lean.turn = rich.turn = Player::P;
    lean.baseKey = rich.baseKey = "X";
    lean.freshP = {{"~p", 1}};
    rich.freshP = {{"~p", 2}, {"q -> q", 1}};
    CHECK(rich.dominates(lean));
    CHECK(!lean.dominates(rich));
    CHECK(lean.dominates(lean));

    otherTurn = rich;
    otherTurn.turn = Player::O;
    CHECK(!otherTurn.dominates(lean));

    AbstractPosition otherBase = rich;
    otherBase.baseKey = "Y";
    CHECK(!otherBase.dominates(lean));
}

TEST_CASE("a formula can be invalid although O never defends anywhere") {
    // The converse of the O-defense principle fails: this three-atom
    // implication is invalid under N, yet no position in its dialogue
    // tree offers O a defensive move.
    const auto f = parse("(p -> (~q | ~r)) -> ((~p -> ~q) | (~p -> ~r))");
    const auto n = RuleSet::presetN();
    CHECK(searchStrategy(f, n).kind == VerdictKind::Invalid);

    const auto walk = [&n](Dialogue& d, int budget, auto&& self) -> void {
        const auto legal = legalMoves(d, n);
        if (d.turn() == Player::O)
            for (const Move& m : legal) CHECK(m.stance == Stance::Attack);
        if (budget == 0) return;
        for (const Move& m : legal) {
            d.push(m);
            self(d, budget - 1, self);
            d.pop();
        }
    };
    Dialogue d(f);
    walk(d, 9, walk);
}

TEST_CASE("evaluatePosition matches full search from the root") {
    const auto n = RuleSet::presetN();
    for (const char* text : {"p | ~p", "((p -> q) -> p) -> p", "p -> (p & p)"}) {
        const auto f = parse(text);
        Dialogue d(f);
        const auto value = evaluatePosition(d, n);
        const auto verdict = searchStrategy(f, n);
        CAPTURE(text);
        CHECK(value.pWins == (verdict.kind == VerdictKind::Valid));
    }
}
