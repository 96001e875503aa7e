#include <functional>

#include "doctest.h"

#include "dialogic/rules.hpp"

using namespace dialogic;

namespace {

Move oAttack(const char* stmt, int ref) { return Move{Player::O, Statement(parse(stmt)), Stance::Attack, ref}; }
Move pAttack(const char* stmt, int ref) { return Move{Player::P, Statement(parse(stmt)), Stance::Attack, ref}; }
Move oDefend(const char* stmt, int ref) { return Move{Player::O, Statement(parse(stmt)), Stance::Defend, ref}; }
Move pDefend(const char* stmt, int ref) { return Move{Player::P, Statement(parse(stmt)), Stance::Defend, ref}; }

bool containsMove(const std::vector<Move>& moves, const Move& m) {
    for (const auto& x : moves)
        if (x == m) return true;
    return false;
}

}  // namespace

TEST_CASE("rule set presets and explicit lists") {
    CHECK(RuleSet::named("N").rules() == std::set<RuleName>{RuleName::D10, RuleName::D13});
    CHECK(RuleSet::named("D").rules() ==
          std::set<RuleName>{RuleName::D10, RuleName::D11, RuleName::D12, RuleName::D13});
    CHECK(RuleSet::named("D+E").has(RuleName::E));
    CHECK(RuleSet::named("CL").rules() ==
          std::set<RuleName>{RuleName::D10, RuleName::D13, RuleName::E});
    CHECK(RuleSet::named("CLprime").has(RuleName::D10Prime));
    CHECK(RuleSet::named("D10+D13").isN());
    CHECK(RuleSet::named("D10'+D13+E") == RuleSet::presetCLprime());
    CHECK_THROWS_AS(RuleSet::named("XYZ"), std::invalid_argument);
    CHECK_THROWS_AS(RuleSet::named("D10+banana"), std::invalid_argument);
}

TEST_CASE("D10: P asserts an atom only after O did") {
    SUBCASE("defending the excluded middle with a fresh atom is barred") {
        Dialogue d(parse("p | ~p"));
        d.push(Move{Player::O, Statement::question(), Stance::Attack, 0});
        CHECK(!admitsD10(d, pDefend("p", 1)));
        CHECK(admitsD10(d, pDefend("~p", 1)));  // non-atomic content is free
    }
    SUBCASE("an atom already asserted by O is available") {
        Dialogue d(parse("p -> p"));
        d.push(oAttack("p", 0));
        CHECK(admitsD10(d, pDefend("p", 1)));
    }
    SUBCASE("O is never constrained") {
        Dialogue d(parse("~p"));
        CHECK(admitsD10(d, oAttack("p", 0)));
    }
}

TEST_CASE("D11: only the latest open adversary attack may be answered") {
    // Skeletal history with two open O attacks (indices 1 and 3): P
    // counterattacks instead of defending, then O attacks the root again.
    Dialogue d(parse("~p -> (~q -> (r | r))"));
    d.push(oAttack("~p", 0));
    d.push(pAttack("p", 1));
    d.push(oAttack("~p", 0));
    REQUIRE(d.turn() == Player::P);

    const Move deferred = pDefend("~q -> (r | r)", 1);
    const Move latest = pDefend("~q -> (r | r)", 3);
    CHECK(!admitsD11(d, deferred));
    CHECK(admitsD11(d, latest));
    CHECK(admitsD11(d, pAttack("p", 3)));  // attacks are unconstrained
}

TEST_CASE("D12: an attack is answered at most once") {
    Dialogue d(parse("p & p -> (p | p)"));
    d.push(oAttack("p & p", 0));
    d.push(Move{Player::P, Statement::andLeft(), Stance::Attack, 1});
    d.push(oDefend("p", 2));
    d.push(pDefend("p | p", 1));
    d.push(Move{Player::O, Statement::question(), Stance::Attack, 4});
    REQUIRE(d.turn() == Player::P);

    CHECK(!admitsD12(d, pDefend("p | p", 1)));  // attack 1 already answered at move 4
    CHECK(admitsD12(d, pDefend("p", 5)));       // first answer to attack 5
}

TEST_CASE("D13: a P-assertion is attacked at most once, per occurrence") {
    SUBCASE("the root cannot be attacked twice") {
        Dialogue d(parse("~p & ~p"));
        d.push(Move{Player::O, Statement::andLeft(), Stance::Attack, 0});
        d.push(pDefend("~p", 1));
        d.push(oAttack("p", 2));
        d.push(pDefend("~p", 1));  // repeated defense, fine without D12
        CHECK(!admitsD13(d, Move{Player::O, Statement::andRight(), Stance::Attack, 0}));
    }
    SUBCASE("two occurrences of the same formula are attackable separately") {
        Dialogue d(parse("~p & ~p"));
        d.push(Move{Player::O, Statement::andLeft(), Stance::Attack, 0});
        d.push(pDefend("~p", 1));
        d.push(oAttack("p", 2));
        d.push(pDefend("~p", 1));  // a second token of ~p
        CHECK(admitsD13(d, oAttack("p", 4)));
    }
    SUBCASE("O-assertions are not protected") {
        Dialogue d(parse("~~p -> p"));
        d.push(oAttack("~~p", 0));
        d.push(pAttack("~p", 1));
        d.push(oAttack("p", 2));
        CHECK(admitsD13(d, pAttack("~p", 1)));  // P may attack move 1 again
    }
}

TEST_CASE("E: O reacts only to the immediately preceding move") {
    Dialogue d(parse("(p & q) -> p"));
    d.push(oAttack("p & q", 0));
    d.push(Move{Player::P, Statement::andLeft(), Stance::Attack, 1});
    REQUIRE(d.turn() == Player::O);

    CHECK(admitsE(d, oDefend("p", 2)));
    Dialogue d2(parse("(p & q) -> (p & q)"));
    d2.push(oAttack("p & q", 0));
    d2.push(pDefend("p & q", 1));
    REQUIRE(d2.turn() == Player::O);
    CHECK(!admitsE(d2, Move{Player::O, Statement::andLeft(), Stance::Attack, 0}));
    CHECK(admitsE(d2, Move{Player::O, Statement::andLeft(), Stance::Attack, 2}));

    // P is unconstrained.
    Dialogue d3(parse("~~p -> p"));
    d3.push(oAttack("~~p", 0));
    d3.push(pAttack("~p", 1));
    d3.push(oAttack("p", 2));
    CHECK(admitsE(d3, pAttack("~p", 1)));
}

TEST_CASE("D10': fresh atoms are allowed in disjunction defenses") {
    SUBCASE("defending one's own disjunction") {
        Dialogue d(parse("p | ~p"));
        d.push(Move{Player::O, Statement::question(), Stance::Attack, 0});
        CHECK(admitsD10prime(d, pDefend("p", 1)));
        CHECK(!admitsD10(d, pDefend("p", 1)));
    }
    SUBCASE("defending against an attack that asserted a disjunction") {
        Dialogue d(parse("(p | ~p) -> p"));
        d.push(oAttack("p | ~p", 0));
        CHECK(admitsD10prime(d, pDefend("p", 1)));
    }
    SUBCASE("an implication attack with atomic content gives no exemption") {
        Dialogue d(parse("q -> p"));
        d.push(oAttack("q", 0));
        CHECK(!admitsD10prime(d, pDefend("p", 1)));
    }
    SUBCASE("attacks never profit from the exemption") {
        // P attacking O's ~p would assert the fresh atom p.
        Dialogue d(parse("~p -> q"));
        d.push(oAttack("~p", 0));
        CHECK(!admitsD10prime(d, pAttack("p", 1)));
        CHECK(!admitsD10(d, pAttack("p", 1)));
    }
}

TEST_CASE("legalMoves: filtering and deterministic order") {
    SUBCASE("no O move exists against an atomic root") {
        Dialogue d(parse("p"));
        CHECK(legalMoves(d, RuleSet::presetN()).empty());
    }
    SUBCASE("a conjunction root admits both symbolic attacks, left first") {
        Dialogue d(parse("p & q"));
        const auto moves = legalMoves(d, RuleSet::presetN());
        REQUIRE(moves.size() == 2);
        CHECK(moves[0] == Move{Player::O, Statement::andLeft(), Stance::Attack, 0});
        CHECK(moves[1] == Move{Player::O, Statement::andRight(), Stance::Attack, 0});
    }
    SUBCASE("E filters O moves that reference older assertions") {
        // After P counterattacks, O's only skeletal continuation points
        // two moves back and E removes it.
        Dialogue d(parse("~p -> q"));
        d.push(oAttack("~p", 0));
        d.push(pAttack("p", 1));
        REQUIRE(d.turn() == Player::O);
        const auto skeletal = skeletalMoves(d);
        CHECK(!skeletal.empty());
        for (const auto& m : skeletal) CHECK(m.ref != d.lastIndex());
        CHECK(legalMoves(d, RuleSet::presetCL()).empty());
    }
}

TEST_CASE("monotone filtering: adding rules only removes moves") {
    const auto subsumes = [](const RuleSet& bigger, const RuleSet& smaller, Dialogue& d,
                             int budget, auto&& self) -> void {
        const auto big = legalMoves(d, bigger);
        const auto small = legalMoves(d, smaller);
        for (const Move& m : big) CHECK(containsMove(small, m));
        if (budget == 0) return;
        for (const Move& m : small) {
            d.push(m);
            self(bigger, smaller, d, budget - 1, self);
            d.pop();
        }
    };
    for (const char* text : {"p | ~p", "~~p -> p", "(p & q) -> p"}) {
        Dialogue d(parse(text));
        subsumes(RuleSet::presetDE(), RuleSet::presetD(), d, 4, subsumes);
        Dialogue d2(parse(text));
        subsumes(RuleSet::presetCL(), RuleSet::presetN(), d2, 4, subsumes);
    }
}

TEST_CASE("E implies D13 on positions reachable under D10+E") {
    const RuleSet d10e = RuleSet::named("D10+E");
    const RuleSet d10d13e = RuleSet::presetCL();
    const auto explore = [&](Dialogue& d, int budget, auto&& self) -> void {
        if (d.turn() == Player::O)
            CHECK(legalMoves(d, d10e) == legalMoves(d, d10d13e));
        if (budget == 0) return;
        for (const Move& m : legalMoves(d, d10e)) {
            d.push(m);
            self(d, budget - 1, self);
            d.pop();
        }
    };
    for (const char* text : {"p | ~p", "~~p -> p", "(p -> q) | (q -> p)", "~(p & q)"}) {
        Dialogue d(parse(text));
        explore(d, 6, explore);
    }
}

TEST_CASE("under N a past O defense can always be repeated") {
    // Sweep N-dialogues: wherever O has defended, P has moved on, and O
    // is on turn again, O may re-play that very defense.  This is the
    // repetition that makes every O-defense branch endless.
    const auto n = RuleSet::presetN();
    const auto sweep = [&n](Dialogue& d, int budget, auto&& self) -> void {
        if (d.turn() == Player::O) {
            const auto legal = legalMoves(d, n);
            for (int i = 0; i < static_cast<int>(d.length()); ++i) {
                const Move& past = d.moves()[static_cast<std::size_t>(i)];
                if (past.player == Player::O && past.stance == Stance::Defend)
                    CHECK(containsMove(legal, past));
            }
        }
        if (budget == 0) return;
        for (const Move& m : legalMoves(d, n)) {
            d.push(m);
            self(d, budget - 1, self);
            d.pop();
        }
    };
    for (const char* text : {"(p & (p -> q)) -> q", "p & q -> p", "~(p & q)"}) {
        Dialogue d(parse(text));
        sweep(d, 7, sweep);
    }
}

TEST_CASE("under N an answered attack stays answerable") {
    // O defends, P moves on, O may repeat the defense: the repetition
    // that forces every O-defense branch to run forever.
    Dialogue d(parse("(p & (p -> q)) -> q"));
    d.push(oAttack("p & (p -> q)", 0));
    d.push(Move{Player::P, Statement::andLeft(), Stance::Attack, 1});
    d.push(oDefend("p", 2));
    d.push(Move{Player::P, Statement::andRight(), Stance::Attack, 1});
    REQUIRE(d.turn() == Player::O);
    const auto moves = legalMoves(d, RuleSet::presetN());
    CHECK(containsMove(moves, oDefend("p", 2)));       // repeat the old defense
    CHECK(containsMove(moves, oDefend("p -> q", 4)));  // or answer the new attack
}
