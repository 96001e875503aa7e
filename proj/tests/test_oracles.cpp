#include "doctest.h"

#include "dialogic/oracles.hpp"

using namespace dialogic;

TEST_CASE("classical validity by truth table") {
    CHECK(classicalValid(parse("p | ~p")));
    CHECK(classicalValid(parse("((p -> q) -> p) -> p")));
    CHECK(!classicalValid(parse("p")));
    CHECK(!classicalValid(parse("(p | ~p) -> p")));
    CHECK(classicalValid(parse("(p -> q) | (q -> p)")));
    CHECK(classicalValid(parse("~(p & q) -> (~p | ~q)")));
    CHECK(!classicalValid(parse("p & q -> r")));
}

TEST_CASE("classicalValid rejects oversized atom sets") {
    FormulaPtr wide = Formula::atom("a0");
    for (int i = 1; i <= 20; ++i)
        wide = Formula::disj(wide, Formula::atom("a" + std::to_string(i)));
    CHECK_THROWS_AS(classicalValid(wide), std::invalid_argument);  // 21 atoms
}

TEST_CASE("evaluate under explicit valuations") {
    const auto f = parse("(p & ~q) -> r");
    CHECK(evaluate(f, Valuation{{"p", true}, {"q", false}, {"r", true}}));
    CHECK(!evaluate(f, Valuation{{"p", true}, {"q", false}, {"r", false}}));
    CHECK(evaluate(f, Valuation{{"p", false}, {"q", false}, {"r", false}}));
    CHECK_THROWS_AS(evaluate(f, Valuation{{"p", true}}), std::invalid_argument);
}

TEST_CASE("intuitionistic theorems") {
    CHECK(intuitionisticValid(parse("p -> p")));
    CHECK(intuitionisticValid(parse("p -> (q -> p)")));
    CHECK(intuitionisticValid(parse("(p -> (q -> r)) -> ((p -> q) -> (p -> r))")));
    CHECK(intuitionisticValid(parse("p & q -> p")));
    CHECK(intuitionisticValid(parse("p & q -> q")));
    CHECK(intuitionisticValid(parse("p -> (p | q)")));
    CHECK(intuitionisticValid(parse("(p -> r) -> ((q -> r) -> (p | q -> r))")));
    CHECK(intuitionisticValid(parse("p -> ~~p")));
    CHECK(intuitionisticValid(parse("~~~p -> ~p")));
    CHECK(intuitionisticValid(parse("(p -> q) -> (~q -> ~p)")));
    CHECK(intuitionisticValid(parse("~(p & ~p)")));
    CHECK(intuitionisticValid(parse("(~p | ~q) -> ~(p & q)")));
    CHECK(intuitionisticValid(parse("~(p | q) -> (~p & ~q)")));
    CHECK(intuitionisticValid(parse("(~p & ~q) -> ~(p | q)")));
    CHECK(intuitionisticValid(parse("~~(p | ~p)")));
    CHECK(intuitionisticValid(parse("(p & (q | r)) -> ((p & q) | (p & r))")));
    CHECK(intuitionisticValid(parse("p -> ((p -> q) -> q)")));
}

TEST_CASE("intuitionistic non-theorems") {
    CHECK(!intuitionisticValid(parse("p | ~p")));
    CHECK(!intuitionisticValid(parse("~~p -> p")));
    CHECK(!intuitionisticValid(parse("((p -> q) -> p) -> p")));
    CHECK(!intuitionisticValid(parse("~(p & q) -> (~p | ~q)")));
    CHECK(!intuitionisticValid(parse("(~q -> ~p) -> (p -> q)")));
    CHECK(!intuitionisticValid(parse("(p -> q) | (q -> p)")));
    CHECK(!intuitionisticValid(parse("~p | ~~p")));
    CHECK(!intuitionisticValid(parse("p")));
    CHECK(!intuitionisticValid(parse("(p -> q) | (p -> ~q)")));
}

TEST_CASE("intuitionistic validity implies classical validity") {
    for (const auto& f : enumerateFormulas(5, {Atom("p"), Atom("q")})) {
        CAPTURE(f->text());
        if (intuitionisticValid(f)) CHECK(classicalValid(f));
    }
}

TEST_CASE("Glivenko: classical validity is double-negated intuitionistic validity") {
    for (const auto& f : enumerateFormulas(5, {Atom("p"), Atom("q")})) {
        CAPTURE(f->text());
        CHECK(classicalValid(f) == intuitionisticValid(Formula::neg(Formula::neg(f))));
    }
}
