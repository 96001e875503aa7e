#pragma once

// Independent validity deciders used to cross-check dialogue verdicts.
// Neither touches the game engine.
//
// classicalValid: exhaustive truth tables (formulas up to 20 atoms).
//
// intuitionisticValid: backward proof search in the contraction-free
// sequent calculus G4ip (Dyckhoff's LJT).  Negation is handled by
// translating ~A to A -> _|_.  The left implication rule is split by the
// shape of the implication's antecedent, which makes every rule strictly
// reduce a multiset measure, so the search terminates without loop
// checking.

#include <map>
#include <string>

#include "dialogic/formula.hpp"

namespace dialogic {

// Total assignment of truth values; supplied per-formula.
using Valuation = std::map<std::string, bool>;

bool evaluate(const FormulaPtr& f, const Valuation& v);

// True iff `f` holds under all valuations of its atoms.  Throws
// std::invalid_argument beyond 20 distinct atoms.
bool classicalValid(const FormulaPtr& f);

// Propositional intuitionistic validity via G4ip.
bool intuitionisticValid(const FormulaPtr& f);

}  // namespace dialogic
