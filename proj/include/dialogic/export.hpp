#pragma once

// Serialization of verdicts, strategies and truncated dialogue trees.
//
// Strategy JSON:
//   {"formula": ..., "rules": ..., "verdict": "valid|invalid|unknown",
//    "strategy": node | null}
//   node = {"player": "P|O", "statement": ..., "stance":
//           "initial|attack|defend", "ref": int|null, "children": [...]}
//
// DOT mirrors the same tree with P nodes boxed and O nodes oval.

#include <string>

#include "dialogic/rules.hpp"
#include "dialogic/search.hpp"

#include "json.hpp"

namespace dialogic {

nlohmann::json strategyNodeToJson(const StrategyNode& node);

nlohmann::json verdictToJson(const FormulaPtr& f, const RuleSet& rs, const Verdict& v);

std::string strategyToDot(const FormulaPtr& f, const RuleSet& rs, const Verdict& v);

// Text rendering of the dialogue tree to `depth` (highest move index
// shown); deeper continuations are marked with "...".
std::string renderTree(const FormulaPtr& f, const RuleSet& rs, int depth);

// The same truncated tree as DOT / JSON.
std::string treeToDot(const FormulaPtr& f, const RuleSet& rs, int depth);
nlohmann::json treeToJson(const FormulaPtr& f, const RuleSet& rs, int depth);

}  // namespace dialogic
