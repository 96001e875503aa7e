#pragma once

// Validity by AND/OR search over the dialogue tree: P positions are
// existential, O positions universal, and a dialogue is won by P exactly
// when it ends on a P move with the adversary stuck.
//
// The dialogue tree is never materialized; it exists implicitly through
// legalMoves.  Termination on repetitive rule sets comes from scoring a
// branch as lost for P as soon as its abstract position repeats (or
// dominates) one seen earlier on the same branch: a minimal winning
// strategy never revisits a position, so pruning repeats preserves both
// Valid and Invalid outcomes.  Depth/node budgets remain as a backstop;
// a search cut short by budgets reports Unknown, never a fake verdict.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dialogic/game.hpp"
#include "dialogic/rules.hpp"

namespace dialogic {

struct SearchConfig {
    int maxDepth = 40;            // highest admissible move index
    long maxNodes = 10'000'000;   // expansion budget
    bool cyclePruning = true;
    // Corollary-2 pruning: drop P moves after which O could defend.
    // Defaults to on exactly for the N rule set; it is only ever applied
    // when the active rules are D10+D13.
    std::optional<bool> corollary2Pruning;
};

struct SearchStats {
    long nodesExpanded = 0;
    int maxDepthReached = 0;
    double elapsedSeconds = 0.0;
};

struct StrategyNode {
    Move move;
    std::vector<StrategyNode> children;
};

enum class VerdictKind : std::uint8_t { Valid, Invalid, Unknown };

const char* verdictName(VerdictKind v);

struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    std::optional<StrategyNode> strategy;  // present iff kind == Valid
    bool budgetExceeded = false;
    SearchStats stats;
};

// Canonical summary of a dialogue position.  Two dialogues with equal
// summaries admit the same legal moves (up to re-indexing) and the same
// win conditions under the rule set the summary was built for:
//
//   - freshP: P's unattacked non-atomic assertions, counted per
//     occurrence when D13 is active (attacks consume them).  Under E
//     older P assertions are unreachable for O and are dropped; atoms
//     and already-attacked occurrences never matter again.
//   - oAsserted: statements O has asserted (P's attack targets, plus
//     the atoms D10 unlocks).
//   - oAttacks/pAttacks: the attacks each side may still answer.  With
//     D11/D12 this is the stack of open attacks, summarized by distinct
//     value with multiplicities capped at three and the top entry kept;
//     entries below a permanently unanswerable one are dead and
//     dropped.  Without D11/D12 every attack stays answerable forever
//     and an unordered set of values suffices.
//   - lastMove: descriptor of the preceding move when E is active.
struct AbstractPosition {
    Player turn = Player::P;
    std::string baseKey;                 // everything except freshP
    std::map<std::string, int> freshP;

    static AbstractPosition of(const Dialogue& d, const RuleSet& rs);

    std::string key() const;

    bool operator==(const AbstractPosition& o) const {
        return turn == o.turn && baseKey == o.baseKey && freshP == o.freshP;
    }

    // True when this position repeats `earlier` with at least as many
    // fresh P assertions everywhere (pointwise >=, all else equal).
    bool dominates(const AbstractPosition& earlier) const;
};

// Decides S-validity of `f`; Valid verdicts carry an extracted strategy
// that verifyStrategy accepts.  Deterministic for fixed inputs.  Throws
// std::invalid_argument on nonpositive budgets.
Verdict searchStrategy(const FormulaPtr& f, const RuleSet& rs, const SearchConfig& cfg = {});

// Checks the four winning-strategy conditions against freshly generated
// legal moves, independently of the search: the root asserts `f`, every
// branch is won by P, P nodes have exactly one child, O option sets are
// covered exactly.
bool verifyStrategy(const StrategyNode& s, const FormulaPtr& f, const RuleSet& rs);

enum class NaiveOutcome : std::uint8_t { WinWithin, NoWinWithin };

// Literal bounded minimax over raw dialogues, no abstraction or pruning:
// WinWithin iff P can force a win with every leaf at move index <= depth.
// Reference oracle for the pruned search.
NaiveOutcome naiveSearch(const FormulaPtr& f, const RuleSet& rs, int depth);

// Removes every P candidate after which O would have a legal defense;
// such moves cannot lie on a winning strategy for D10+D13 (any branch
// where O defends either ends with O or goes on forever).
std::vector<Move> pruneCorollary2(const Dialogue& d, const std::vector<Move>& candidates,
                                  const RuleSet& rs = RuleSet::presetN());

// True when the strategy contains a defensive O move anywhere.
bool containsODefense(const StrategyNode& s);

struct PositionValue {
    bool pWins = false;  // P can force a win from here
    bool solid = true;   // false when budgets cut the evaluation short
};

// AND/OR value of an arbitrary mid-game position.
PositionValue evaluatePosition(const Dialogue& d, const RuleSet& rs,
                               const SearchConfig& cfg = {});

}  // namespace dialogic
