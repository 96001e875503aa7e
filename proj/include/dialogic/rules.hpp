#pragma once

// Structural rules as history predicates over (dialogue, candidate move),
// plus the named rule sets and the filtered legal-move generator.
//
//   D10   P may assert an atomic formula only after O has asserted it.
//   D10'  D10, relaxed: P may assert fresh atoms in disjunction defenses.
//   D11   A defense must answer the latest open adversary attack.
//   D12   An attack may be answered at most once.
//   D13   A P-assertion may be attacked at most once (per occurrence).
//   E     O must react to the immediately preceding move.
//
// Presets: D = D10-D13, D+E, CL = D10+D13+E, N = D10+D13,
// CLprime = D10'+D13+E.

#include <set>
#include <string>
#include <vector>

#include "dialogic/game.hpp"

namespace dialogic {

enum class RuleName : std::uint8_t { D10, D10Prime, D11, D12, D13, E };

const char* ruleName(RuleName r);

// A candidate move must be skeletally legal for the dialogue before any
// admits* predicate is consulted.
bool admitsD10(const Dialogue& d, const Move& m);
bool admitsD10prime(const Dialogue& d, const Move& m);
bool admitsD11(const Dialogue& d, const Move& m);
bool admitsD12(const Dialogue& d, const Move& m);
bool admitsD13(const Dialogue& d, const Move& m);
bool admitsE(const Dialogue& d, const Move& m);

bool admitsRule(RuleName r, const Dialogue& d, const Move& m);

class RuleSet {
public:
    RuleSet(std::string name, std::set<RuleName> rules)
        : name_(std::move(name)), rules_(std::move(rules)) {}

    // Preset by name (D, D+E, CL, N, CLprime) or an explicit list such
    // as "D10+D13" or "D10'+D13+E".  Throws std::invalid_argument on an
    // unknown name.
    static RuleSet named(const std::string& spec);

    static RuleSet presetD();
    static RuleSet presetDE();
    static RuleSet presetCL();
    static RuleSet presetN();
    static RuleSet presetCLprime();

    const std::string& name() const noexcept { return name_; }
    const std::set<RuleName>& rules() const noexcept { return rules_; }
    bool has(RuleName r) const { return rules_.count(r) > 0; }

    // True when the rule content equals the N preset (D10+D13),
    // whatever the display name.
    bool isN() const { return rules_ == std::set<RuleName>{RuleName::D10, RuleName::D13}; }

    bool admits(const Dialogue& d, const Move& m) const;

    bool operator==(const RuleSet& o) const { return rules_ == o.rules_; }

private:
    std::string name_;
    std::set<RuleName> rules_;
};

// Whether P's initial assertion of `f` is itself admissible: under D10
// or D10' an atomic initial formula has no admissible dialogue at all.
bool rootAdmissible(const FormulaPtr& f, const RuleSet& rs);

// skeletalMoves filtered by every rule of `rs`, in deterministic order:
// by reference index, attacks before defenses, then statement text.
std::vector<Move> legalMoves(const Dialogue& d, const RuleSet& rs);

}  // namespace dialogic
