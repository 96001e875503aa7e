#include "dialogic/rules.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dialogic {

const char* ruleName(RuleName r) {
    switch (r) {
        case RuleName::D10: return "D10";
        case RuleName::D10Prime: return "D10'";
        case RuleName::D11: return "D11";
        case RuleName::D12: return "D12";
        case RuleName::D13: return "D13";
        case RuleName::E: return "E";
    }
    return "?";
}

namespace {

// True when move i asserts the atom named `name`.  Symbolic attacks
// assert nothing; attack and defense contents that are formulas do.
bool assertsAtom(const Move& m, const std::string& name) {
    return m.statement.isFormula() && m.statement.formula()->isAtomic() &&
           m.statement.formula()->atomName() == name;
}

bool oAssertedAtomBefore(const Dialogue& d, const std::string& name) {
    for (const Move& m : d.moves())
        if (m.player == Player::O && assertsAtom(m, name)) return true;
    return false;
}

}  // namespace

bool admitsD10(const Dialogue& d, const Move& m) {
    if (m.player != Player::P) return true;
    if (!m.statement.isAtomicFormula()) return true;
    return oAssertedAtomBefore(d, m.statement.formula()->atomName());
}

bool admitsD10prime(const Dialogue& d, const Move& m) {
    if (admitsD10(d, m)) return true;
    // The relaxation admits fresh atoms in defensive moves tied to a
    // disjunction: answering the ?-attack on the mover's own disjunction,
    // or answering an attack whose asserted content is a disjunction.
    if (m.player != Player::P || m.stance != Stance::Defend) return false;
    const Move& attack = d.moves()[static_cast<std::size_t>(m.ref)];
    if (attack.statement.isSymbolic() &&
        attack.statement.sym() == Statement::Sym::Question)
        return true;
    return attack.statement.isFormula() &&
           attack.statement.formula()->kind() == Conn::Or;
}

bool admitsD11(const Dialogue& d, const Move& m) {
    if (m.stance != Stance::Defend) return true;
    // Latest open (unanswered) attack made by the adversary; by
    // alternation every adversary attack targets the mover.
    int latestOpen = -1;
    const auto& moves = d.moves();
    for (int i = 0; i < static_cast<int>(moves.size()); ++i) {
        const Move& mv = moves[static_cast<std::size_t>(i)];
        if (mv.player == other(m.player) && mv.stance == Stance::Attack && !d.isAnswered(i))
            latestOpen = i;
    }
    return m.ref == latestOpen;
}

bool admitsD12(const Dialogue& d, const Move& m) {
    return m.stance != Stance::Defend || !d.isAnswered(m.ref);
}

bool admitsD13(const Dialogue& d, const Move& m) {
    if (m.stance != Stance::Attack) return true;
    if (m.ref % 2 != 0) return true;  // only P-assertions are protected
    return !d.isAttacked(m.ref);
}

bool admitsE(const Dialogue& d, const Move& m) {
    if (m.player != Player::O) return true;
    return m.ref == d.lastIndex();
}

bool admitsRule(RuleName r, const Dialogue& d, const Move& m) {
    switch (r) {
        case RuleName::D10: return admitsD10(d, m);
        case RuleName::D10Prime: return admitsD10prime(d, m);
        case RuleName::D11: return admitsD11(d, m);
        case RuleName::D12: return admitsD12(d, m);
        case RuleName::D13: return admitsD13(d, m);
        case RuleName::E: return admitsE(d, m);
    }
    return true;
}

RuleSet RuleSet::presetD() {
    return RuleSet("D", {RuleName::D10, RuleName::D11, RuleName::D12, RuleName::D13});
}
RuleSet RuleSet::presetDE() {
    return RuleSet("D+E",
                   {RuleName::D10, RuleName::D11, RuleName::D12, RuleName::D13, RuleName::E});
}
RuleSet RuleSet::presetCL() {
    return RuleSet("CL", {RuleName::D10, RuleName::D13, RuleName::E});
}
RuleSet RuleSet::presetN() { return RuleSet("N", {RuleName::D10, RuleName::D13}); }
RuleSet RuleSet::presetCLprime() {
    return RuleSet("CLprime", {RuleName::D10Prime, RuleName::D13, RuleName::E});
}

RuleSet RuleSet::named(const std::string& spec) {
    if (spec == "D") return presetD();
    if (spec == "D+E") return presetDE();
    if (spec == "CL") return presetCL();
    if (spec == "N") return presetN();
    if (spec == "CLprime") return presetCLprime();
    // Explicit rule list, e.g. "D10+D13" or "D10'+D13+E".
    std::set<RuleName> rules;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, '+')) {
        if (tok == "D10") rules.insert(RuleName::D10);
        else if (tok == "D10'" || tok == "D10prime") rules.insert(RuleName::D10Prime);
        else if (tok == "D11") rules.insert(RuleName::D11);
        else if (tok == "D12") rules.insert(RuleName::D12);
        else if (tok == "D13") rules.insert(RuleName::D13);
        else if (tok == "E") rules.insert(RuleName::E);
        else
            throw std::invalid_argument(
                "unknown rule set '" + spec +
                "' (presets: D, D+E, CL, N, CLprime; rules: D10, D10', D11, D12, D13, E)");
    }
    if (rules.empty()) throw std::invalid_argument("empty rule set spec");
    std::string name;
    for (RuleName r : rules) {
        if (!name.empty()) name += '+';
        name += ruleName(r);
    }
    return RuleSet(name, rules);
}

bool RuleSet::admits(const Dialogue& d, const Move& m) const {
    for (RuleName r : rules_)
        if (!admitsRule(r, d, m)) return false;
    return true;
}

bool rootAdmissible(const FormulaPtr& f, const RuleSet& rs) {
    if (!f->isAtomic()) return true;
    return !(rs.has(RuleName::D10) || rs.has(RuleName::D10Prime));
}

std::vector<Move> legalMoves(const Dialogue& d, const RuleSet& rs) {
    std::vector<Move> out;
    for (const Move& m : skeletalMoves(d))
        if (rs.admits(d, m)) out.push_back(m);
    std::sort(out.begin(), out.end(), [](const Move& a, const Move& b) {
        if (a.ref != b.ref) return a.ref < b.ref;
        if (a.stance != b.stance) return a.stance == Stance::Attack;
        return a.statement.text() < b.statement.text();
    });
    return out;
}

}  // namespace dialogic
