#include "dialogic/game.hpp"

#include <sstream>
#include <stdexcept>

namespace dialogic {

const FormulaPtr& Statement::formula() const {
    if (!formula_) throw std::logic_error("formula() on symbolic attack");
    return formula_;
}

Statement::Sym Statement::sym() const {
    if (formula_) throw std::logic_error("sym() on formula statement");
    return sym_;
}

std::string Statement::text() const {
    if (formula_) return formula_->text();
    switch (sym_) {
        case Sym::Question: return "?";
        case Sym::AndLeft: return "&L";
        case Sym::AndRight: return "&R";
    }
    return "?";
}

bool Statement::operator==(const Statement& o) const noexcept {
    if (isFormula() != o.isFormula()) return false;
    if (isFormula()) return formula_->equals(*o.formula_);
    return sym_ == o.sym_;
}

std::string Move::describe() const {
    std::ostringstream out;
    out << playerChar(player) << ": " << statement.text();
    switch (stance) {
        case Stance::Initial: out << " (initial)"; break;
        case Stance::Attack: out << " [A," << ref << "]"; break;
        case Stance::Defend: out << " [D," << ref << "]"; break;
    }
    return out.str();
}

std::vector<Statement> attacksAgainst(const Statement& s) {
    if (!s.isFormula()) return {};
    const FormulaPtr& f = s.formula();
    switch (f->kind()) {
        case Conn::Atom: return {};
        case Conn::And: return {Statement::andLeft(), Statement::andRight()};
        case Conn::Or: return {Statement::question()};
        case Conn::Imp: return {Statement(f->left())};
        case Conn::Neg: return {Statement(f->left())};
    }
    return {};
}

std::vector<Statement> defensesAgainst(const Statement& attacked, const Statement& attack) {
    const auto legal = attacksAgainst(attacked);
    bool found = false;
    for (const auto& a : legal)
        if (a == attack) { found = true; break; }
    if (!found)
        throw std::invalid_argument("'" + attack.text() + "' is not a particle-rule attack on '" +
                                    attacked.text() + "'");
    const FormulaPtr& f = attacked.formula();
    switch (f->kind()) {
        case Conn::And:
            return {attack.sym() == Statement::Sym::AndLeft ? Statement(f->left())
                                                            : Statement(f->right())};
        case Conn::Or:
            return {Statement(f->left()), Statement(f->right())};
        case Conn::Imp:
            return {Statement(f->right())};
        case Conn::Neg:
            return {};  // no defense against the attack on a negation
        default:
            return {};
    }
}

Dialogue::Dialogue(FormulaPtr initialFormula) : initial_(std::move(initialFormula)) {
    moves_.push_back(Move{Player::P, Statement(initial_), Stance::Initial, -1});
}

void Dialogue::validate(const Move& m) const {
    const int n = static_cast<int>(moves_.size());
    if (m.player != playerAt(n))
        throw std::invalid_argument("move " + std::to_string(n) + ": wrong player");
    if (m.stance == Stance::Initial)
        throw std::invalid_argument("initial stance only at index 0");
    if (m.ref < 0 || m.ref >= n)
        throw std::invalid_argument("move reference out of range");
    const Move& target = moves_[static_cast<std::size_t>(m.ref)];
    if (m.stance == Stance::Attack) {
        if (target.player != other(m.player))
            throw std::invalid_argument("attack must target the adversary");
        if (!target.statement.isFormula() || target.statement.isAtomicFormula())
            throw std::invalid_argument("attack must target a non-atomic formula assertion");
        const auto attacks = attacksAgainst(target.statement);
        bool ok = false;
        for (const auto& a : attacks)
            if (a == m.statement) { ok = true; break; }
        if (!ok) throw std::invalid_argument("not a particle-rule attack");
    } else {
        if (target.stance != Stance::Attack)
            throw std::invalid_argument("defense must answer an attack");
        if (target.player != other(m.player))
            throw std::invalid_argument("defense must answer an adversary attack");
        const Move& attacked = moves_[static_cast<std::size_t>(target.ref)];
        if (attacked.player != m.player)
            throw std::invalid_argument("defense must protect the mover's own assertion");
        const auto defenses = defensesAgainst(attacked.statement, target.statement);
        bool ok = false;
        for (const auto& s : defenses)
            if (s == m.statement) { ok = true; break; }
        if (!ok) throw std::invalid_argument("not a particle-rule defense");
    }
}

void Dialogue::push(const Move& m) {
    validate(m);
    moves_.push_back(m);
}

void Dialogue::pop() {
    if (moves_.size() <= 1) throw std::logic_error("cannot pop the initial move");
    moves_.pop_back();
}

Dialogue Dialogue::extended(const Move& m) const {
    Dialogue d = *this;
    d.push(m);
    return d;
}

bool Dialogue::isAttacked(int i) const {
    for (const Move& m : moves_)
        if (m.stance == Stance::Attack && m.ref == i) return true;
    return false;
}

bool Dialogue::isAnswered(int i) const {
    for (const Move& m : moves_)
        if (m.stance == Stance::Defend && m.ref == i) return true;
    return false;
}

std::string Dialogue::render() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < moves_.size(); ++i)
        out << i << ". " << moves_[i].describe() << "\n";
    return out.str();
}

std::vector<Move> skeletalMoves(const Dialogue& d) {
    const Player mover = d.turn();
    const auto& moves = d.moves();
    std::vector<Move> out;
    for (int i = 0; i < static_cast<int>(moves.size()); ++i) {
        const Move& m = moves[static_cast<std::size_t>(i)];
        if (m.player != other(mover)) continue;
        // Attacks on the adversary's non-atomic assertions.
        if (m.statement.isFormula() && !m.statement.isAtomicFormula())
            for (const Statement& a : attacksAgainst(m.statement))
                out.push_back(Move{mover, a, Stance::Attack, i});
        // Defenses against the adversary's attacks on the mover's own
        // assertions; answering any earlier attack is skeletally fine.
        if (m.stance == Stance::Attack) {
            const Move& attacked = moves[static_cast<std::size_t>(m.ref)];
            if (attacked.player == mover)
                for (const Statement& s : defensesAgainst(attacked.statement, m.statement))
                    out.push_back(Move{mover, s, Stance::Defend, i});
        }
    }
    return out;
}

bool isWonByP(const Dialogue& d, const std::vector<Move>& legal) {
    return d.lastIndex() % 2 == 0 && legal.empty();
}

}  // namespace dialogic
