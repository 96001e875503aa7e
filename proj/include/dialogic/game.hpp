#pragma once

// Dialogue game kernel: statements, moves, dialogues, the particle rules
// and the skeletal (pre-structural) legal-move generator.
//
// Particle rules:
//
//   assertion   attack    response
//   ---------   ------    --------
//   A & B       &L        A
//               &R        B
//   A | B       ?         A or B
//   A -> B      A         B
//   ~A          A         (none)
//
// A dialogue alternates P (even indices) and O (odd indices), starting
// with P's assertion of the initial formula.  Every later move either
// attacks an earlier non-atomic assertion of the adversary or defends
// one of the mover's own assertions against an adversary attack.

#include <string>
#include <vector>

#include "dialogic/formula.hpp"

namespace dialogic {

enum class Player : std::uint8_t { P, O };

inline Player other(Player p) { return p == Player::P ? Player::O : Player::P; }
inline char playerChar(Player p) { return p == Player::P ? 'P' : 'O'; }

// Player on move at the given dialogue index: P even, O odd.
inline Player playerAt(int index) { return index % 2 == 0 ? Player::P : Player::O; }

// A statement is either the assertion of a formula or one of the three
// symbolic attacks ?, &L, &R.  Symbolic attacks are not formulas: they
// can never be attacked and never count as assertions.
class Statement {
public:
    enum class Sym : std::uint8_t { Question, AndLeft, AndRight };

    Statement(FormulaPtr f) : formula_(std::move(f)) {}  // NOLINT: implicit by design
    Statement(Sym s) : sym_(s) {}                        // NOLINT

    static Statement question() { return Statement(Sym::Question); }
    static Statement andLeft() { return Statement(Sym::AndLeft); }
    static Statement andRight() { return Statement(Sym::AndRight); }

    bool isFormula() const noexcept { return formula_ != nullptr; }
    bool isSymbolic() const noexcept { return formula_ == nullptr; }
    bool isAtomicFormula() const { return isFormula() && formula_->isAtomic(); }

    const FormulaPtr& formula() const;
    Sym sym() const;

    // Canonical text: the formula rendering, or "?", "&L", "&R".
    std::string text() const;

    bool operator==(const Statement& o) const noexcept;
    bool operator!=(const Statement& o) const noexcept { return !(*this == o); }

private:
    FormulaPtr formula_;  // null for symbolic attacks
    Sym sym_ = Sym::Question;
};

enum class Stance : std::uint8_t { Initial, Attack, Defend };

struct Move {
    Player player;
    Statement statement;
    Stance stance;
    int ref = -1;  // attacked/defended move index; -1 for the initial move

    bool operator==(const Move& o) const noexcept {
        return player == o.player && stance == o.stance && ref == o.ref &&
               statement == o.statement;
    }

    std::string describe() const;
};

// Attacks available against a statement per the particle rules.  Atoms
// and symbolic attacks admit none.
std::vector<Statement> attacksAgainst(const Statement& s);

// Defenses against `attack` on `attacked` per the particle rules; empty
// for the attack on a negation.  Throws std::invalid_argument when the
// attack is not a particle-rule attack on `attacked`.
std::vector<Statement> defensesAgainst(const Statement& attacked, const Statement& attack);

// A dialogue: the move sequence, validated against the skeletal
// conditions on every push.  Value semantics; mutate only from a single
// thread.
class Dialogue {
public:
    explicit Dialogue(FormulaPtr initialFormula);

    const FormulaPtr& initialFormula() const noexcept { return initial_; }
    const std::vector<Move>& moves() const noexcept { return moves_; }
    std::size_t length() const noexcept { return moves_.size(); }
    const Move& lastMove() const { return moves_.back(); }
    int lastIndex() const { return static_cast<int>(moves_.size()) - 1; }
    Player turn() const { return playerAt(static_cast<int>(moves_.size())); }

    // Appends after validation; throws std::invalid_argument on any
    // skeletal violation.
    void push(const Move& m);
    void pop();

    Dialogue extended(const Move& m) const;

    // True when some move attacks index i.
    bool isAttacked(int i) const;
    // True when some move defends against the attack at index i.
    bool isAnswered(int i) const;

    std::string render() const;

private:
    void validate(const Move& m) const;

    FormulaPtr initial_;
    std::vector<Move> moves_;
};

// All moves that can skeletally extend `d`: correct parity, attacks on
// prior non-atomic adversary assertions, defenses against prior
// adversary attacks with particle-rule content.  Deferred and repeated
// defenses are included; structural rules filter downstream.
std::vector<Move> skeletalMoves(const Dialogue& d);

// P wins when the dialogue ends on a P move and the adversary has no
// legal continuation.  `legal` must be the structurally filtered moves
// at `d`.
bool isWonByP(const Dialogue& d, const std::vector<Move>& legal);

}  // namespace dialogic
