#include "dialogic/play.hpp"

#include <stdexcept>

namespace dialogic {

PlaySession::PlaySession(FormulaPtr f, RuleSet rs, Player humanSide, SearchConfig cfg)
    : formula_(std::move(f)),
      rules_(std::move(rs)),
      human_(humanSide),
      cfg_(cfg),
      dialogue_(formula_) {
    if (!rootAdmissible(formula_, rules_)) {
        status_ = Status::NoDialogue;
        return;
    }
    if (human_ == Player::O) {
        const Verdict v = searchStrategy(formula_, rules_, cfg_);
        if (v.kind == VerdictKind::Valid) {
            strategy_ = v.strategy;
            cursor_ = &*strategy_;
        }
    }
    refresh();
}

bool PlaySession::humanToMove() const {
    return status_ == Status::InProgress && dialogue_.turn() == human_;
}

void PlaySession::refresh() {
    options_ = legalMoves(dialogue_, rules_);
    if (!options_.empty()) {
        status_ = Status::InProgress;
        return;
    }
    status_ = dialogue_.lastIndex() % 2 == 0 ? Status::PWon : Status::EndedWithoutPWin;
}

void PlaySession::advanceCursor(const Move& m) {
    if (!cursor_) return;
    for (const StrategyNode& child : cursor_->children) {
        if (child.move == m) {
            cursor_ = &child;
            return;
        }
    }
    cursor_ = nullptr;  // off the strategy; fall back to search
}

void PlaySession::playHuman(std::size_t index) {
    if (!humanToMove()) throw std::logic_error("not the human's turn");
    if (index >= options_.size()) throw std::out_of_range("no such move");
    const Move m = options_[index];
    dialogue_.push(m);
    advanceCursor(m);
    refresh();
}

Move PlaySession::chooseEngineMove() {
    // On-strategy as P: the strategy holds exactly one reply to the
    // human's last move.
    if (cursor_ && !cursor_->children.empty()) return cursor_->children.front().move;

    const Player engine = other(human_);
    std::optional<Move> fallback;
    for (const Move& m : options_) {
        Dialogue next = dialogue_.extended(m);
        const PositionValue value = evaluatePosition(next, rules_, cfg_);
        if (engine == Player::P && value.pWins && value.solid) return m;
        if (engine == Player::O && !value.pWins && value.solid) return m;
        if (!fallback) fallback = m;
    }
    return *fallback;  // best effort; options_ is nonempty here
}

Move PlaySession::playEngine() {
    if (status_ != Status::InProgress) throw std::logic_error("game is over");
    if (dialogue_.turn() == human_) throw std::logic_error("human to move");
    const Move m = chooseEngineMove();
    dialogue_.push(m);
    advanceCursor(m);
    refresh();
    return m;
}

}  // namespace dialogic
