#pragma once

// Turn-based play of a single dialogue: a human side and an engine side.
// Playing as P the engine follows a precomputed winning strategy when
// one exists and falls back to per-move search otherwise; as O it picks
// moves that deny P a forced win when it can.  The session is plain
// state so front ends (terminal loop, tests) drive it step by step.

#include <optional>
#include <string>
#include <vector>

#include "dialogic/game.hpp"
#include "dialogic/rules.hpp"
#include "dialogic/search.hpp"

namespace dialogic {

class PlaySession {
public:
    enum class Status : std::uint8_t {
        InProgress,
        PWon,              // dialogue ended on a P move with O stuck
        EndedWithoutPWin,  // P stuck, dialogue ends on an O move
        NoDialogue,        // the initial assertion itself is inadmissible
    };

    PlaySession(FormulaPtr f, RuleSet rs, Player humanSide, SearchConfig cfg = {});

    // cursor_ points into strategy_; copying would leave it astray.
    PlaySession(const PlaySession&) = delete;
    PlaySession& operator=(const PlaySession&) = delete;

    Status status() const noexcept { return status_; }
    const Dialogue& dialogue() const noexcept { return dialogue_; }
    Player humanSide() const noexcept { return human_; }
    bool humanToMove() const;

    // Legal moves at the current position (empty once the game is over).
    const std::vector<Move>& options() const noexcept { return options_; }

    // Plays options()[index] for the human; throws std::out_of_range on
    // a bad index and std::logic_error when it is not the human's turn.
    void playHuman(std::size_t index);

    // Lets the engine choose and play; returns the move.
    Move playEngine();

    // True while the engine (as P) is still inside its winning strategy.
    bool engineOnStrategy() const noexcept { return cursor_ != nullptr; }

private:
    void refresh();
    void advanceCursor(const Move& m);
    Move chooseEngineMove();

    FormulaPtr formula_;
    RuleSet rules_;
    Player human_;
    SearchConfig cfg_;
    Dialogue dialogue_;
    std::vector<Move> options_;
    Status status_ = Status::InProgress;

    std::optional<StrategyNode> strategy_;   // engine-as-P winning strategy
    const StrategyNode* cursor_ = nullptr;   // node of the last played move
};

}  // namespace dialogic
