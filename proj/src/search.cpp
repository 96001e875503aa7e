#include "dialogic/search.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace dialogic {

const char* verdictName(VerdictKind v) {
    switch (v) {
        case VerdictKind::Valid: return "valid";
        case VerdictKind::Invalid: return "invalid";
        case VerdictKind::Unknown: return "unknown";
    }
    return "unknown";
}

// ── AbstractPosition ────────────────────────────────────────────────────────

namespace {

// Open-attack stacks under D11/D12 can grow without bound when one side
// keeps re-posing the same attack (the repetitions stay open because
// they are answerable in principle).  Identically valued entries are
// interchangeable and each answer grants the same assertion right, so
// multiplicities beyond three cannot matter; the stack is summarized as
// its distinct values in first-occurrence order with counts capped at
// three, plus the identity of the top (the only answerable entry under
// D11).  Capping makes repetitive flailing hit an equal summary.
void summarizeStack(const std::vector<std::string>& open, bool hasD11,
                    std::ostringstream& key) {
    if (hasD11 && !open.empty()) key << "T:" << open.back() << '|';
    std::vector<std::pair<std::string, int>> runs;
    for (const auto& entry : open) {
        bool seen = false;
        for (auto& [value, count] : runs)
            if (value == entry) {
                count = std::min(count + 1, 3);
                seen = true;
                break;
            }
        if (!seen) runs.emplace_back(entry, 1);
    }
    for (const auto& [value, count] : runs) key << value << '*' << count << ';';
}

}  // namespace

AbstractPosition AbstractPosition::of(const Dialogue& d, const RuleSet& rs) {
    const bool hasE = rs.has(RuleName::E);
    const bool stackMode = rs.has(RuleName::D11) || rs.has(RuleName::D12);
    const bool hasD13 = rs.has(RuleName::D13);
    const auto& moves = d.moves();
    const int n = static_cast<int>(moves.size());

    std::vector<bool> attacked(moves.size(), false), answered(moves.size(), false);
    for (const Move& m : moves) {
        if (m.stance == Stance::Attack) attacked[static_cast<std::size_t>(m.ref)] = true;
        if (m.stance == Stance::Defend) answered[static_cast<std::size_t>(m.ref)] = true;
    }

    AbstractPosition a;
    a.turn = d.turn();

    std::set<std::string> oAsserted;
    std::vector<std::string> oAttacks, pAttacks;
    std::set<std::string> oAttackSet, pAttackSet;

    for (int i = 0; i < n; ++i) {
        const Move& m = moves[static_cast<std::size_t>(i)];
        if (m.statement.isFormula()) {
            if (m.player == Player::O) {
                oAsserted.insert(m.statement.text());
            } else if (!m.statement.isAtomicFormula() && !hasE) {
                // With D13 each unattacked occurrence is one potential O
                // attack; without it occurrences are interchangeable.
                if (hasD13) {
                    if (!attacked[static_cast<std::size_t>(i)]) a.freshP[m.statement.text()] += 1;
                } else {
                    a.freshP[m.statement.text()] = 1;
                }
            }
        }
        if (m.stance == Stance::Attack) {
            const Move& target = moves[static_cast<std::size_t>(m.ref)];
            const std::string entry = m.statement.text() + ">" + target.statement.text();
            if (m.player == Player::O) {
                if (stackMode) {
                    if (!answered[static_cast<std::size_t>(i)]) {
                        const bool answerable =
                            !defensesAgainst(target.statement, m.statement).empty();
                        // Under D11 a permanently unanswerable entry
                        // freezes everything below it for good.
                        if (!answerable && rs.has(RuleName::D11)) oAttacks.clear();
                        oAttacks.push_back((answerable ? "" : "!") + entry);
                    }
                } else {
                    oAttackSet.insert(entry);
                }
            } else if (!hasE) {  // O reacts to the last move only under E
                if (stackMode) {
                    if (!answered[static_cast<std::size_t>(i)]) {
                        const bool answerable =
                            !defensesAgainst(target.statement, m.statement).empty();
                        if (!answerable && rs.has(RuleName::D11)) pAttacks.clear();
                        pAttacks.push_back((answerable ? "" : "!") + entry);
                    }
                } else {
                    pAttackSet.insert(entry);
                }
            }
        }
    }

    std::ostringstream key;
    key << (a.turn == Player::P ? "P" : "O") << '#';
    for (const auto& s : oAsserted) key << s << ';';
    key << '#';
    if (stackMode)
        summarizeStack(oAttacks, rs.has(RuleName::D11), key);
    else
        for (const auto& s : oAttackSet) key << s << ';';
    key << '#';
    if (stackMode)
        summarizeStack(pAttacks, rs.has(RuleName::D11), key);
    else
        for (const auto& s : pAttackSet) key << s << ';';
    key << '#';
    if (hasE) {
        const Move& last = d.lastMove();
        key << last.statement.text() << '|';
        switch (last.stance) {
            case Stance::Initial: key << 'I'; break;
            case Stance::Defend: key << 'D'; break;
            case Stance::Attack:
                key << "A|" << moves[static_cast<std::size_t>(last.ref)].statement.text();
                break;
        }
    }
    a.baseKey = key.str();
    return a;
}

std::string AbstractPosition::key() const {
    std::ostringstream out;
    out << baseKey << '#';
    for (const auto& [text, count] : freshP) out << text << '*' << count << ';';
    return out.str();
}

bool AbstractPosition::dominates(const AbstractPosition& earlier) const {
    if (turn != earlier.turn || baseKey != earlier.baseKey) return false;
    for (const auto& [text, count] : earlier.freshP) {
        auto it = freshP.find(text);
        if (it == freshP.end() || it->second < count) return false;
    }
    return true;
}

// ── Corollary-2 pruning ─────────────────────────────────────────────────────

std::vector<Move> pruneCorollary2(const Dialogue& d, const std::vector<Move>& candidates,
                                  const RuleSet& rs) {
    std::vector<Move> kept;
    Dialogue work = d;
    for (const Move& c : candidates) {
        work.push(c);
        const auto replies = legalMoves(work, rs);
        work.pop();
        const bool oCanDefend = std::any_of(replies.begin(), replies.end(), [](const Move& r) {
            return r.stance == Stance::Defend;
        });
        if (!oCanDefend) kept.push_back(c);
    }
    return kept;
}

// ── Strategy search ─────────────────────────────────────────────────────────

namespace {

struct BudgetExceeded {};

struct EvalResult {
    bool win = false;
    bool solid = true;                   // loss backed by closure, not by a budget cut
    std::vector<StrategyNode> children;  // continuation below the current last move
};

class Searcher {
public:
    Searcher(const RuleSet& rs, const SearchConfig& cfg, bool useCor2)
        : rs_(rs), cfg_(cfg), useCor2_(useCor2) {}

    SearchStats& stats() { return stats_; }

    EvalResult eval(Dialogue& d, std::vector<AbstractPosition>& path) {
        if (++stats_.nodesExpanded > cfg_.maxNodes) throw BudgetExceeded{};
        stats_.maxDepthReached = std::max(stats_.maxDepthReached, d.lastIndex());

        const Player mover = d.turn();
        auto legal = legalMoves(d, rs_);

        if (legal.empty())
            return EvalResult{mover == Player::O, true, {}};

        if (cfg_.cyclePruning) {
            AbstractPosition here = AbstractPosition::of(d, rs_);
            for (const AbstractPosition& seen : path)
                if (here.dominates(seen)) return EvalResult{false, true, {}};
            path.push_back(std::move(here));
        }
        EvalResult result =
            mover == Player::P ? evalP(d, path, legal) : evalO(d, path, legal);
        if (cfg_.cyclePruning) path.pop_back();
        return result;
    }

private:
    EvalResult evalP(Dialogue& d, std::vector<AbstractPosition>& path, std::vector<Move>& legal) {
        if (d.lastIndex() >= cfg_.maxDepth) return EvalResult{false, false, {}};

        if (useCor2_) {
            auto kept = pruneCorollary2(d, legal, rs_);
            if (kept.empty()) return EvalResult{false, true, {}};
            legal = std::move(kept);
        }
        // Defenses first under N: most attacks are dead ends there.
        // Ordering only affects speed and which winning move is found.
        if (rs_.isN())
            std::stable_partition(legal.begin(), legal.end(),
                                  [](const Move& m) { return m.stance == Stance::Defend; });

        bool allSolid = true;
        std::set<std::string> tried;  // skip candidates with identical effect
        for (const Move& c : legal) {
            if (!tried.insert(effectKey(d, c)).second) continue;
            d.push(c);
            EvalResult r = eval(d, path);
            d.pop();
            if (r.win)
                return EvalResult{true, true, {StrategyNode{c, std::move(r.children)}}};
            allSolid = allSolid && r.solid;
        }
        return EvalResult{false, allSolid, {}};
    }

    EvalResult evalO(Dialogue& d, std::vector<AbstractPosition>& path, std::vector<Move>& legal) {
        if (d.lastIndex() >= cfg_.maxDepth) return EvalResult{false, false, {}};

        std::vector<StrategyNode> children;
        children.reserve(legal.size());
        bool sawTaintedLoss = false;
        for (const Move& c : legal) {
            d.push(c);
            EvalResult r = eval(d, path);
            d.pop();
            if (!r.win) {
                if (r.solid) return EvalResult{false, true, {}};
                sawTaintedLoss = true;  // keep looking for a solid refutation
            } else {
                children.push_back(StrategyNode{c, std::move(r.children)});
            }
        }
        if (sawTaintedLoss) return EvalResult{false, false, {}};
        return EvalResult{true, true, std::move(children)};
    }

    // Key identifying a candidate's abstract effect: candidates that
    // differ only in which identical occurrence they reference produce
    // isomorphic subtrees, so P needs to try just one of them.
    std::string effectKey(const Dialogue& d, const Move& c) const {
        const Move& target = d.moves()[static_cast<std::size_t>(c.ref)];
        std::string key = c.stance == Stance::Attack ? "A|" : "D|";
        key += c.statement.text();
        key += '|';
        key += target.statement.text();
        if (c.stance == Stance::Defend)
            key += '|' + d.moves()[static_cast<std::size_t>(target.ref)].statement.text();
        return key;
    }

    const RuleSet& rs_;
    const SearchConfig& cfg_;
    bool useCor2_;
    SearchStats stats_;
};

}  // namespace

Verdict searchStrategy(const FormulaPtr& f, const RuleSet& rs, const SearchConfig& cfg) {
    if (cfg.maxDepth <= 0 || cfg.maxNodes <= 0)
        throw std::invalid_argument("search budgets must be positive");

    const auto start = std::chrono::steady_clock::now();
    Verdict verdict;

    // Corollary 2 holds for D10+D13 only; elsewhere the flag is ignored.
    const bool useCor2 = cfg.corollary2Pruning.value_or(rs.isN()) && rs.isN();

    if (!rootAdmissible(f, rs)) {
        // No admissible dialogue commences with a bare atom under D10:
        // the dialogue tree is empty, so no strategy exists.
        verdict.kind = VerdictKind::Invalid;
        verdict.stats.elapsedSeconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return verdict;
    }

    Searcher searcher(rs, cfg, useCor2);
    Dialogue d(f);
    std::vector<AbstractPosition> path;
    try {
        EvalResult r = searcher.eval(d, path);
        if (r.win) {
            verdict.kind = VerdictKind::Valid;
            verdict.strategy =
                StrategyNode{Move{Player::P, Statement(f), Stance::Initial, -1},
                             std::move(r.children)};
        } else {
            verdict.kind = r.solid ? VerdictKind::Invalid : VerdictKind::Unknown;
            verdict.budgetExceeded = !r.solid;
        }
    } catch (const BudgetExceeded&) {
        verdict.kind = VerdictKind::Unknown;
        verdict.budgetExceeded = true;
    }
    verdict.stats = searcher.stats();
    verdict.stats.elapsedSeconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return verdict;
}

// ── Strategy verification ───────────────────────────────────────────────────

namespace {

bool verifyNode(const StrategyNode& node, Dialogue& d, const RuleSet& rs) {
    const auto legal = legalMoves(d, rs);
    const int depth = d.lastIndex();

    if (depth % 2 == 0) {
        // P has just moved: the node must carry every O option exactly.
        if (node.children.size() != legal.size()) return false;
        std::vector<bool> used(legal.size(), false);
        for (const StrategyNode& child : node.children) {
            bool matched = false;
            for (std::size_t i = 0; i < legal.size(); ++i) {
                if (!used[i] && legal[i] == child.move) {
                    used[i] = true;
                    matched = true;
                    break;
                }
            }
            if (!matched) return false;
        }
        // A leaf here is a dialogue won by P (no O continuation).
    } else {
        // O has just moved: exactly one P reply, and it must be legal.
        if (node.children.size() != 1) return false;
        bool found = false;
        for (const Move& m : legal)
            if (m == node.children[0].move) { found = true; break; }
        if (!found) return false;
    }

    for (const StrategyNode& child : node.children) {
        d.push(child.move);
        const bool ok = verifyNode(child, d, rs);
        d.pop();
        if (!ok) return false;
    }
    return true;
}

}  // namespace

bool verifyStrategy(const StrategyNode& s, const FormulaPtr& f, const RuleSet& rs) {
    if (!rootAdmissible(f, rs)) return false;
    const Move expectedRoot{Player::P, Statement(f), Stance::Initial, -1};
    if (!(s.move == expectedRoot)) return false;
    Dialogue d(f);
    return verifyNode(s, d, rs);
}

bool containsODefense(const StrategyNode& s) {
    if (s.move.player == Player::O && s.move.stance == Stance::Defend) return true;
    for (const StrategyNode& c : s.children)
        if (containsODefense(c)) return true;
    return false;
}

PositionValue evaluatePosition(const Dialogue& d, const RuleSet& rs, const SearchConfig& cfg) {
    const bool useCor2 = cfg.corollary2Pruning.value_or(rs.isN()) && rs.isN();
    Searcher searcher(rs, cfg, useCor2);
    Dialogue work = d;
    std::vector<AbstractPosition> path;
    try {
        const EvalResult r = searcher.eval(work, path);
        return PositionValue{r.win, r.win || r.solid};
    } catch (const BudgetExceeded&) {
        return PositionValue{false, false};
    }
}

// ── Naive bounded minimax ───────────────────────────────────────────────────

namespace {

bool naiveWin(Dialogue& d, const RuleSet& rs, int depth) {
    const auto legal = legalMoves(d, rs);
    if (legal.empty()) return d.lastIndex() % 2 == 0;
    if (d.lastIndex() >= depth) return false;

    const bool pToMove = d.turn() == Player::P;
    for (const Move& m : legal) {
        d.push(m);
        const bool childWin = naiveWin(d, rs, depth);
        d.pop();
        if (pToMove && childWin) return true;
        if (!pToMove && !childWin) return false;
    }
    return !pToMove;
}

}  // namespace

NaiveOutcome naiveSearch(const FormulaPtr& f, const RuleSet& rs, int depth) {
    if (!rootAdmissible(f, rs)) return NaiveOutcome::NoWinWithin;
    Dialogue d(f);
    return naiveWin(d, rs, depth) ? NaiveOutcome::WinWithin : NaiveOutcome::NoWinWithin;
}

}  // namespace dialogic
