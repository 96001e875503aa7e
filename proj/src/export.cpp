#include "dialogic/export.hpp"

#include <sstream>

namespace dialogic {

namespace {

const char* stanceName(Stance s) {
    switch (s) {
        case Stance::Initial: return "initial";
        case Stance::Attack: return "attack";
        case Stance::Defend: return "defend";
    }
    return "initial";
}

std::string dotEscape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

int emitStrategyDot(std::ostringstream& out, const StrategyNode& node, int& counter) {
    const int id = counter++;
    out << "  n" << id << " [label=\"" << dotEscape(node.move.statement.text());
    switch (node.move.stance) {
        case Stance::Initial: break;
        case Stance::Attack: out << "\\n[A," << node.move.ref << "]"; break;
        case Stance::Defend: out << "\\n[D," << node.move.ref << "]"; break;
    }
    out << "\" shape=" << (node.move.player == Player::P ? "box" : "oval") << "];\n";
    for (const StrategyNode& child : node.children) {
        const int childId = emitStrategyDot(out, child, counter);
        out << "  n" << id << " -> n" << childId << ";\n";
    }
    return id;
}

}  // namespace

nlohmann::json strategyNodeToJson(const StrategyNode& node) {
    nlohmann::json children = nlohmann::json::array();
    for (const StrategyNode& child : node.children) children.push_back(strategyNodeToJson(child));
    nlohmann::json ref;
    if (node.move.stance != Stance::Initial) ref = node.move.ref;
    return nlohmann::json{{"player", node.move.player == Player::P ? "P" : "O"},
                          {"statement", node.move.statement.text()},
                          {"stance", stanceName(node.move.stance)},
                          {"ref", ref},
                          {"children", children}};
}

nlohmann::json verdictToJson(const FormulaPtr& f, const RuleSet& rs, const Verdict& v) {
    nlohmann::json strategy;
    if (v.strategy) strategy = strategyNodeToJson(*v.strategy);
    return nlohmann::json{{"formula", f->text()},
                          {"rules", rs.name()},
                          {"verdict", verdictName(v.kind)},
                          {"strategy", strategy},
                          {"stats",
                           {{"nodesExpanded", v.stats.nodesExpanded},
                            {"maxDepthReached", v.stats.maxDepthReached}}}};
}

std::string strategyToDot(const FormulaPtr& f, const RuleSet& rs, const Verdict& v) {
    std::ostringstream out;
    out << "digraph strategy {\n";
    out << "  label=\"" << dotEscape(f->text()) << " under " << dotEscape(rs.name()) << ": "
        << verdictName(v.kind) << "\";\n";
    if (v.strategy) {
        int counter = 0;
        emitStrategyDot(out, *v.strategy, counter);
    }
    out << "}\n";
    return out.str();
}

// ── Dialogue tree rendering ─────────────────────────────────────────────────

namespace {

void renderTreeNode(std::ostringstream& out, Dialogue& d, const RuleSet& rs, int depth,
                    const std::string& prefix) {
    const auto legal = legalMoves(d, rs);
    if (d.lastIndex() >= depth) {
        if (!legal.empty()) out << prefix << "...\n";
        return;
    }
    for (std::size_t i = 0; i < legal.size(); ++i) {
        const bool last = i + 1 == legal.size();
        out << prefix << (last ? "`- " : "|- ") << (d.lastIndex() + 1) << ". "
            << legal[i].describe() << "\n";
        d.push(legal[i]);
        renderTreeNode(out, d, rs, depth, prefix + (last ? "   " : "|  "));
        d.pop();
    }
}

void treeNodeDot(std::ostringstream& out, Dialogue& d, const RuleSet& rs, int depth, int parentId,
                 int& counter) {
    const auto legal = legalMoves(d, rs);
    if (d.lastIndex() >= depth) {
        if (!legal.empty()) {
            const int id = counter++;
            out << "  n" << id << " [label=\"...\" shape=plaintext];\n";
            out << "  n" << parentId << " -> n" << id << ";\n";
        }
        return;
    }
    for (const Move& m : legal) {
        const int id = counter++;
        out << "  n" << id << " [label=\"" << dotEscape(m.statement.text()) << "\\n["
            << (m.stance == Stance::Attack ? 'A' : 'D') << "," << m.ref << "]\" shape="
            << (m.player == Player::P ? "box" : "oval") << "];\n";
        out << "  n" << parentId << " -> n" << id << ";\n";
        d.push(m);
        treeNodeDot(out, d, rs, depth, id, counter);
        d.pop();
    }
}

nlohmann::json treeNodeJson(Dialogue& d, const RuleSet& rs, int depth) {
    nlohmann::json children = nlohmann::json::array();
    const auto legal = legalMoves(d, rs);
    bool truncated = false;
    if (d.lastIndex() >= depth) {
        truncated = !legal.empty();
    } else {
        for (const Move& m : legal) {
            d.push(m);
            nlohmann::json child = treeNodeJson(d, rs, depth);
            d.pop();
            child["player"] = m.player == Player::P ? "P" : "O";
            child["statement"] = m.statement.text();
            child["stance"] = stanceName(m.stance);
            child["ref"] = m.ref;
            children.push_back(std::move(child));
        }
    }
    return nlohmann::json{{"children", children}, {"truncated", truncated}};
}

}  // namespace

std::string renderTree(const FormulaPtr& f, const RuleSet& rs, int depth) {
    std::ostringstream out;
    out << "0. P: " << f->text() << " (initial)\n";
    if (!rootAdmissible(f, rs)) {
        out << "   (initial assertion not admissible under " << rs.name()
            << "; the dialogue tree is empty)\n";
        return out.str();
    }
    Dialogue d(f);
    renderTreeNode(out, d, rs, depth, "");
    return out.str();
}

std::string treeToDot(const FormulaPtr& f, const RuleSet& rs, int depth) {
    std::ostringstream out;
    out << "digraph tree {\n";
    out << "  n0 [label=\"" << dotEscape(f->text()) << "\" shape=box];\n";
    if (rootAdmissible(f, rs)) {
        Dialogue d(f);
        int counter = 1;
        treeNodeDot(out, d, rs, depth, 0, counter);
    }
    out << "}\n";
    return out.str();
}

nlohmann::json treeToJson(const FormulaPtr& f, const RuleSet& rs, int depth) {
    nlohmann::json root;
    if (rootAdmissible(f, rs)) {
        Dialogue d(f);
        root = treeNodeJson(d, rs, depth);
    } else {
        root = nlohmann::json{{"children", nlohmann::json::array()}, {"truncated", false},
                              {"inadmissible", true}};
    }
    root["player"] = "P";
    root["statement"] = f->text();
    root["stance"] = "initial";
    root["ref"] = nullptr;
    return root;
}

}  // namespace dialogic
