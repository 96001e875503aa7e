// Command-line surface: validity checks, tree inspection, interactive
// play and corpus experiments.
//
// Exit codes: 0 valid / expectations hold, 1 invalid / expectations
// fail, 2 unknown, 64 usage or parse error.

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dialogic/export.hpp"
#include "dialogic/harness.hpp"
#include "dialogic/play.hpp"

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

struct Options {
    std::string rules = "N";
    std::string rulesB = "CL";
    int maxDepth = 40;
    long maxNodes = 10'000'000;
    std::string output = "text";
    int depth = 6;
    int maxSize = -1;  // experiment-specific default
    std::string atoms = "p,q";
    std::uint64_t seed = 0;
    std::string humanSide = "O";
    std::string reportsDir = "./reports";
};

dialogic::SearchConfig searchConfig(const Options& opt) {
    dialogic::SearchConfig cfg;
    cfg.maxDepth = opt.maxDepth;
    cfg.maxNodes = opt.maxNodes;
    return cfg;
}

dialogic::FormulaPtr parseFormulaOrExit(const std::string& text) {
    try {
        return dialogic::parse(text);
    } catch (const dialogic::ParseError& e) {
        std::cerr << "parse error at offset " << e.offset() << ": " << e.what() << "\n";
        std::exit(kExitUsage);
    }
}

dialogic::RuleSet ruleSetOrExit(const std::string& spec) {
    try {
        return dialogic::RuleSet::named(spec);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        std::exit(kExitUsage);
    }
}

std::vector<dialogic::Atom> atomsOrExit(const std::string& list) {
    std::vector<dialogic::Atom> atoms;
    std::stringstream ss(list);
    std::string tok;
    try {
        while (std::getline(ss, tok, ',')) atoms.emplace_back(tok);
        if (atoms.empty()) throw std::invalid_argument("empty atom list");
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        std::exit(kExitUsage);
    }
    return atoms;
}

int exitCodeFor(dialogic::VerdictKind kind) {
    switch (kind) {
        case dialogic::VerdictKind::Valid: return kExitValid;
        case dialogic::VerdictKind::Invalid: return kExitInvalid;
        case dialogic::VerdictKind::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

int runCheck(const std::string& formulaText, const Options& opt) {
    const auto formula = parseFormulaOrExit(formulaText);
    const auto rules = ruleSetOrExit(opt.rules);
    const auto verdict = dialogic::searchStrategy(formula, rules, searchConfig(opt));

    if (opt.output == "json") {
        std::cout << dialogic::verdictToJson(formula, rules, verdict).dump(2) << "\n";
    } else if (opt.output == "dot") {
        std::cout << dialogic::strategyToDot(formula, rules, verdict);
    } else {
        std::cout << formula->text() << ": " << dialogic::verdictName(verdict.kind) << " under "
                  << rules.name() << " (" << verdict.stats.nodesExpanded << " nodes, depth "
                  << verdict.stats.maxDepthReached << ")\n";
    }
    return exitCodeFor(verdict.kind);
}

int runTree(const std::string& formulaText, const Options& opt) {
    const auto formula = parseFormulaOrExit(formulaText);
    const auto rules = ruleSetOrExit(opt.rules);
    if (opt.output == "dot")
        std::cout << dialogic::treeToDot(formula, rules, opt.depth);
    else if (opt.output == "json")
        std::cout << dialogic::treeToJson(formula, rules, opt.depth).dump(2) << "\n";
    else
        std::cout << dialogic::renderTree(formula, rules, opt.depth);
    return kExitValid;
}

int runPlay(const std::string& formulaText, const Options& opt) {
    using dialogic::Player;
    using dialogic::PlaySession;

    if (!isatty(STDIN_FILENO)) {
        std::cerr << "play requires an interactive terminal\n";
        return kExitUsage;
    }
    const auto formula = parseFormulaOrExit(formulaText);
    const auto rules = ruleSetOrExit(opt.rules);
    const Player human = opt.humanSide == "P" ? Player::P : Player::O;

    PlaySession session(formula, rules, human, searchConfig(opt));
    std::cout << "You play " << dialogic::playerChar(human) << "; the engine plays "
              << dialogic::playerChar(dialogic::other(human)) << ".\n";
    std::cout << "0. " << session.dialogue().moves().front().describe() << "\n";

    while (session.status() == PlaySession::Status::InProgress) {
        if (session.humanToMove()) {
            const auto& options = session.options();
            std::cout << "your moves:\n";
            for (std::size_t i = 0; i < options.size(); ++i)
                std::cout << "  " << (i + 1) << ") " << options[i].describe() << "\n";
            std::cout << "> " << std::flush;
            std::string line;
            if (!std::getline(std::cin, line)) return kExitValid;
            if (line == "quit" || line == "q") {
                std::cout << "session aborted\n";
                return kExitValid;
            }
            std::size_t choice = 0;
            try {
                choice = static_cast<std::size_t>(std::stoul(line));
            } catch (...) {
                std::cout << "enter a move number or 'quit'\n";
                continue;
            }
            if (choice < 1 || choice > options.size()) {
                std::cout << "enter a number between 1 and " << options.size() << "\n";
                continue;
            }
            session.playHuman(choice - 1);
            std::cout << session.dialogue().lastIndex() << ". "
                      << session.dialogue().lastMove().describe() << "\n";
        } else {
            const auto move = session.playEngine();
            std::cout << session.dialogue().lastIndex() << ". " << move.describe()
                      << (session.engineOnStrategy() ? "" : "  (search)") << "\n";
        }
    }

    switch (session.status()) {
        case PlaySession::Status::PWon:
            std::cout << "O has no move: P wins the dialogue.\n";
            break;
        case PlaySession::Status::EndedWithoutPWin:
            std::cout << "P has no move: the dialogue ends without a P win.\n";
            break;
        case PlaySession::Status::NoDialogue:
            std::cout << "the initial assertion is not admissible under " << rules.name()
                      << "; no dialogue takes place.\n";
            break;
        default:
            break;
    }
    return kExitValid;
}

std::string sanitizeForFilename(std::string name) {
    for (char& c : name) {
        if (c == '+') c = '_';
        if (c == '\'') c = 'p';
    }
    return name;
}

void writeReport(const Options& opt, const std::string& filename, const dialogic::Json& report) {
    namespace fs = std::filesystem;
    fs::create_directories(opt.reportsDir);
    const fs::path path = fs::path(opt.reportsDir) / filename;
    std::ofstream out(path);
    out << report.dump(2) << "\n";
    std::cout << "report written to " << path.string() << "\n";
}

int runExperiment(const std::string& name, const Options& opt) {
    using namespace dialogic;
    const auto cfg = searchConfig(opt);
    const auto atoms = atomsOrExit(opt.atoms);

    if (name == "closure") {
        const auto rules = ruleSetOrExit(opt.rules);
        const int maxSize = opt.maxSize > 0 ? opt.maxSize : 6;
        const auto report = closureTest(rules, maxSize, atoms, cfg);
        std::cout << report.summary() << "\n";
        writeReport(opt, "closure-" + sanitizeForFilename(rules.name()) + ".json",
                    report.toJson());
        // CLprime is the negative control: its excluded-middle instance
        // must show up as a modus ponens counterexample.
        if (rules == RuleSet::presetCLprime()) {
            const bool found = std::any_of(
                report.counterexamples.begin(), report.counterexamples.end(),
                [](const MpCounterexample& ce) {
                    return ce.premise == "p | ~p" && ce.conclusion == "p";
                });
            return found ? kExitValid : kExitInvalid;
        }
        return report.closed() ? kExitValid : kExitInvalid;
    }
    if (name == "compare") {
        const auto rulesA = ruleSetOrExit(opt.rules);
        const auto rulesB = ruleSetOrExit(opt.rulesB);
        const int maxSize = opt.maxSize > 0 ? opt.maxSize : 6;
        const auto report = compareRuleSets(rulesA, rulesB, maxSize, atoms, cfg);
        std::cout << report.summary() << "\n";
        writeReport(opt,
                    "compare-" + sanitizeForFilename(rulesA.name()) + "-vs-" +
                        sanitizeForFilename(rulesB.name()) + ".json",
                    report.toJson());
        return report.unknowns.empty() ? kExitValid : kExitUnknown;
    }
    if (name == "audit") {
        const int maxSize = opt.maxSize > 0 ? opt.maxSize : 5;
        const auto report = characterizationAudit(maxSize, atoms, cfg, opt.seed);
        std::cout << report.summary() << "\n";
        writeReport(opt, "audit.json", report.toJson());
        return report.violations.empty() ? kExitValid : kExitInvalid;
    }
    if (name == "paper-tables") {
        const auto report = paperTables(cfg);
        std::cout << report.summary() << "\n";
        writeReport(opt, "paper-tables.json", report.toJson());
        return report.allOk ? kExitValid : kExitInvalid;
    }
    std::cerr << "unknown experiment '" << name
              << "' (expected closure, compare, audit or paper-tables)\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dialogue game engine for propositional dialogical logic"};
    app.require_subcommand(1);

    Options opt;
    std::string formulaText;
    std::string experimentName;

    auto addSearchFlags = [&opt](CLI::App* cmd) {
        cmd->add_option("--rules", opt.rules, "rule set preset or explicit list (default N)");
        cmd->add_option("--max-depth", opt.maxDepth, "highest admissible move index");
        cmd->add_option("--max-nodes", opt.maxNodes, "search expansion budget");
    };

    CLI::App* check = app.add_subcommand("check", "decide validity of a formula");
    check->add_option("formula", formulaText, "formula to check")->required();
    addSearchFlags(check);
    check->add_option("--output", opt.output, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));

    CLI::App* tree = app.add_subcommand("tree", "render the truncated dialogue tree");
    tree->add_option("formula", formulaText, "initial formula")->required();
    addSearchFlags(tree);
    tree->add_option("--depth", opt.depth, "highest move index to render (default 6)");
    tree->add_option("--output", opt.output, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));

    CLI::App* play = app.add_subcommand("play", "play one side interactively");
    play->add_option("formula", formulaText, "initial formula")->required();
    addSearchFlags(play);
    play->add_option("--as", opt.humanSide, "side played by the human (P or O, default O)")
        ->check(CLI::IsMember({"P", "O"}));

    CLI::App* experiment =
        app.add_subcommand("experiment", "run a corpus experiment and write a report");
    experiment
        ->add_option("name", experimentName, "closure, compare, audit or paper-tables")
        ->required();
    addSearchFlags(experiment);
    experiment->add_option("--rules-b", opt.rulesB, "second rule set for compare (default CL)");
    experiment->add_option("--max-size", opt.maxSize, "corpus size bound");
    experiment->add_option("--atoms", opt.atoms, "comma-separated atom list (default p,q)");
    experiment->add_option("--seed", opt.seed, "seed for sampled audits (default 0)");
    experiment->add_option("--reports", opt.reportsDir,
                           "report output directory (default ./reports)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (check->parsed()) return runCheck(formulaText, opt);
        if (tree->parsed()) return runTree(formulaText, opt);
        if (play->parsed()) return runPlay(formulaText, opt);
        if (experiment->parsed()) return runExperiment(experimentName, opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
