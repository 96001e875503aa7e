// Benchmark: serial vs OpenMP-parallel corpus evaluation.  Times both
// paths over the same enumerated corpus, checks that they produce
// identical verdicts, and reports the speedup.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "dialogic/corpus.hpp"
#include "dialogic/harness.hpp"

namespace {

double seconds(const std::function<void()>& work) {
    const auto start = std::chrono::steady_clock::now();
    work();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel corpus evaluation benchmark"};
    int maxSize = 5;
    std::string atomsList = "p,q";
    std::vector<std::string> ruleSpecs = {"N", "CL", "D"};
    int repeat = 3;
    app.add_option("--max-size", maxSize, "corpus size bound (default 5)");
    app.add_option("--atoms", atomsList, "comma-separated atoms (default p,q)");
    app.add_option("--rules", ruleSpecs, "rule sets to benchmark (default N CL D)");
    app.add_option("--repeat", repeat, "timed repetitions, best taken (default 3)");
    CLI11_PARSE(app, argc, argv);

    std::vector<dialogic::Atom> atoms;
    std::stringstream ss(atomsList);
    std::string tok;
    while (std::getline(ss, tok, ',')) atoms.emplace_back(tok);

    const auto corpus = dialogic::enumerateFormulas(maxSize, atoms);
    std::cout << "corpus: " << corpus.size() << " formulas (maxSize " << maxSize << " over "
              << atomsList << ")\n";
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP; parallel path == serial)\n";
#endif

    bool allMatch = true;
    for (const std::string& spec : ruleSpecs) {
        const auto rules = dialogic::RuleSet::named(spec);
        const dialogic::SearchConfig cfg;

        std::vector<dialogic::Verdict> serial, parallel;
        double serialBest = 1e30, parallelBest = 1e30;
        for (int r = 0; r < repeat; ++r) {
            serialBest = std::min(serialBest, seconds([&] {
                serial = dialogic::evaluateCorpusSerial(corpus, rules, cfg);
            }));
            parallelBest = std::min(parallelBest, seconds([&] {
                parallel = dialogic::evaluateCorpusParallel(corpus, rules, cfg);
            }));
        }

        bool match = serial.size() == parallel.size();
        for (std::size_t i = 0; match && i < serial.size(); ++i)
            match = serial[i].kind == parallel[i].kind;
        allMatch = allMatch && match;

        std::cout << "rules " << rules.name() << ": serial " << serialBest << " s, parallel "
                  << parallelBest << " s, speedup " << (serialBest / parallelBest)
                  << "x, verdicts " << (match ? "identical" : "DIFFER") << "\n";
    }
    return allMatch ? 0 : 1;
}
