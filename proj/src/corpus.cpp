#include "dialogic/corpus.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dialogic {

std::vector<Verdict> evaluateCorpusSerial(const std::vector<FormulaPtr>& corpus,
                                          const RuleSet& rs, const SearchConfig& cfg) {
    std::vector<Verdict> out(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i)
        out[i] = searchStrategy(corpus[i], rs, cfg);
    return out;
}

std::vector<Verdict> evaluateCorpusParallel(const std::vector<FormulaPtr>& corpus,
                                            const RuleSet& rs, const SearchConfig& cfg) {
    std::vector<Verdict> out(corpus.size());
#ifdef _OPENMP
    const auto n = static_cast<long>(corpus.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            searchStrategy(corpus[static_cast<std::size_t>(i)], rs, cfg);
#else
    out = evaluateCorpusSerial(corpus, rs, cfg);
#endif
    return out;
}

std::vector<Verdict> evaluateCorpus(const std::vector<FormulaPtr>& corpus, const RuleSet& rs,
                                    const SearchConfig& cfg) {
#ifdef _OPENMP
    return evaluateCorpusParallel(corpus, rs, cfg);
#else
    return evaluateCorpusSerial(corpus, rs, cfg);
#endif
}

}  // namespace dialogic
