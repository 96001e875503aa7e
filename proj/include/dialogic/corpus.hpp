#pragma once

// Batch verdict evaluation over formula corpora.  Corpus items are
// independent, so the parallel path farms them out with OpenMP and
// writes results by index; the serial path is the reference the tests
// and the benchmark compare against.  Both produce identical vectors.

#include <vector>

#include "dialogic/formula.hpp"
#include "dialogic/rules.hpp"
#include "dialogic/search.hpp"

namespace dialogic {

std::vector<Verdict> evaluateCorpusSerial(const std::vector<FormulaPtr>& corpus,
                                          const RuleSet& rs, const SearchConfig& cfg);

std::vector<Verdict> evaluateCorpusParallel(const std::vector<FormulaPtr>& corpus,
                                            const RuleSet& rs, const SearchConfig& cfg);

// Parallel when OpenMP is compiled in, serial otherwise.
std::vector<Verdict> evaluateCorpus(const std::vector<FormulaPtr>& corpus, const RuleSet& rs,
                                    const SearchConfig& cfg);

}  // namespace dialogic
