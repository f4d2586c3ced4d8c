#pragma once

#include <cstdint>

#include "ngc/corpus.hpp"
#include "ngc/index.hpp"
#include "ngc/phrases.hpp"
#include "ngc/scoring.hpp"

namespace ngc {

struct PipelineOptions {
    std::uint32_t n_best = 20;
    std::uint32_t min_len = 2;
    std::uint32_t global_cap = 0; // 0 = no cap across levels
};

struct PipelineResult {
    Vocabulary vocab;
    GroupedIndex index;
    PhraseTable table; // post-selection state
    UsefulPhraseSet useful;
    std::vector<ParagraphWeight> weights;
    std::vector<Cluster> clusters;
};

/// Run the whole mining pipeline over a tokenized corpus.
PipelineResult run_pipeline(const TokenizedCorpus& corpus, const PipelineOptions& options);

/// Same, but starting from prebuilt structures (e.g. a loaded index file).
PipelineResult run_pipeline(Vocabulary vocab, GroupedIndex index, PhraseTable table,
                            const PipelineOptions& options);

} // namespace ngc
