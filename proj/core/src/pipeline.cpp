#include "ngc/pipeline.hpp"

namespace ngc {

PipelineResult run_pipeline(Vocabulary vocab, GroupedIndex index, PhraseTable table,
                            const PipelineOptions& options) {
    PipelineResult r;
    r.vocab = std::move(vocab);
    r.index = std::move(index);
    r.table = std::move(table);
    r.useful = select_useful(r.table, r.index, options.n_best, options.min_len, options.global_cap);
    r.weights = paragraph_weights(r.index, r.useful);
    r.clusters = find_clusters(r.index, r.useful, r.weights, r.vocab);
    return r;
}

PipelineResult run_pipeline(const TokenizedCorpus& corpus, const PipelineOptions& options) {
    Vocabulary vocab = build_vocabulary(corpus);
    GroupedIndex index = translate_corpus(corpus, vocab);
    PhraseTable table = compute_phrase_lengths(index, vocab);
    return run_pipeline(std::move(vocab), std::move(index), std::move(table), options);
}

} // namespace ngc
