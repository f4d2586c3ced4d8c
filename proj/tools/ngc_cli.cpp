#include "ngc_cli.hpp"

#include <exception>
#include <filesystem>
#include <ostream>

#include "ngc/container.hpp"
#include "ngc/pipeline.hpp"

namespace ngc::cli {

namespace {

bool validate(const RunConfig& config, std::ostream& err) {
    if (config.min_len < 2) {
        err << "error: --min-len must be at least 2\n";
        return false;
    }
    if (config.top_k < 1) {
        err << "error: --top must be at least 1\n";
        return false;
    }
    return true;
}

TokenizerConfig tokenizer_config(const RunConfig& config) {
    return TokenizerConfig{config.case_fold, config.paragraph_mode};
}

// Phrase and cluster reports run from a prebuilt index when --index is
// given, otherwise from a freshly built corpus.
IndexBundle load_or_build(const RunConfig& config) {
    if (!config.index_path.empty()) return load_index(config.index_path);
    const TokenizedCorpus corpus =
        tokenize_corpus(read_corpus_dir(config.corpus_dir), tokenizer_config(config));
    IndexBundle bundle;
    bundle.vocab = build_vocabulary(corpus);
    bundle.index = translate_corpus(corpus, bundle.vocab);
    bundle.table = compute_phrase_lengths(bundle.index, bundle.vocab);
    return bundle;
}

int run_report(const RunConfig& config, std::ostream& out, std::ostream& err, bool clusters) {
    if (!validate(config, err)) return k_exit_usage;
    if (config.index_path.empty() && config.corpus_dir.empty()) {
        err << "error: either --index or --corpus is required\n";
        return k_exit_usage;
    }
    IndexBundle bundle;
    try {
        bundle = load_or_build(config);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return k_exit_usage;
    }
    try {
        PipelineOptions options{config.n_best, config.min_len, config.global_cap};
        PipelineResult result = run_pipeline(std::move(bundle.vocab), std::move(bundle.index),
                                             std::move(bundle.table), options);
        if (clusters) {
            out << render_cluster_report(result.clusters, result.useful, result.index,
                                         result.vocab, config.top_k, config.format);
        } else {
            out << render_phrase_report(result.useful, result.vocab, config.format);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return k_exit_pipeline;
    }
    return k_exit_ok;
}

} // namespace

int cmd_build(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!validate(config, err)) return k_exit_usage;
    if (config.corpus_dir.empty()) {
        err << "error: --corpus is required\n";
        return k_exit_usage;
    }

    TokenizedCorpus corpus;
    try {
        corpus = tokenize_corpus(read_corpus_dir(config.corpus_dir), tokenizer_config(config));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return k_exit_usage;
    }
    if (corpus.token_count == 0) {
        err << "warning: corpus is empty\n";
    }

    IndexBundle bundle;
    std::uint32_t longest = 0;
    std::uint32_t longest_freq = 0;
    try {
        bundle.vocab = build_vocabulary(corpus);
        bundle.index = translate_corpus(corpus, bundle.vocab);
        bundle.table = compute_phrase_lengths(bundle.index, bundle.vocab);
        for (Slot s = 0; s < bundle.index.slot_count; ++s) {
            const std::uint32_t len = bundle.table.length[s];
            if (len < 2 || len < longest) continue;
            if (bundle.table.prev_phrase[s] != k_none) continue; // count each chain once
            const std::uint32_t freq = phrase_frequency(bundle.table, s);
            if (len > longest || freq > longest_freq) {
                longest = len;
                longest_freq = freq;
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return k_exit_pipeline;
    }

    const std::string path = config.index_path.empty() ? "ngc.index" : config.index_path;
    try {
        save_index(path, bundle);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return k_exit_usage;
    }

    out << "index: " << path << "\n";
    out << "documents: " << bundle.index.doc_table.size() << "\n";
    out << "paragraphs: " << bundle.index.para_table.size() << "\n";
    out << "tokens: " << bundle.index.slot_count << "\n";
    out << "vocabulary: " << bundle.vocab.size() << "\n";
    if (longest >= 2) {
        out << "longest repeated phrase: length " << longest << ", frequency " << longest_freq
            << "\n";
    } else {
        out << "longest repeated phrase: none\n";
    }
    return k_exit_ok;
}

int cmd_phrases(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return run_report(config, out, err, /*clusters=*/false);
}

int cmd_clusters(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return run_report(config, out, err, /*clusters=*/true);
}

} // namespace ngc::cli
