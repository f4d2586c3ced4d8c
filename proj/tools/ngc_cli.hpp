#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ngc/corpus.hpp"
#include "ngc/report.hpp"

namespace ngc::cli {

// Exit codes shared by every subcommand.
inline constexpr int k_exit_ok = 0;
inline constexpr int k_exit_pipeline = 1;
inline constexpr int k_exit_usage = 2;

struct RunConfig {
    std::string corpus_dir;      // empty = not given
    std::string index_path;      // empty = not given
    std::uint32_t n_best = 20;
    std::uint32_t min_len = 2;
    std::uint32_t top_k = 50;
    std::uint32_t global_cap = 0; // optional cap on useful phrases across levels
    ReportFormat format = ReportFormat::json;
    bool case_fold = false;
    ParagraphMode paragraph_mode = ParagraphMode::blank_line;
};

/// Build the index container from a corpus directory and print a summary.
int cmd_build(const RunConfig& config, std::ostream& out, std::ostream& err);

/// List the useful n-grams for a corpus or a prebuilt index.
int cmd_phrases(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Emit the ranked paragraph clusters for a corpus or a prebuilt index.
int cmd_clusters(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace ngc::cli
