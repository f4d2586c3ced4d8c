#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ngc/corpus.hpp"
#include "ngc/index.hpp"
#include "ngc/phrases.hpp"
#include "ngc/scoring.hpp"

namespace ngc {

enum class ReportFormat { json, tsv };

/// Render the top_k highest-weight clusters, best first. JSON follows
/// docs/cluster_report.schema.json; TSV emits one row per
/// (cluster, paragraph). Output is byte-stable for identical inputs.
std::string render_cluster_report(const std::vector<Cluster>& clusters,
                                  const UsefulPhraseSet& useful, const GroupedIndex& index,
                                  const Vocabulary& vocab, std::uint32_t top_k,
                                  ReportFormat format);

/// Render the useful phrases, longest first (frequency, then text, break
/// ties). JSON follows docs/phrase_report.schema.json.
std::string render_phrase_report(const UsefulPhraseSet& useful, const Vocabulary& vocab,
                                 ReportFormat format);

/// Paragraph text rebuilt from the index (tokens joined by spaces),
/// truncated to `limit` characters on a UTF-8 boundary with a trailing
/// ellipsis when cut.
std::string paragraph_excerpt(const GroupedIndex& index, const Vocabulary& vocab,
                              std::uint32_t para_index, std::size_t limit = 200);

} // namespace ngc
