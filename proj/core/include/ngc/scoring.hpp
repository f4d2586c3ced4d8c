#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ngc/corpus.hpp"
#include "ngc/index.hpp"
#include "ngc/phrases.hpp"
#include "ngc/types.hpp"

namespace ngc {

/// Length coefficient of an n-gram: n + (n - 1) * 0.5, so a bigram counts
/// 2.5 and a trigram 4. Throws std::invalid_argument for n < 2.
double ngram_coefficient(std::uint32_t n);

struct ParagraphWeight {
    std::uint32_t para_index = 0;
    double weight = 0.0;
    // (useful phrase id, occurrences inside this paragraph), id-sorted
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ngram_counts;
    std::uint32_t word_count = 0;
};

/// Weight every paragraph by its useful n-gram content: the sum of
/// occurrences times length coefficients, divided by the paragraph's word
/// count. Sorted ascending by weight; ties fall back to (doc_id, ordinal).
std::vector<ParagraphWeight> paragraph_weights(const GroupedIndex& index,
                                               const UsefulPhraseSet& useful);

struct Cluster {
    std::vector<std::uint32_t> shared;  // useful phrase ids, sorted
    std::vector<std::uint32_t> members; // paragraph indices, sorted
    double weight = 0.0;
};

/// Weight of a cluster: member count times the summed coefficients of the
/// shared phrases, so both correlation quantity and phrase quality count.
double cluster_weight(const Cluster& cluster, const UsefulPhraseSet& useful);

/// Group paragraphs that share identical subsets of useful n-grams.
///
/// Every pair of correlating paragraphs contributes the intersection of
/// their phrase sets; each distinct subset becomes one cluster holding all
/// paragraphs that contain it. Sorted ascending by weight, ties broken by
/// larger member count, then by the phrases' decoded texts.
std::vector<Cluster> find_clusters(const GroupedIndex& index, const UsefulPhraseSet& useful,
                                   const std::vector<ParagraphWeight>& weights,
                                   const Vocabulary& vocab);

/// Decoded text of a useful phrase (tokens joined by single spaces).
std::string phrase_text(const UsefulPhrase& phrase, const Vocabulary& vocab);

} // namespace ngc
