#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ngc/corpus.hpp"
#include "ngc/types.hpp"

namespace ngc {

struct DocRecord {
    std::string doc_id;
    Slot first_slot = k_none; // k_none for a document with no tokens
};

struct ParaRecord {
    std::uint32_t doc_index = 0;
    std::uint32_t ordinal = 0; // 1-based within the document
    Slot first_slot = k_none;
    std::uint32_t word_count = 0;
    std::uint32_t first_text_pos = 0; // global token ordinal of the first word
};

/// Occurrence slots grouped by word in descending-frequency order.
///
/// next_position links each slot to the slot of the textually following
/// word (k_none at each document's final slot), so original word order is
/// recoverable from the grouped layout. next_word_id carries the id of the
/// following word, with the sentinel id at each paragraph's final word.
struct GroupedIndex {
    std::vector<Slot> next_position;
    std::vector<WordId> next_word_id;
    std::vector<WordId> slot_word_id;
    std::vector<std::uint32_t> text_pos; // global token ordinal of each slot

    std::vector<DocRecord> doc_table;
    std::vector<ParaRecord> para_table;
    std::uint32_t slot_count = 0;
};

/// Fill the grouped arrays from a tokenized corpus. Slots within each
/// word's group are assigned in corpus order.
/// Throws std::invalid_argument if a token is missing from the vocabulary
/// (corpus/vocabulary mismatch).
GroupedIndex translate_corpus(const TokenizedCorpus& corpus, const Vocabulary& vocab);

/// Walk one paragraph in text order via next_position.
/// Throws std::out_of_range for an invalid paragraph index.
std::vector<std::pair<Slot, WordId>> traverse_paragraph(const GroupedIndex& index,
                                                        std::uint32_t para_index);

/// Word ids of one document in text order.
/// Throws std::out_of_range for an invalid document index.
std::vector<WordId> traverse_document(const GroupedIndex& index, std::uint32_t doc_index);

/// Inverse of text_pos: slot occupying each global token ordinal.
std::vector<Slot> slots_in_text_order(const GroupedIndex& index);

/// Paragraph index owning a global token ordinal (para_table is in text order).
std::uint32_t paragraph_of_text_pos(const GroupedIndex& index, std::uint32_t pos);

} // namespace ngc
