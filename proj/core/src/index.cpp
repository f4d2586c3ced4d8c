#include "ngc/index.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ngc {

GroupedIndex translate_corpus(const TokenizedCorpus& corpus, const Vocabulary& vocab) {
    if (corpus.token_count >= k_none) {
        throw std::invalid_argument("corpus too large for 32-bit slot indices");
    }
    const auto n = static_cast<std::uint32_t>(corpus.token_count);

    GroupedIndex index;
    index.slot_count = n;
    index.next_position.assign(n, k_none);
    index.next_word_id.assign(n, k_sentinel_id);
    index.slot_word_id.assign(n, k_sentinel_id);
    index.text_pos.assign(n, 0);
    index.doc_table.reserve(corpus.documents.size());

    // Per-word fill cursor, starting at each group's first slot.
    std::vector<std::uint32_t> cursor = vocab.group_offset;

    std::uint32_t text_pos = 0;
    for (std::uint32_t d = 0; d < corpus.documents.size(); ++d) {
        const auto& doc = corpus.documents[d];
        DocRecord rec;
        rec.doc_id = doc.doc_id;

        Slot prev = k_none;
        for (std::uint32_t p = 0; p < doc.paragraphs.size(); ++p) {
            const auto& para = doc.paragraphs[p];
            ParaRecord pr;
            pr.doc_index = d;
            pr.ordinal = p + 1;
            pr.word_count = static_cast<std::uint32_t>(para.size());
            pr.first_text_pos = text_pos;

            // next_position links across paragraph breaks so document
            // traversal continues, but next_word_id stays at the sentinel
            // on each paragraph's last word to block phrase extension.
            Slot prev_in_para = k_none;
            for (const auto& tok : para) {
                WordId id = vocab.id_of(tok);
                if (id == k_sentinel_id) {
                    throw std::invalid_argument("token not in vocabulary: " + tok);
                }
                Slot slot = cursor[id]++;
                index.slot_word_id[slot] = id;
                index.text_pos[slot] = text_pos++;
                if (prev != k_none) index.next_position[prev] = slot;
                if (prev_in_para != k_none) index.next_word_id[prev_in_para] = id;
                if (pr.first_slot == k_none) pr.first_slot = slot;
                if (rec.first_slot == k_none) rec.first_slot = slot;
                prev = slot;
                prev_in_para = slot;
            }
            index.para_table.push_back(std::move(pr));
        }
        if (prev != k_none) index.next_position[prev] = k_none;
        index.doc_table.push_back(std::move(rec));
    }
    return index;
}

std::vector<std::pair<Slot, WordId>> traverse_paragraph(const GroupedIndex& index,
                                                        std::uint32_t para_index) {
    if (para_index >= index.para_table.size()) {
        throw std::out_of_range("paragraph index out of range");
    }
    const ParaRecord& pr = index.para_table[para_index];
    std::vector<std::pair<Slot, WordId>> out;
    out.reserve(pr.word_count);
    Slot s = pr.first_slot;
    for (std::uint32_t i = 0; i < pr.word_count; ++i) {
        out.emplace_back(s, index.slot_word_id[s]);
        s = index.next_position[s];
    }
    return out;
}

std::vector<WordId> traverse_document(const GroupedIndex& index, std::uint32_t doc_index) {
    if (doc_index >= index.doc_table.size()) {
        throw std::out_of_range("document index out of range");
    }
    std::vector<WordId> out;
    for (Slot s = index.doc_table[doc_index].first_slot; s != k_none; s = index.next_position[s]) {
        out.push_back(index.slot_word_id[s]);
    }
    return out;
}

std::vector<Slot> slots_in_text_order(const GroupedIndex& index) {
    std::vector<Slot> by_pos(index.slot_count, k_none);
    for (Slot s = 0; s < index.slot_count; ++s) by_pos[index.text_pos[s]] = s;
    return by_pos;
}

std::uint32_t paragraph_of_text_pos(const GroupedIndex& index, std::uint32_t pos) {
    auto it = std::upper_bound(index.para_table.begin(), index.para_table.end(), pos,
                               [](std::uint32_t value, const ParaRecord& pr) {
                                   return value < pr.first_text_pos;
                               });
    if (it == index.para_table.begin()) throw std::out_of_range("text position before first paragraph");
    return static_cast<std::uint32_t>(std::distance(index.para_table.begin(), it) - 1);
}

} // namespace ngc
