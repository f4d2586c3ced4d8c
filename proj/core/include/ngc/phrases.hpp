#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ngc/corpus.hpp"
#include "ngc/index.hpp"
#include "ngc/types.hpp"

namespace ngc {

/// Per-slot phrase lengths plus doubly-linked chains through the anchors
/// of identical phrases. length == 1 means a bare word.
struct PhraseTable {
    std::vector<std::uint32_t> length;
    std::vector<Slot> next_phrase;
    std::vector<Slot> prev_phrase;

    PhraseTable() = default;
    explicit PhraseTable(std::uint32_t slot_count)
        : length(slot_count, 1), next_phrase(slot_count, k_none), prev_phrase(slot_count, k_none) {}
};

/// For every slot, find the longest phrase anchored there that occurs at
/// least twice in the corpus without crossing a paragraph break, and chain
/// the anchors of identical phrases together.
///
/// Word groups are processed in id order. For each anchor, the candidates
/// are the group members sharing its next word; the match set is then
/// narrowed one following word at a time until fewer than two members
/// remain or the anchor reaches a paragraph break. An anchor already
/// holding a longer phrase is left alone; a shorter one is overwritten and
/// spliced out of its old chain.
PhraseTable compute_phrase_lengths(const GroupedIndex& index, const Vocabulary& vocab);

/// Remove slot s from its chain, relinking its neighbours. s's own links
/// are cleared; every other chain is untouched.
void splice_out(PhraseTable& table, Slot s);

/// Number of anchors in s's chain (walks to the head, then counts forward).
std::uint32_t phrase_frequency(const PhraseTable& table, Slot s);

struct UsefulPhrase {
    std::vector<WordId> ids;   // token ids, length == ids.size() >= 2
    std::vector<Slot> anchors; // surviving anchor slots in text order
    std::uint32_t length() const { return static_cast<std::uint32_t>(ids.size()); }
    std::uint32_t frequency() const { return static_cast<std::uint32_t>(anchors.size()); }
};

struct UsefulPhraseSet {
    std::vector<UsefulPhrase> entries;
    std::unordered_map<Slot, std::uint32_t> slot_to_phrase; // anchor slot -> entry index
};

/// Filter the phrase table down to the useful n-gram set.
///
/// Length levels run from the longest phrase down to min_len. At each
/// level the distinct phrases are ranked by chain frequency (ties broken
/// by earliest anchor) and the n_best highest keep their entries; every
/// other table entry anchored strictly inside a kept occurrence dies, and
/// the remaining phrases of the level drop one word and merge chains with
/// any identical shorter phrase. Chains left with a single member are
/// discarded. global_cap, when nonzero, bounds the total number of kept
/// phrases across all levels.
///
/// Mutates `table`; the index is read-only.
UsefulPhraseSet select_useful(PhraseTable& table, const GroupedIndex& index,
                              std::uint32_t n_best, std::uint32_t min_len = 2,
                              std::uint32_t global_cap = 0);

/// Token ids of the length-n phrase anchored at slot s.
std::vector<WordId> phrase_ids_at(const GroupedIndex& index, Slot s, std::uint32_t n);

} // namespace ngc
