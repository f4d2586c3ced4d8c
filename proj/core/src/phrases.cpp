#include "ngc/phrases.hpp"

#include <algorithm>
#include <stdexcept>

namespace ngc {

PhraseTable compute_phrase_lengths(const GroupedIndex& index, const Vocabulary& vocab) {
    PhraseTable table(index.slot_count);

    // Scratch for one anchor's match set: origin slot plus a cursor at the
    // slot of the phrase's current last word.
    struct Member {
        Slot origin;
        Slot cursor;
    };
    std::vector<Member> members;
    std::vector<std::pair<WordId, Slot>> by_next; // group slots keyed by next word

    for (WordId w = 1; w <= vocab.size(); ++w) {
        const std::uint32_t begin = vocab.group_offset[w];
        const std::uint32_t freq = vocab.frequency[w];
        if (freq < 2) continue; // a phrase needs two occurrences of its first word

        // Bucket the group by next word. Slots are already in corpus order,
        // and the stable sort keeps them that way inside each bucket.
        by_next.clear();
        for (Slot s = begin; s < begin + freq; ++s) {
            if (index.next_word_id[s] != k_sentinel_id) by_next.emplace_back(index.next_word_id[s], s);
        }
        std::stable_sort(by_next.begin(), by_next.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });

        for (Slot s = begin; s < begin + freq; ++s) {
            const WordId first_next = index.next_word_id[s];
            if (first_next == k_sentinel_id) continue; // paragraph ends after this word

            auto lo = std::lower_bound(by_next.begin(), by_next.end(), first_next,
                                       [](const auto& e, WordId v) { return e.first < v; });
            auto hi = std::upper_bound(lo, by_next.end(), first_next,
                                       [](WordId v, const auto& e) { return v < e.first; });
            if (hi - lo < 2) continue; // this bigram occurs once

            members.clear();
            for (auto it = lo; it != hi; ++it) {
                members.push_back({it->second, index.next_position[it->second]});
            }

            // Extend the match one word at a time, following the anchor.
            std::uint32_t len = 2;
            Slot anchor_cursor = index.next_position[s];
            for (;;) {
                const WordId target = index.next_word_id[anchor_cursor];
                if (target == k_sentinel_id) break; // anchor's paragraph ends here

                std::size_t kept = 0;
                for (const Member& m : members) {
                    if (index.next_word_id[m.cursor] == target) {
                        members[kept++] = {m.origin, index.next_position[m.cursor]};
                    }
                }
                if (kept < 2) break;
                members.resize(kept);
                anchor_cursor = index.next_position[anchor_cursor];
                ++len;
            }

            // Record the phrase at every anchor in the match set. An anchor
            // already holding a phrase at least this long is skipped; a
            // shorter one is overwritten and spliced out of its old chain.
            Slot prev_in_chain = k_none;
            for (const Member& m : members) {
                if (table.length[m.origin] >= len) continue;
                if (table.length[m.origin] >= 2) splice_out(table, m.origin);
                table.length[m.origin] = len;
                table.prev_phrase[m.origin] = prev_in_chain;
                table.next_phrase[m.origin] = k_none;
                if (prev_in_chain != k_none) table.next_phrase[prev_in_chain] = m.origin;
                prev_in_chain = m.origin;
            }
        }
    }
    return table;
}

void splice_out(PhraseTable& table, Slot s) {
    const Slot prev = table.prev_phrase[s];
    const Slot next = table.next_phrase[s];
    if (prev != k_none) table.next_phrase[prev] = next;
    if (next != k_none) table.prev_phrase[next] = prev;
    table.prev_phrase[s] = k_none;
    table.next_phrase[s] = k_none;
}

std::uint32_t phrase_frequency(const PhraseTable& table, Slot s) {
    Slot head = s;
    while (table.prev_phrase[head] != k_none) head = table.prev_phrase[head];
    std::uint32_t count = 0;
    for (Slot cur = head; cur != k_none; cur = table.next_phrase[cur]) ++count;
    return count;
}

std::vector<WordId> phrase_ids_at(const GroupedIndex& index, Slot s, std::uint32_t n) {
    std::vector<WordId> ids;
    ids.reserve(n);
    Slot cur = s;
    for (std::uint32_t i = 0; i < n; ++i) {
        ids.push_back(index.slot_word_id[cur]);
        if (i + 1 < n) cur = index.next_position[cur];
    }
    return ids;
}

namespace {

struct VectorHash {
    std::size_t operator()(const std::vector<WordId>& v) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (WordId id : v) {
            h ^= id;
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

// One distinct phrase at the working level: its chain plus the members
// gathered so far (merges append here as levels reduce).
struct LevelEntry {
    std::vector<WordId> ids;
    std::vector<Slot> members;
    Slot head = k_none;
    Slot tail = k_none;
};

using LevelRegistry = std::unordered_map<std::vector<WordId>, LevelEntry, VectorHash>;

} // namespace

UsefulPhraseSet select_useful(PhraseTable& table, const GroupedIndex& index,
                              std::uint32_t n_best, std::uint32_t min_len,
                              std::uint32_t global_cap) {
    if (min_len < 2) throw std::invalid_argument("min_len must be at least 2");

    UsefulPhraseSet useful;
    const std::uint32_t n = index.slot_count;
    if (n == 0) return useful;

    std::uint32_t max_len = 1;
    for (Slot s = 0; s < n; ++s) max_len = std::max(max_len, table.length[s]);
    if (max_len < min_len) return useful;

    // Slots bucketed by their length as computed; reductions are merged into
    // the next level's registry directly, so buckets are never re-scanned.
    std::vector<std::vector<Slot>> by_length(max_len + 1);
    for (Slot s = 0; s < n; ++s) {
        if (table.length[s] >= min_len) by_length[table.length[s]].push_back(s);
    }

    const std::vector<Slot> slot_at = slots_in_text_order(index);

    enum class State : std::uint8_t { active, frozen, dead };
    std::vector<State> state(n, State::active);
    std::vector<std::uint8_t> marked(n, 0);

    // Chain ownership tags for the level being processed: entry index + 1.
    std::vector<std::uint32_t> owner(n, 0);

    auto scan_level = [&](std::uint32_t len, LevelRegistry& registry) {
        for (Slot s : by_length[len]) {
            if (state[s] != State::active || table.length[s] != len) continue;
            if (table.prev_phrase[s] != k_none) continue; // only chain heads
            LevelEntry entry;
            entry.ids = phrase_ids_at(index, s, len);
            for (Slot cur = s; cur != k_none; cur = table.next_phrase[cur]) {
                entry.members.push_back(cur);
                entry.tail = cur;
            }
            entry.head = s;
            std::vector<WordId> key = entry.ids;
            registry.emplace(std::move(key), std::move(entry));
        }
    };

    std::uint32_t kept_total = 0;
    LevelRegistry registry;
    scan_level(max_len, registry);

    for (std::uint32_t level = max_len; level >= min_len; --level) {
        // (a) distinct phrases of this level; singleton chains are discarded
        // here since a phrase with one surviving occurrence correlates nothing.
        std::vector<LevelEntry*> candidates;
        candidates.reserve(registry.size());
        for (auto& [ids, entry] : registry) {
            if (entry.members.size() < 2) {
                for (Slot m : entry.members) {
                    splice_out(table, m);
                    table.length[m] = 1;
                    state[m] = State::dead;
                }
                continue;
            }
            candidates.push_back(&entry);
        }

        // Rank by chain frequency, earliest anchor breaking ties.
        std::vector<std::pair<LevelEntry*, std::uint32_t>> ranked;
        ranked.reserve(candidates.size());
        for (LevelEntry* e : candidates) {
            std::uint32_t first = k_none;
            for (Slot m : e->members) first = std::min(first, index.text_pos[m]);
            ranked.emplace_back(e, first);
        }
        std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
            if (a.first->members.size() != b.first->members.size())
                return a.first->members.size() > b.first->members.size();
            return a.second < b.second;
        });
        candidates.clear();
        for (auto& [e, first] : ranked) candidates.push_back(e);

        // (b) keep the n_best highest-frequency phrases of the level
        std::uint32_t budget = n_best;
        if (global_cap != 0) budget = std::min(budget, global_cap - std::min(global_cap, kept_total));
        const std::size_t kept_here = std::min<std::size_t>(budget, candidates.size());

        for (std::size_t i = 0; i < kept_here; ++i) {
            for (Slot m : candidates[i]->members) owner[m] = static_cast<std::uint32_t>(i) + 1;
        }

        // (c) delete every active entry anchored strictly inside a kept
        // occurrence span. A phrase's own anchors are exempt so overlapping
        // self-occurrences survive. Marking happens against the spans as
        // kept, then applies at once.
        std::vector<Slot> to_delete;
        for (std::size_t i = 0; i < kept_here; ++i) {
            for (Slot m : candidates[i]->members) {
                const std::uint32_t start = index.text_pos[m];
                for (std::uint32_t p = start + 1; p < start + level; ++p) {
                    const Slot victim = slot_at[p];
                    if (state[victim] != State::active || table.length[victim] < 2) continue;
                    if (owner[victim] == static_cast<std::uint32_t>(i) + 1) continue;
                    if (!marked[victim]) {
                        marked[victim] = 1;
                        to_delete.push_back(victim);
                    }
                }
            }
        }
        for (Slot victim : to_delete) {
            splice_out(table, victim);
            table.length[victim] = 1;
            state[victim] = State::dead;
        }

        // Kept phrases become useful entries if they still occur twice;
        // their anchors freeze and take no further part in selection.
        for (std::size_t i = 0; i < kept_here; ++i) {
            LevelEntry* entry = candidates[i];
            std::vector<Slot> survivors;
            survivors.reserve(entry->members.size());
            for (Slot m : entry->members) {
                if (state[m] != State::dead) survivors.push_back(m);
                owner[m] = 0;
            }
            if (survivors.size() < 2) {
                for (Slot m : survivors) {
                    splice_out(table, m);
                    table.length[m] = 1;
                    state[m] = State::dead;
                }
                continue;
            }
            std::sort(survivors.begin(), survivors.end(), [&](Slot a, Slot b) {
                return index.text_pos[a] < index.text_pos[b];
            });
            const auto entry_index = static_cast<std::uint32_t>(useful.entries.size());
            for (Slot m : survivors) {
                state[m] = State::frozen;
                useful.slot_to_phrase.emplace(m, entry_index);
            }
            useful.entries.push_back(UsefulPhrase{entry->ids, std::move(survivors)});
            ++kept_total;
        }

        if (level == min_len) break;

        // Phrases of the next level down, before merging reductions in.
        LevelRegistry next;
        scan_level(level - 1, next);

        // (d) every remaining phrase of this level drops its last word and
        // merges with any identical shorter phrase: the old tail's next
        // pointer is bent to the incoming head, and vice versa for prev.
        for (std::size_t i = kept_here; i < candidates.size(); ++i) {
            LevelEntry* entry = candidates[i];
            std::vector<Slot> survivors;
            Slot head = k_none, tail = k_none;
            for (Slot m : entry->members) {
                if (state[m] == State::dead) continue;
                table.length[m] = level - 1;
                table.prev_phrase[m] = tail;
                table.next_phrase[m] = k_none;
                if (tail != k_none) table.next_phrase[tail] = m;
                if (head == k_none) head = m;
                tail = m;
                survivors.push_back(m);
            }
            if (survivors.empty()) continue;

            std::vector<WordId> short_ids(entry->ids.begin(), entry->ids.end() - 1);
            auto [it, inserted] = next.try_emplace(short_ids);
            LevelEntry& target = it->second;
            if (inserted) {
                target.ids = std::move(short_ids);
                target.members = std::move(survivors);
                target.head = head;
                target.tail = tail;
            } else {
                table.next_phrase[target.tail] = head;
                table.prev_phrase[head] = target.tail;
                target.tail = tail;
                target.members.insert(target.members.end(), survivors.begin(), survivors.end());
            }
        }
        registry = std::move(next);
    }
    return useful;
}

} // namespace ngc
