#include "ngc/scoring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ngc {

double ngram_coefficient(std::uint32_t n) {
    if (n < 2) throw std::invalid_argument("ngram_coefficient requires n >= 2");
    return static_cast<double>(n) + (static_cast<double>(n) - 1.0) * 0.5;
}

std::vector<ParagraphWeight> paragraph_weights(const GroupedIndex& index,
                                               const UsefulPhraseSet& useful) {
    std::vector<ParagraphWeight> out;
    out.reserve(index.para_table.size());

    std::vector<std::uint32_t> counts(useful.entries.size(), 0);
    for (std::uint32_t p = 0; p < index.para_table.size(); ++p) {
        const ParaRecord& pr = index.para_table[p];
        ParagraphWeight pw;
        pw.para_index = p;
        pw.word_count = pr.word_count;

        std::fill(counts.begin(), counts.end(), 0);
        Slot s = pr.first_slot;
        for (std::uint32_t i = 0; i < pr.word_count; ++i) {
            auto it = useful.slot_to_phrase.find(s);
            if (it != useful.slot_to_phrase.end()) ++counts[it->second];
            s = index.next_position[s];
        }

        double numerator = 0.0;
        for (std::uint32_t id = 0; id < counts.size(); ++id) {
            if (counts[id] == 0) continue;
            pw.ngram_counts.emplace_back(id, counts[id]);
            numerator += counts[id] * ngram_coefficient(useful.entries[id].length());
        }
        if (pw.word_count > 0) pw.weight = numerator / pw.word_count;
        out.push_back(std::move(pw));
    }

    std::sort(out.begin(), out.end(), [&](const ParagraphWeight& a, const ParagraphWeight& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        const ParaRecord& pa = index.para_table[a.para_index];
        const ParaRecord& pb = index.para_table[b.para_index];
        const std::string& da = index.doc_table[pa.doc_index].doc_id;
        const std::string& db = index.doc_table[pb.doc_index].doc_id;
        if (da != db) return da < db;
        return pa.ordinal < pb.ordinal;
    });
    return out;
}

double cluster_weight(const Cluster& cluster, const UsefulPhraseSet& useful) {
    double quality = 0.0;
    for (std::uint32_t id : cluster.shared) {
        quality += ngram_coefficient(useful.entries[id].length());
    }
    return static_cast<double>(cluster.members.size()) * quality;
}

std::string phrase_text(const UsefulPhrase& phrase, const Vocabulary& vocab) {
    std::string text;
    for (std::size_t i = 0; i < phrase.ids.size(); ++i) {
        if (i > 0) text += ' ';
        text += vocab.word(phrase.ids[i]);
    }
    return text;
}

std::vector<Cluster> find_clusters(const GroupedIndex& index, const UsefulPhraseSet& useful,
                                   const std::vector<ParagraphWeight>& weights,
                                   const Vocabulary& vocab) {
    const std::uint32_t para_count = static_cast<std::uint32_t>(index.para_table.size());

    // Per-paragraph phrase signatures and per-phrase paragraph lists.
    std::vector<std::vector<std::uint32_t>> signature(para_count);
    std::vector<std::vector<std::uint32_t>> paras_of(useful.entries.size());
    for (std::uint32_t e = 0; e < useful.entries.size(); ++e) {
        for (Slot anchor : useful.entries[e].anchors) {
            const std::uint32_t p = paragraph_of_text_pos(index, index.text_pos[anchor]);
            if (paras_of[e].empty() || paras_of[e].back() != p) paras_of[e].push_back(p);
        }
        for (std::uint32_t p : paras_of[e]) signature[p].push_back(e);
    }
    for (auto& sig : signature) std::sort(sig.begin(), sig.end());

    std::set<std::vector<std::uint32_t>> seen;
    std::vector<Cluster> clusters;

    std::vector<std::uint32_t> shared;
    for (const ParagraphWeight& pw : weights) {
        const std::uint32_t p = pw.para_index;
        if (signature[p].empty()) continue;

        // Candidate partners: paragraphs sharing at least one phrase with p.
        std::vector<std::uint32_t> partners;
        for (std::uint32_t e : signature[p]) {
            for (std::uint32_t q : paras_of[e]) {
                if (q != p) partners.push_back(q);
            }
        }
        std::sort(partners.begin(), partners.end());
        partners.erase(std::unique(partners.begin(), partners.end()), partners.end());

        for (std::uint32_t q : partners) {
            shared.clear();
            std::set_intersection(signature[p].begin(), signature[p].end(), signature[q].begin(),
                                  signature[q].end(), std::back_inserter(shared));
            if (shared.empty() || !seen.insert(shared).second) continue;

            Cluster c;
            c.shared = shared;
            // Members: every paragraph whose signature contains the subset.
            for (std::uint32_t r : paras_of[shared.front()]) {
                if (std::includes(signature[r].begin(), signature[r].end(), shared.begin(),
                                  shared.end())) {
                    c.members.push_back(r);
                }
            }
            c.weight = cluster_weight(c, useful);
            clusters.push_back(std::move(c));
        }
    }

    // Canonical order: ascending weight; more members first among equals,
    // then the decoded phrase texts decide.
    std::vector<std::vector<std::string>> texts(clusters.size());
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        for (std::uint32_t id : clusters[i].shared) {
            texts[i].push_back(phrase_text(useful.entries[id], vocab));
        }
        std::sort(texts[i].begin(), texts[i].end());
    }
    std::vector<std::size_t> order(clusters.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (clusters[a].weight != clusters[b].weight) return clusters[a].weight < clusters[b].weight;
        if (clusters[a].members.size() != clusters[b].members.size())
            return clusters[a].members.size() > clusters[b].members.size();
        return texts[a] < texts[b];
    });
    std::vector<Cluster> sorted;
    sorted.reserve(clusters.size());
    for (std::size_t i : order) sorted.push_back(std::move(clusters[i]));
    return sorted;
}

} // namespace ngc
