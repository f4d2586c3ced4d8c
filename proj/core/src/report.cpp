#include "ngc/report.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace ngc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) {
    // Invalid UTF-8 in corpus bytes is replaced rather than fatal.
    return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

std::string number(double v) { return ordered_json(v).dump(); }

struct NgramView {
    std::string text;
    std::uint32_t length;
    std::uint32_t frequency;
};

std::vector<NgramView> cluster_ngrams(const Cluster& c, const UsefulPhraseSet& useful,
                                      const Vocabulary& vocab) {
    std::vector<NgramView> out;
    out.reserve(c.shared.size());
    for (std::uint32_t id : c.shared) {
        const UsefulPhrase& e = useful.entries[id];
        out.push_back({phrase_text(e, vocab), e.length(), e.frequency()});
    }
    std::sort(out.begin(), out.end(), [](const NgramView& a, const NgramView& b) {
        if (a.length != b.length) return a.length > b.length;
        if (a.frequency != b.frequency) return a.frequency > b.frequency;
        return a.text < b.text;
    });
    return out;
}

// Highest-weight clusters first, capped at top_k. find_clusters returns
// ascending order, so take the tail and reverse it.
std::vector<const Cluster*> top_clusters(const std::vector<Cluster>& clusters,
                                         std::uint32_t top_k) {
    std::vector<const Cluster*> out;
    const std::size_t n = std::min<std::size_t>(top_k, clusters.size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(&clusters[clusters.size() - 1 - i]);
    return out;
}

} // namespace

std::string paragraph_excerpt(const GroupedIndex& index, const Vocabulary& vocab,
                              std::uint32_t para_index, std::size_t limit) {
    std::string text;
    for (const auto& [slot, word_id] : traverse_paragraph(index, para_index)) {
        if (!text.empty()) text += ' ';
        text += vocab.word(word_id);
    }
    if (text.size() <= limit) return text;
    std::size_t cut = limit;
    while (cut > 0 && (static_cast<unsigned char>(text[cut]) & 0xC0) == 0x80) --cut;
    text.resize(cut);
    text += "...";
    return text;
}

std::string render_cluster_report(const std::vector<Cluster>& clusters,
                                  const UsefulPhraseSet& useful, const GroupedIndex& index,
                                  const Vocabulary& vocab, std::uint32_t top_k,
                                  ReportFormat format) {
    const auto top = top_clusters(clusters, top_k);

    if (format == ReportFormat::json) {
        ordered_json root;
        root["clusters"] = ordered_json::array();
        for (const Cluster* c : top) {
            ordered_json jc;
            jc["weight"] = c->weight;
            jc["ngrams"] = ordered_json::array();
            for (const NgramView& g : cluster_ngrams(*c, useful, vocab)) {
                jc["ngrams"].push_back({{"text", g.text},
                                        {"length", g.length},
                                        {"frequency", g.frequency}});
            }
            jc["paragraphs"] = ordered_json::array();
            for (std::uint32_t p : c->members) {
                const ParaRecord& pr = index.para_table[p];
                jc["paragraphs"].push_back({{"doc", index.doc_table[pr.doc_index].doc_id},
                                            {"para", pr.ordinal},
                                            {"excerpt", paragraph_excerpt(index, vocab, p)}});
            }
            root["clusters"].push_back(std::move(jc));
        }
        return dump(root);
    }

    std::string out = "cluster\tweight\tngrams\tdoc\tpara\n";
    std::uint32_t ordinal = 1;
    for (const Cluster* c : top) {
        std::string joined;
        for (const NgramView& g : cluster_ngrams(*c, useful, vocab)) {
            if (!joined.empty()) joined += '|';
            joined += g.text;
        }
        for (std::uint32_t p : c->members) {
            const ParaRecord& pr = index.para_table[p];
            out += std::to_string(ordinal);
            out += '\t';
            out += number(c->weight);
            out += '\t';
            out += joined;
            out += '\t';
            out += index.doc_table[pr.doc_index].doc_id;
            out += '\t';
            out += std::to_string(pr.ordinal);
            out += '\n';
        }
        ++ordinal;
    }
    return out;
}

std::string render_phrase_report(const UsefulPhraseSet& useful, const Vocabulary& vocab,
                                 ReportFormat format) {
    std::vector<NgramView> rows;
    rows.reserve(useful.entries.size());
    for (const UsefulPhrase& e : useful.entries) {
        rows.push_back({phrase_text(e, vocab), e.length(), e.frequency()});
    }
    std::sort(rows.begin(), rows.end(), [](const NgramView& a, const NgramView& b) {
        if (a.length != b.length) return a.length > b.length;
        if (a.frequency != b.frequency) return a.frequency > b.frequency;
        return a.text < b.text;
    });

    if (format == ReportFormat::json) {
        ordered_json root;
        root["phrases"] = ordered_json::array();
        for (const NgramView& g : rows) {
            root["phrases"].push_back({{"text", g.text},
                                       {"length", g.length},
                                       {"frequency", g.frequency}});
        }
        return dump(root);
    }

    std::string out = "text\tlength\tfrequency\n";
    for (const NgramView& g : rows) {
        out += g.text;
        out += '\t';
        out += std::to_string(g.length);
        out += '\t';
        out += std::to_string(g.frequency);
        out += '\n';
    }
    return out;
}

} // namespace ngc
