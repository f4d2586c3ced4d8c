#include "ngc/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ngc {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](char c) { return is_space(c); });
}

void fold_ascii(std::string& s) {
    for (char& c : s) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
}

void tokenize_block(std::string_view block, bool case_fold, Paragraph& out) {
    std::size_t i = 0;
    while (i < block.size()) {
        while (i < block.size() && is_space(block[i])) ++i;
        std::size_t start = i;
        while (i < block.size() && !is_space(block[i])) ++i;
        if (i > start) {
            std::string tok(block.substr(start, i - start));
            if (case_fold) fold_ascii(tok);
            out.push_back(std::move(tok));
        }
    }
}

} // namespace

std::size_t TokenizedCorpus::paragraph_count() const {
    std::size_t n = 0;
    for (const auto& doc : documents) n += doc.paragraphs.size();
    return n;
}

std::vector<Paragraph> segment_and_tokenize(const RawDocument& raw, const TokenizerConfig& cfg) {
    std::vector<Paragraph> paragraphs;
    std::string_view body = raw.body;

    auto flush = [&](std::string_view block) {
        Paragraph p;
        tokenize_block(block, cfg.case_fold, p);
        if (!p.empty()) paragraphs.push_back(std::move(p));
    };

    if (cfg.paragraph_mode == ParagraphMode::newline) {
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t nl = body.find('\n', pos);
            std::string_view line =
                nl == std::string_view::npos ? body.substr(pos) : body.substr(pos, nl - pos);
            flush(line);
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
        return paragraphs;
    }

    // blank_line mode: accumulate lines until a blank line closes the block
    std::size_t block_start = 0;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t nl = body.find('\n', pos);
        std::string_view line =
            nl == std::string_view::npos ? body.substr(pos) : body.substr(pos, nl - pos);
        if (is_blank(line)) {
            flush(body.substr(block_start, pos - block_start));
            block_start = nl == std::string_view::npos ? body.size() : nl + 1;
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    flush(body.substr(block_start));
    return paragraphs;
}

TokenizedCorpus tokenize_corpus(const std::vector<RawDocument>& docs, const TokenizerConfig& cfg) {
    TokenizedCorpus corpus;
    corpus.documents.reserve(docs.size());
    for (const auto& raw : docs) {
        DocumentTokens dt;
        dt.doc_id = raw.doc_id;
        dt.paragraphs = segment_and_tokenize(raw, cfg);
        for (const auto& p : dt.paragraphs) corpus.token_count += p.size();
        corpus.documents.push_back(std::move(dt));
    }
    return corpus;
}

WordId Vocabulary::id_of(std::string_view token) const {
    auto it = word_to_id.find(std::string(token));
    return it == word_to_id.end() ? k_sentinel_id : it->second;
}

Vocabulary build_vocabulary(const TokenizedCorpus& corpus) {
    // Count in first-appearance order; a stable sort then keeps that order
    // among equal frequencies.
    std::unordered_map<std::string, std::uint32_t> seen;
    std::vector<std::pair<std::string, std::uint32_t>> counts; // (word, freq)
    for (const auto& doc : corpus.documents) {
        for (const auto& para : doc.paragraphs) {
            for (const auto& tok : para) {
                auto [it, inserted] = seen.emplace(tok, static_cast<std::uint32_t>(counts.size()));
                if (inserted) {
                    counts.emplace_back(tok, 1);
                } else {
                    ++counts[it->second].second;
                }
            }
        }
    }

    std::vector<std::uint32_t> order(counts.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return counts[a].second > counts[b].second;
    });

    Vocabulary vocab;
    vocab.id_to_word.resize(counts.size() + 1);
    vocab.frequency.resize(counts.size() + 1, 0);
    vocab.group_offset.resize(counts.size() + 1, 0);
    vocab.word_to_id.reserve(counts.size());

    std::uint32_t offset = 0;
    for (std::uint32_t rank = 0; rank < order.size(); ++rank) {
        WordId id = rank + 1;
        auto& [word, freq] = counts[order[rank]];
        vocab.word_to_id.emplace(word, id);
        vocab.id_to_word[id] = std::move(word);
        vocab.frequency[id] = freq;
        vocab.group_offset[id] = offset;
        offset += freq;
    }
    return vocab;
}

std::vector<RawDocument> read_corpus_dir(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) {
        throw std::runtime_error("corpus directory not readable: " + dir.string());
    }

    std::vector<fs::path> files;
    for (auto it = fs::recursive_directory_iterator(dir, ec);
         it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (ec) throw std::runtime_error("error scanning " + dir.string() + ": " + ec.message());
        if (!it->is_regular_file()) continue;
        std::string name = it->path().filename().string();
        if (!name.empty() && name[0] == '.') continue;
        files.push_back(it->path());
    }

    std::vector<RawDocument> docs;
    docs.reserve(files.size());
    for (auto& path : files) {
        RawDocument doc;
        doc.doc_id = fs::relative(path, dir).generic_string();
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + path.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        doc.body = std::move(ss).str();
        docs.push_back(std::move(doc));
    }
    std::sort(docs.begin(), docs.end(),
              [](const RawDocument& a, const RawDocument& b) { return a.doc_id < b.doc_id; });
    return docs;
}

} // namespace ngc
