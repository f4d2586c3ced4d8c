#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ngc/types.hpp"

namespace ngc {

struct RawDocument {
    std::string doc_id; // stable identifier, unique within a corpus run
    std::string body;
};

enum class ParagraphMode {
    blank_line, // paragraphs separated by one or more blank lines
    newline,    // one paragraph per non-empty line
};

struct TokenizerConfig {
    bool case_fold = false; // ASCII fold only; multibyte sequences pass through
    ParagraphMode paragraph_mode = ParagraphMode::blank_line;
};

using Paragraph = std::vector<std::string>;

struct DocumentTokens {
    std::string doc_id;
    std::vector<Paragraph> paragraphs; // source order, no empty paragraphs
};

struct TokenizedCorpus {
    std::vector<DocumentTokens> documents;
    std::uint64_t token_count = 0;

    std::size_t paragraph_count() const;
};

/// Split a document into paragraphs of whitespace-delimited tokens.
/// Punctuation stays attached to its token. Empty body yields no paragraphs.
std::vector<Paragraph> segment_and_tokenize(const RawDocument& raw, const TokenizerConfig& cfg);

/// Tokenize a batch of documents, preserving document order.
TokenizedCorpus tokenize_corpus(const std::vector<RawDocument>& docs, const TokenizerConfig& cfg);

/// Word/integer mapping plus the group layout of the occurrence arrays.
/// Ids are dense 1..V, assigned in descending frequency order; ties are
/// broken by first appearance in corpus order.
struct Vocabulary {
    std::unordered_map<std::string, WordId> word_to_id;
    std::vector<std::string> id_to_word;      // [0] unused (sentinel)
    std::vector<std::uint32_t> frequency;     // [0] = 0
    std::vector<std::uint32_t> group_offset;  // [0] = 0, [1] = 0, exclusive prefix sums

    std::uint32_t size() const { return static_cast<std::uint32_t>(id_to_word.size()) - 1; }

    /// Id for a token, or k_sentinel_id if the token is unknown.
    WordId id_of(std::string_view token) const;
    const std::string& word(WordId id) const { return id_to_word.at(id); }
};

Vocabulary build_vocabulary(const TokenizedCorpus& corpus);

/// Read every regular file under `dir` (recursively) as one UTF-8 document.
/// doc_id is the path relative to `dir`; documents come back sorted by
/// doc_id. Dotfiles are skipped.
/// Throws std::runtime_error if the directory cannot be read.
std::vector<RawDocument> read_corpus_dir(const std::filesystem::path& dir);

} // namespace ngc
