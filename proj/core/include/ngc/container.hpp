#pragma once

#include <filesystem>

#include "ngc/corpus.hpp"
#include "ngc/index.hpp"
#include "ngc/phrases.hpp"

namespace ngc {

/// Everything the downstream stages need, as persisted in one container.
struct IndexBundle {
    Vocabulary vocab;
    GroupedIndex index;
    PhraseTable table; // full phrase-length output, before any selection
};

/// Versioned binary container: magic "NGC1", then the vocabulary block,
/// document and paragraph tables, and the per-slot arrays as fixed-width
/// little-endian 32-bit integers. Identical inputs produce identical bytes.
void save_index(const std::filesystem::path& path, const IndexBundle& bundle);

/// Throws std::runtime_error on bad magic or a truncated/corrupt file.
IndexBundle load_index(const std::filesystem::path& path);

} // namespace ngc
