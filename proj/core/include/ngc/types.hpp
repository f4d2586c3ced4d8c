#pragma once

#include <cstdint>

namespace ngc {

// Vocabulary ids are dense 1..V in descending frequency order.
// Id 0 is the paragraph-break sentinel and never maps to a word.
using WordId = std::uint32_t;

// A slot is a position in the grouped-occurrence arrays. All occurrences
// of one word occupy a contiguous slot range.
using Slot = std::uint32_t;

inline constexpr WordId k_sentinel_id = 0;

// Reserved "no link" value for slot-valued arrays (end of document,
// end of a phrase chain).
inline constexpr Slot k_none = 0xFFFFFFFFu;

} // namespace ngc
