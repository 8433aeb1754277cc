#pragma once

#include <cstddef>
#include <cstdint>

namespace ordlex::detail {

struct CodepointRange {
    std::uint32_t first;
    std::uint32_t last;  // inclusive
};

struct LowerPair {
    std::uint32_t from;
    std::uint32_t to;
};

extern const CodepointRange kLetterRanges[];
extern const std::size_t kLetterRanges_size;

extern const CodepointRange kDigitRanges[];
extern const std::size_t kDigitRanges_size;

extern const LowerPair kLowerPairs[];
extern const std::size_t kLowerPairs_size;

}  // namespace ordlex::detail
