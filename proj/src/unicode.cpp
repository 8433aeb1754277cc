#include "ordlex/unicode.hpp"

#include <algorithm>

#include "ordlex/errors.hpp"
#include "ordlex/unicode_tables.hpp"

namespace ordlex {

namespace {

bool in_ranges(const detail::CodepointRange* ranges, std::size_t n, std::uint32_t cp) {
    const auto* end = ranges + n;
    const auto* it = std::upper_bound(ranges, end, cp,
                                      [](std::uint32_t v, const detail::CodepointRange& r) {
                                          return v < r.first;
                                      });
    if (it == ranges) return false;
    --it;
    return cp >= it->first && cp <= it->last;
}

[[noreturn]] void bad_byte(std::size_t offset) {
    throw InputError("invalid UTF-8 at byte offset " + std::to_string(offset));
}

}  // namespace

bool is_unicode_letter(std::uint32_t cp) {
    return in_ranges(detail::kLetterRanges, detail::kLetterRanges_size, cp);
}

bool is_unicode_digit(std::uint32_t cp) {
    return in_ranges(detail::kDigitRanges, detail::kDigitRanges_size, cp);
}

std::uint32_t to_lower_codepoint(std::uint32_t cp) {
    const auto* begin = detail::kLowerPairs;
    const auto* end = begin + detail::kLowerPairs_size;
    const auto* it = std::lower_bound(begin, end, cp,
                                      [](const detail::LowerPair& p, std::uint32_t v) {
                                          return p.from < v;
                                      });
    if (it != end && it->from == cp) return it->to;
    return cp;
}

std::uint32_t decode_utf8(std::string_view text, std::size_t& pos) {
    const std::size_t start = pos;
    const auto byte = [&](std::size_t i) { return static_cast<std::uint8_t>(text[i]); };

    const std::uint8_t b0 = byte(pos++);
    if (b0 < 0x80) return b0;

    int extra;
    std::uint32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        extra = 1;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        extra = 2;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        extra = 3;
        cp = b0 & 0x07;
    } else {
        bad_byte(start);
    }

    if (pos + static_cast<std::size_t>(extra) > text.size()) bad_byte(start);
    for (int i = 0; i < extra; ++i) {
        const std::uint8_t b = byte(pos);
        if ((b & 0xC0) != 0x80) bad_byte(start);
        cp = (cp << 6) | (b & 0x3F);
        ++pos;
    }

    static constexpr std::uint32_t kMinByLen[4] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMinByLen[extra]) bad_byte(start);              // overlong
    if (cp >= 0xD800 && cp <= 0xDFFF) bad_byte(start);       // surrogate
    if (cp > 0x10FFFF) bad_byte(start);
    return cp;
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

}  // namespace ordlex
