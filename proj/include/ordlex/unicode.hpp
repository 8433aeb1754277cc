#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace ordlex {

bool is_unicode_letter(std::uint32_t cp);
bool is_unicode_digit(std::uint32_t cp);

/// Single-codepoint lowercase mapping (identity where the mapping would
/// expand to multiple codepoints).
std::uint32_t to_lower_codepoint(std::uint32_t cp);

/// Decodes one UTF-8 codepoint starting at `pos`. Advances `pos` past it.
/// Throws InputError naming the byte offset on malformed input (overlong
/// forms, surrogates, truncation, out-of-range).
std::uint32_t decode_utf8(std::string_view text, std::size_t& pos);

void append_utf8(std::string& out, std::uint32_t cp);

}  // namespace ordlex
