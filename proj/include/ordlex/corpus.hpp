#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ordlex {

/// Half-open token-index range [begin, end).
struct TokenRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    bool operator==(const TokenRange&) const = default;
    std::size_t size() const { return end - begin; }
};

/// One text: normalized tokens plus a sentence partition of [0, W).
struct Document {
    std::vector<std::string> tokens;
    std::vector<TokenRange> sentence_bounds;
    std::string source_id;

    std::size_t word_count() const { return tokens.size(); }
};

struct FrequencyTable {
    std::unordered_map<std::string, std::uint64_t> counts;
    std::uint64_t total = 0;
};

/// Word list ordered by descending count, e.g. a large reference corpus
/// against which many texts are ranked with a single shared ranking.
struct ExternalFrequencyList {
    std::vector<std::pair<std::string, std::uint64_t>> entries;
    std::string provenance;
};

struct TokenizeOptions {
    /// Drop tokens containing digits but no letters.
    bool drop_numerals = false;
};

/// Splits UTF-8 text into lowercased word tokens. A token is a maximal run
/// of Unicode letters/digits where apostrophes and hyphens are kept only
/// between two such characters. Everything else separates tokens.
std::vector<std::string> tokenize(std::string_view raw_text,
                                  const TokenizeOptions& options = {});

/// Tokenizes and segments in one pass so sentence boundaries can be
/// located against byte offsets of the original text.
Document make_document(std::string_view raw_text, std::string source_id,
                       const TokenizeOptions& options = {});

/// Sentence partition of the token sequence: a sentence ends after `.`,
/// `!` or `?` followed by whitespace or end of text; a trailing
/// unterminated run forms the last sentence; empty sentences are dropped.
std::vector<TokenRange> segment_sentences(std::string_view raw_text,
                                          const std::vector<std::string>& tokens,
                                          const TokenizeOptions& options = {});

/// Occurrence counts per word type. Throws ValidationError on an empty
/// document.
FrequencyTable count_frequencies(const Document& doc);

/// Reads a `word<TAB>count` file (optional `#` comment lines), validating
/// uniqueness and sorting to non-increasing counts (stable) if needed.
ExternalFrequencyList load_frequency_list(const std::string& path);

/// Reads a whole file as UTF-8 text. Throws InputError if unreadable.
std::string read_text_file(const std::string& path);

}  // namespace ordlex
