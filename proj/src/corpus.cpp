#include "ordlex/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "ordlex/errors.hpp"
#include "ordlex/unicode.hpp"

namespace ordlex {

namespace {

bool is_word_cp(std::uint32_t cp) {
    return is_unicode_letter(cp) || is_unicode_digit(cp);
}

// Apostrophes and hyphens are token characters only between two word
// characters. Typographic variants are normalized so word types compare
// equal across editions.
bool is_joiner_cp(std::uint32_t cp, std::uint32_t& normalized) {
    switch (cp) {
        case 0x27:    // '
        case 0x2019:  // right single quotation mark
            normalized = 0x27;
            return true;
        case 0x2D:    // -
        case 0x2010:  // hyphen
        case 0x2011:  // non-breaking hyphen
            normalized = 0x2D;
            return true;
        default:
            return false;
    }
}

bool is_space_cp(std::uint32_t cp) {
    switch (cp) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D:
        case 0x20: case 0x85: case 0xA0: case 0x1680:
        case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

struct Span {
    std::size_t begin_byte = 0;
    std::size_t end_byte = 0;
};

struct DecodedChar {
    std::uint32_t cp;
    std::uint32_t offset;
};

std::vector<DecodedChar> decode_all(std::string_view text) {
    std::vector<DecodedChar> out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t at = pos;
        const std::uint32_t cp = decode_utf8(text, pos);
        out.push_back({cp, static_cast<std::uint32_t>(at)});
    }
    return out;
}

std::vector<std::string> tokenize_spans(std::string_view raw_text,
                                        const TokenizeOptions& options,
                                        std::vector<Span>* spans) {
    const std::vector<DecodedChar> chars = decode_all(raw_text);
    std::vector<std::string> tokens;
    std::string current;
    Span span;
    bool has_letter = false;
    bool has_digit = false;

    auto flush = [&](std::size_t end_byte) {
        if (current.empty()) return;
        span.end_byte = end_byte;
        const bool numeral = has_digit && !has_letter;
        if (!(options.drop_numerals && numeral)) {
            tokens.push_back(std::move(current));
            if (spans) spans->push_back(span);
        }
        current.clear();
        has_letter = false;
        has_digit = false;
    };

    for (std::size_t i = 0; i < chars.size(); ++i) {
        const std::uint32_t cp = chars[i].cp;
        const std::size_t next_byte =
            i + 1 < chars.size() ? chars[i + 1].offset : raw_text.size();
        std::uint32_t joiner;
        if (is_word_cp(cp)) {
            if (current.empty()) span.begin_byte = chars[i].offset;
            if (is_unicode_letter(cp)) has_letter = true;
            else has_digit = true;
            append_utf8(current, to_lower_codepoint(cp));
        } else if (is_joiner_cp(cp, joiner) && !current.empty() &&
                   i + 1 < chars.size() && is_word_cp(chars[i + 1].cp)) {
            append_utf8(current, joiner);
        } else {
            flush(chars[i].offset);
        }
        if (i + 1 == chars.size()) flush(next_byte);
    }
    return tokens;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view raw_text,
                                  const TokenizeOptions& options) {
    return tokenize_spans(raw_text, options, nullptr);
}

std::vector<TokenRange> segment_sentences(std::string_view raw_text,
                                          const std::vector<std::string>& tokens,
                                          const TokenizeOptions& options) {
    std::vector<Span> spans;
    const std::vector<std::string> again = tokenize_spans(raw_text, options, &spans);
    if (again != tokens) {
        throw ValidationError("segment_sentences: tokens were not produced from this text");
    }

    const std::size_t w = tokens.size();

    // Token indices after which a sentence ends.
    std::vector<std::size_t> cuts;
    std::size_t tok = 0;  // tokens fully before the scan position
    std::size_t pos = 0;
    while (pos < raw_text.size()) {
        const std::size_t at = pos;
        const std::uint32_t cp = decode_utf8(raw_text, pos);
        while (tok < w && spans[tok].end_byte <= at) ++tok;
        if (cp == '.' || cp == '!' || cp == '?') {
            std::size_t look = pos;
            const bool at_end = look >= raw_text.size();
            if (at_end || is_space_cp(decode_utf8(raw_text, look))) {
                if (tok > 0 && (cuts.empty() || cuts.back() != tok)) cuts.push_back(tok);
            }
        }
    }

    std::vector<TokenRange> bounds;
    std::size_t prev = 0;
    for (std::size_t cut : cuts) {
        if (cut > prev) {
            bounds.push_back({prev, cut});
            prev = cut;
        }
    }
    if (prev < w) bounds.push_back({prev, w});
    return bounds;
}

Document make_document(std::string_view raw_text, std::string source_id,
                       const TokenizeOptions& options) {
    Document doc;
    doc.tokens = tokenize(raw_text, options);
    doc.sentence_bounds = segment_sentences(raw_text, doc.tokens, options);
    doc.source_id = std::move(source_id);
    return doc;
}

FrequencyTable count_frequencies(const Document& doc) {
    if (doc.tokens.empty()) {
        throw ValidationError("count_frequencies: empty document '" + doc.source_id + "'");
    }
    FrequencyTable table;
    table.counts.reserve(doc.tokens.size() / 2);
    for (const std::string& t : doc.tokens) ++table.counts[t];
    table.total = doc.tokens.size();
    return table;
}

ExternalFrequencyList load_frequency_list(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open frequency list: " + path);

    ExternalFrequencyList list;
    list.provenance = path;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0) {
            throw InputError(path + ":" + std::to_string(lineno) +
                             ": expected word<TAB>count");
        }
        std::string word = line.substr(0, tab);
        const std::string_view count_text = std::string_view(line).substr(tab + 1);
        std::uint64_t count = 0;
        const auto [ptr, ec] = std::from_chars(
            count_text.data(), count_text.data() + count_text.size(), count);
        if (ec != std::errc() || ptr != count_text.data() + count_text.size() || count == 0) {
            throw InputError(path + ":" + std::to_string(lineno) + ": bad count '" +
                             std::string(count_text) + "'");
        }
        if (!seen.insert(word).second) {
            throw InputError(path + ":" + std::to_string(lineno) + ": duplicate word '" +
                             word + "'");
        }
        list.entries.emplace_back(std::move(word), count);
    }
    std::stable_sort(list.entries.begin(), list.entries.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return list;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw InputError("error reading input file: " + path);
    return buffer.str();
}

}  // namespace ordlex
