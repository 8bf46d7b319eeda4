#ifndef FRDS_UNICODE_HPP
#define FRDS_UNICODE_HPP

#include <string>
#include <string_view>

namespace frds {

// Minimal UTF-8 layer. All token offsets in this toolkit count code points,
// not bytes. Invalid byte sequences decode to U+FFFD one byte at a time so
// that degraded corpus files still tokenize deterministically.
std::u32string decode_utf8(std::string_view bytes);
std::string encode_utf8(std::u32string_view chars);
std::string encode_utf8(char32_t c);

// Character classes used by the tokenizer and the clause splitter.
bool is_newline_char(char32_t c);  // '\n' only
bool is_space_char(char32_t c);    // horizontal whitespace, NBSP variants
bool is_punct_char(char32_t c);    // the fixed punctuation inventory
bool is_apostrophe_char(char32_t c);

// True when every code point of the (non-empty) string is punctuation.
bool is_punct_text(std::string_view text);

}  // namespace frds

#endif
