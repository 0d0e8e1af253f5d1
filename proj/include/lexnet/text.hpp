#ifndef LEXNET_TEXT_HPP
#define LEXNET_TEXT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lexnet {

// Minimal UTF-8 handling for the corpus languages (Russian plus Latin-script
// loan words). Not a general Unicode library.

/// Decodes one UTF-8 code point starting at s[i]; advances i. Invalid bytes
/// decode as U+FFFD and advance by one byte.
char32_t decode_utf8(std::string_view s, size_t& i);

/// Appends the UTF-8 encoding of cp to out.
void append_utf8(std::string& out, char32_t cp);

/// True for characters that may appear inside a token: ASCII alphanumerics,
/// Latin-1 letters and the Cyrillic block.
bool is_word_char(char32_t cp);

/// Lower-cases ASCII, Latin-1 and Cyrillic code points; others unchanged.
char32_t fold_case(char32_t cp);

/// Case-folds a whole UTF-8 string.
std::string fold_case_utf8(std::string_view s);

/// Splits text into maximal runs of word characters, case-folded, in order.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace lexnet

#endif
