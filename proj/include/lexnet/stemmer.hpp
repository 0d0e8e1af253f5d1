#ifndef LEXNET_STEMMER_HPP
#define LEXNET_STEMMER_HPP

#include <string>
#include <string_view>

namespace lexnet {

enum class StemmerMode {
    snowball_russian,  // Porter-family Russian suffix stripper
    identity,          // pass-through, for tests and non-Russian corpora
};

/// Reduces a case-folded token to its root form by stripping inflectional
/// and derivational suffixes until the word stops changing. Tokens
/// containing anything outside the lowercase Cyrillic block are returned
/// unchanged. Idempotent.
std::string stem(std::string_view token, StemmerMode mode = StemmerMode::snowball_russian);

}  // namespace lexnet

#endif
