#pragma once

#include "schutz/word.hpp"

#include <string>
#include <string_view>

namespace schutz {

// Line format, one rule per line:  <symbol> -> <symbols>
// A symbol is a single non-whitespace code point or a backtick-quoted name.
// '#' starts a comment, blank lines are ignored. In endomorphism files a
// trailing ' marks a formal inverse: 0 -> 0 1 0' 1'
// Letters are numbered by first appearance of their left-hand side.

Substitution parse_substitution(std::string_view text);
FreeGroupEndo parse_endomorphism(std::string_view text);

/// True when the text uses the inverse marker outside comments and quotes.
bool looks_like_endomorphism(std::string_view text);

/// Symbols of `text` resolved against an existing alphabet.
Word parse_word(const Alphabet& alphabet, std::string_view text);

/// Round-trips through parse_substitution.
std::string format_substitution(const Substitution& s);
/// Round-trips through parse_endomorphism.
std::string format_endomorphism(const FreeGroupEndo& e);

std::string format_word(const Alphabet& alphabet, std::span<const Letter> w);
std::string format_group_word(const Alphabet& alphabet, const GroupWord& w);

}  // namespace schutz
