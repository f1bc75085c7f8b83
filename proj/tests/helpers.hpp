#pragma once

#include "schutz/text_format.hpp"
#include "schutz/word.hpp"

#include <string_view>

namespace helpers {

/// Word from decimal digits, "0110" ↦ {0,1,1,0}.
inline schutz::Word W(std::string_view digits) {
  schutz::Word w;
  for (char c : digits) w.push_back(static_cast<schutz::Letter>(c - '0'));
  return w;
}

/// Group word from digits with ' marking an inverse, "010'1'".
inline schutz::GroupWord G(std::string_view text) {
  std::vector<schutz::SignedLetter> raw;
  for (char c : text) {
    if (c == '\'') raw.back().exponent = -raw.back().exponent;
    else raw.push_back({static_cast<schutz::Letter>(c - '0'), 1});
  }
  return schutz::GroupWord(raw);
}

inline const char* morse_text() { return "0 -> 01\n1 -> 10\n"; }
inline const char* negative_text() { return "0 -> 120\n1 -> 121\n2 -> 200\n"; }
inline const char* weaktest_text() { return "0 -> 1001\n1 -> 000\n"; }
inline const char* tedious_text() { return "0 -> 12\n1 -> 22\n2 -> 33\n3 -> 00\n"; }
inline const char* cyclo_text() { return "0 -> 010\n1 -> 21\n2 -> 102\n"; }
inline const char* psi_text() { return "0 -> 0 1 0' 1'\n1 -> 0\n"; }

/// 0 ↦ 0^k 1, 1 ↦ 0^l 1.
inline schutz::Substitution almeida(unsigned k, unsigned l) {
  schutz::Word a(k, 0), b(l, 0);
  a.push_back(1);
  b.push_back(1);
  return schutz::Substitution({a, b});
}

}  // namespace helpers
