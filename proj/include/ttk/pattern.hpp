#pragma once

// Restricted regular expressions used as indicators: a sequence of literal
// or wildcard atoms, each with an optional repetition suffix, optionally
// anchored at either end. Disjunction happens at the model level.
//
// Canonical text grammar:
//   pattern := ['^'] atom+ ['$']
//   atom    := (literal | '\.' | '.') quant?
//   quant   := '?' | '*' | '+'        (not allowed after '.')
//   literal := [a-z0-9_-]

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ttk {

// Event alphabet: a-z, 0-9, '-', '.', '_'.
inline constexpr int kAlphabetSize = 39;
// Symbol used for bytes outside the alphabet; matches no atom.
inline constexpr int kOtherSymbol = kAlphabetSize;
inline constexpr int kSymbolCount = kAlphabetSize + 1;

constexpr bool in_alphabet(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '.' || c == '_';
}

// Dense index in [0, kSymbolCount) for any byte.
int symbol_of(char c) noexcept;
// Inverse of symbol_of for alphabet symbols.
char char_of(int symbol) noexcept;

enum class Quantifier : std::uint8_t { One, ZeroOrOne, ZeroOrMore, OneOrMore };

struct Atom {
  bool any = false;  // AnyChar when set, otherwise Literal(ch)
  char ch = 0;
  Quantifier quant = Quantifier::One;

  static constexpr Atom literal(char c, Quantifier q = Quantifier::One) { return Atom{false, c, q}; }
  static constexpr Atom any_char() { return Atom{true, 0, Quantifier::One}; }

  constexpr bool accepts(char c) const noexcept { return in_alphabet(c) && (any || c == ch); }
  constexpr bool optional() const noexcept {
    return quant == Quantifier::ZeroOrOne || quant == Quantifier::ZeroOrMore;
  }
  constexpr bool repeats() const noexcept {
    return quant == Quantifier::ZeroOrMore || quant == Quantifier::OneOrMore;
  }

  friend bool operator==(const Atom&, const Atom&) = default;
};

struct Pattern {
  bool anchored_start = false;
  bool anchored_end = false;
  std::vector<Atom> atoms;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

// Throws SyntaxError for malformed text.
Pattern parse_pattern(std::string_view text);

std::string render_pattern(const Pattern& p);

// Anchored exact-match pattern "^s$" for an alphabet string.
Pattern exact_pattern(std::string_view s);

// True iff some substring of s is generated by p (whole string / prefix /
// suffix when anchors are set).
bool match_one(const Pattern& p, std::string_view s);

}  // namespace ttk
