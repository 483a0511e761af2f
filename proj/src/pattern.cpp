#include "ttk/pattern.hpp"

#include <algorithm>

#include "ttk/errors.hpp"

namespace ttk {

namespace {

constexpr std::array<std::int8_t, 256> make_symbol_table() {
  std::array<std::int8_t, 256> table{};
  for (auto& t : table) t = kOtherSymbol;
  int next = 0;
  for (char c = 'a'; c <= 'z'; ++c) table[static_cast<unsigned char>(c)] = static_cast<std::int8_t>(next++);
  for (char c = '0'; c <= '9'; ++c) table[static_cast<unsigned char>(c)] = static_cast<std::int8_t>(next++);
  table['-'] = static_cast<std::int8_t>(next++);
  table['.'] = static_cast<std::int8_t>(next++);
  table['_'] = static_cast<std::int8_t>(next++);
  return table;
}

constexpr auto kSymbolTable = make_symbol_table();
constexpr std::string_view kAlphabet = "abcdefghijklmnopqrstuvwxyz0123456789-._";
static_assert(kAlphabet.size() == kAlphabetSize);

bool is_literal_char(char c) { return in_alphabet(c) && c != '.'; }

Quantifier quantifier_of(char c) {
  switch (c) {
    case '?': return Quantifier::ZeroOrOne;
    case '*': return Quantifier::ZeroOrMore;
    default: return Quantifier::OneOrMore;
  }
}

// Adds the epsilon closure of `state` to `set`. States are positions in the
// atom sequence; state n is accepting.
void close_over(const std::vector<Atom>& atoms, std::size_t state, std::vector<char>& set) {
  while (!set[state]) {
    set[state] = 1;
    if (state == atoms.size() || !atoms[state].optional()) break;
    ++state;
  }
}

}  // namespace

int symbol_of(char c) noexcept { return kSymbolTable[static_cast<unsigned char>(c)]; }

char char_of(int symbol) noexcept {
  return symbol >= 0 && symbol < kAlphabetSize ? kAlphabet[static_cast<std::size_t>(symbol)] : '\0';
}

Pattern parse_pattern(std::string_view text) {
  Pattern p;
  std::size_t i = 0;
  std::size_t end = text.size();
  if (i < end && text[i] == '^') {
    p.anchored_start = true;
    ++i;
  }
  // A trailing '$' is an anchor unless it is the whole remaining text.
  if (end > i && text[end - 1] == '$') {
    p.anchored_end = true;
    --end;
  }
  while (i < end) {
    const char c = text[i];
    Atom atom;
    if (c == '\\') {
      if (i + 1 >= end || text[i + 1] != '.') throw SyntaxError(i, "only '\\.' may be escaped");
      atom = Atom::literal('.');
      i += 2;
    } else if (c == '.') {
      atom = Atom::any_char();
      ++i;
    } else if (is_literal_char(c)) {
      atom = Atom::literal(c);
      ++i;
    } else if (c == '?' || c == '*' || c == '+') {
      throw SyntaxError(i, "dangling quantifier");
    } else {
      throw SyntaxError(i, std::string("character outside the alphabet: '") + c + "'");
    }
    if (i < end && (text[i] == '?' || text[i] == '*' || text[i] == '+')) {
      if (atom.any) throw SyntaxError(i, "quantifier after '.'");
      atom.quant = quantifier_of(text[i]);
      ++i;
    }
    p.atoms.push_back(atom);
  }
  if (p.atoms.empty()) throw SyntaxError(i, "empty pattern body");
  if (std::all_of(p.atoms.begin(), p.atoms.end(), [](const Atom& a) { return a.any; }))
    throw SyntaxError(0, "pattern consists only of wildcards");
  return p;
}

std::string render_pattern(const Pattern& p) {
  std::string out;
  out.reserve(p.atoms.size() * 2 + 2);
  if (p.anchored_start) out += '^';
  for (const Atom& a : p.atoms) {
    if (a.any) {
      out += '.';
    } else if (a.ch == '.') {
      out += "\\.";
    } else {
      out += a.ch;
    }
    switch (a.quant) {
      case Quantifier::One: break;
      case Quantifier::ZeroOrOne: out += '?'; break;
      case Quantifier::ZeroOrMore: out += '*'; break;
      case Quantifier::OneOrMore: out += '+'; break;
    }
  }
  if (p.anchored_end) out += '$';
  return out;
}

Pattern exact_pattern(std::string_view s) {
  Pattern p;
  p.anchored_start = true;
  p.anchored_end = true;
  p.atoms.reserve(s.size());
  for (char c : s) p.atoms.push_back(Atom::literal(c));
  return p;
}

bool match_one(const Pattern& p, std::string_view s) {
  const auto& atoms = p.atoms;
  const std::size_t accept = atoms.size();
  std::vector<char> current(accept + 1, 0);
  std::vector<char> next(accept + 1, 0);
  close_over(atoms, 0, current);

  for (std::size_t pos = 0;; ++pos) {
    if (current[accept] && (!p.anchored_end || pos == s.size())) return true;
    if (pos == s.size()) return false;
    std::fill(next.begin(), next.end(), 0);
    const char c = s[pos];
    for (std::size_t st = 0; st < accept; ++st) {
      if (!current[st] || !atoms[st].accepts(c)) continue;
      close_over(atoms, st + 1, next);
      if (atoms[st].repeats()) {
        // x+ and x* may consume again; re-entering st also admits x* skip.
        close_over(atoms, st, next);
      }
    }
    if (!p.anchored_start) close_over(atoms, 0, next);
    std::swap(current, next);
  }
}

}  // namespace ttk
