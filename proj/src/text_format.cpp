#include "schutz/text_format.hpp"

#include "schutz/error.hpp"

#include <cctype>
#include <optional>

namespace schutz {
namespace {

struct Token {
  std::string name;
  bool inverted = false;
};

struct Rule {
  std::size_t line = 0;
  std::string lhs;
  std::vector<Token> rhs;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::size_t code_point_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 0;
}

std::size_t count_code_points(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

class LineLexer {
 public:
  LineLexer(std::string_view line, std::size_t line_no) : s_(line), line_(line_no) {}

  void skip_space() {
    while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  bool consume_arrow() {
    skip_space();
    if (s_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return true;
    }
    return false;
  }
  bool peek_inverse_marker() const { return pos_ < s_.size() && s_[pos_] == '\''; }
  void advance() { ++pos_; }

  std::string symbol() {
    skip_space();
    if (pos_ >= s_.size()) fail("expected a symbol");
    if (s_[pos_] == '`') {
      std::size_t close = s_.find('`', pos_ + 1);
      if (close == std::string_view::npos) fail("unterminated backtick name");
      if (close == pos_ + 1) fail("empty backtick name");
      std::string name(s_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      return name;
    }
    if (s_[pos_] == '\'') fail("inverse marker without a preceding symbol");
    std::size_t len = code_point_length(static_cast<unsigned char>(s_[pos_]));
    if (len == 0 || pos_ + len > s_.size()) fail("invalid UTF-8 sequence");
    std::string name(s_.substr(pos_, len));
    pos_ += len;
    return name;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_) + ": " + what);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

// Drops a '#' comment, honouring backtick quotes.
std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '`') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::vector<Rule> parse_rules(std::string_view text, bool allow_inverse) {
  std::vector<Rule> rules;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = strip_comment(text.substr(start, end - start));
    start = end + 1;

    LineLexer lex(line, line_no);
    if (lex.at_end()) continue;
    Rule rule;
    rule.line = line_no;
    rule.lhs = lex.symbol();
    if (lex.peek_inverse_marker()) lex.fail("left-hand side cannot be inverted");
    if (!lex.consume_arrow()) lex.fail("expected '->'");
    while (!lex.at_end()) {
      Token tok{lex.symbol(), false};
      if (lex.peek_inverse_marker()) {
        if (!allow_inverse) lex.fail("inverse marker is not allowed in a substitution");
        lex.advance();
        tok.inverted = true;
      }
      rule.rhs.push_back(std::move(tok));
    }
    rules.push_back(std::move(rule));
  }
  if (rules.empty()) throw ParseError("no rules found");
  return rules;
}

Alphabet alphabet_of(const std::vector<Rule>& rules) {
  std::vector<std::string> names;
  for (const Rule& r : rules) {
    for (const auto& n : names)
      if (n == r.lhs) throw ParseError("line " + std::to_string(r.line) + ": duplicate left-hand side '" + r.lhs + "'");
    names.push_back(r.lhs);
  }
  return Alphabet(std::move(names));
}

Letter resolve(const Alphabet& alphabet, const Rule& r, const std::string& name) {
  auto a = alphabet.find(name);
  if (!a) throw ParseError("line " + std::to_string(r.line) + ": unknown symbol '" + name + "'");
  return *a;
}

std::string symbol_token(const std::string& name) {
  bool plain = count_code_points(name) == 1 && name != "#" && name != "`" && name != "'" && !is_space(name[0]);
  return plain ? name : "`" + name + "`";
}

}  // namespace

Substitution parse_substitution(std::string_view text) {
  std::vector<Rule> rules = parse_rules(text, false);
  Alphabet alphabet = alphabet_of(rules);
  std::vector<Word> images;
  for (const Rule& r : rules) {
    if (r.rhs.empty()) throw ParseError("line " + std::to_string(r.line) + ": empty image");
    Word w;
    for (const Token& t : r.rhs) w.push_back(resolve(alphabet, r, t.name));
    images.push_back(std::move(w));
  }
  return Substitution(std::move(alphabet), std::move(images));
}

FreeGroupEndo parse_endomorphism(std::string_view text) {
  std::vector<Rule> rules = parse_rules(text, true);
  Alphabet alphabet = alphabet_of(rules);
  std::vector<GroupWord> images;
  for (const Rule& r : rules) {
    std::vector<SignedLetter> raw;
    for (const Token& t : r.rhs) raw.push_back({resolve(alphabet, r, t.name), t.inverted ? -1 : 1});
    images.emplace_back(raw);
  }
  return FreeGroupEndo(std::move(alphabet), std::move(images));
}

bool looks_like_endomorphism(std::string_view text) {
  bool quoted = false, comment = false;
  for (char c : text) {
    if (c == '\n') {
      comment = false;
      quoted = false;
      continue;
    }
    if (comment) continue;
    if (c == '`') quoted = !quoted;
    else if (!quoted && c == '#') comment = true;
    else if (!quoted && c == '\'') return true;
  }
  return false;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  LineLexer lex(text, 1);
  Word w;
  while (!lex.at_end()) {
    std::string name = lex.symbol();
    auto a = alphabet.find(name);
    if (!a) throw ParseError("unknown symbol '" + name + "'");
    w.push_back(*a);
  }
  return w;
}

std::string format_word(const Alphabet& alphabet, std::span<const Letter> w) {
  std::string out;
  for (Letter a : w) out += symbol_token(alphabet.name(a));
  return out;
}

std::string format_group_word(const Alphabet& alphabet, const GroupWord& w) {
  std::string out;
  for (const SignedLetter& x : w.letters()) {
    if (!out.empty()) out += ' ';
    out += symbol_token(alphabet.name(x.letter));
    if (x.exponent < 0) out += '\'';
  }
  return out;
}

std::string format_substitution(const Substitution& s) {
  std::string out;
  for (Letter a = 0; a < s.size(); ++a)
    out += symbol_token(s.alphabet().name(a)) + " -> " + format_word(s.alphabet(), s.image(a)) + "\n";
  return out;
}

std::string format_endomorphism(const FreeGroupEndo& e) {
  std::string out;
  for (Letter a = 0; a < e.size(); ++a) {
    out += symbol_token(e.alphabet().name(a)) + " ->";
    if (!e.image(a).empty()) out += " " + format_group_word(e.alphabet(), e.image(a));
    out += "\n";
  }
  return out;
}

}  // namespace schutz
