#include "capgap/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace capgap {

std::size_t Word::length() const
{
  std::size_t n = 0;
  for (Letter const &l : letters)
    n += static_cast<std::size_t>(l.exponent < 0 ? -l.exponent : l.exponent);
  return n;
}

Word reduce_word(Word const &w)
{
  // stack-based: each pushed run is merged with the top when generators match
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (Letter const &l : w.letters) {
    if (l.exponent == 0)
      continue;
    if (!out.empty() && out.back().generator == l.generator) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0)
        out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word{std::move(out)};
}

Word inverse(Word const &w)
{
  Word result;
  result.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    result.letters.push_back({it->generator, -it->exponent});
  return reduce_word(result);
}

Word operator*(Word const &lhs, Word const &rhs)
{
  Word joined = lhs;
  joined.letters.insert(joined.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return reduce_word(joined);
}

Word power(Word const &w, long long exponent)
{
  Word base = exponent < 0 ? inverse(w) : reduce_word(w);
  Word result;
  for (long long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i)
    result = result * base;
  return result;
}

Word generator_word(std::size_t generator, long long exponent)
{
  return reduce_word(Word{{Letter{generator, exponent}}});
}

std::size_t Presentation::generator_index(std::string_view symbol) const
{
  auto it = std::find(generators.begin(), generators.end(), symbol);
  if (it == generators.end())
    throw std::out_of_range("unknown generator " + std::string(symbol));
  return static_cast<std::size_t>(it - generators.begin());
}

namespace {

std::string located(std::string const &message, std::size_t line, std::size_t column)
{
  std::ostringstream os;
  os << "line " << line << ", column " << column << ": " << message;
  return os.str();
}

} // namespace

ParseError::ParseError(std::string const &message, std::size_t line, std::size_t column)
  : std::runtime_error(located(message, line, column)), line_(line), column_(column)
{}

namespace {

enum class TokenKind { identifier, number, symbol, end };

struct Token
{
  TokenKind kind = TokenKind::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view text)
{
  std::vector<Token> tokens;
  std::size_t line = 1, column = 1;
  std::size_t i = 0;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };

  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n')
        advance(1);
      continue;
    }

    Token tok;
    tok.line = line;
    tok.column = column;
    std::size_t j = i;
    if (std::isalpha(c) || c == '_') {
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      tok.kind = TokenKind::identifier;
    } else if (std::isdigit(c)) {
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      tok.kind = TokenKind::number;
    } else if (c == ',' || c == '*' || c == '^' || c == '=' || c == '-' || c == '+') {
      j = i + 1;
      tok.kind = TokenKind::symbol;
    } else {
      throw ParseError(std::string("unexpected character '") + text[i] + "'", line, column);
    }
    tok.text = std::string(text.substr(i, j - i));
    tokens.push_back(std::move(tok));
    advance(j - i);
  }

  Token end;
  end.line = line;
  end.column = column;
  tokens.push_back(end);
  return tokens;
}

bool is_keyword(std::string_view s)
{
  return s == "group" || s == "gens" || s == "rels";
}

class Parser
{
public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool at_end() const { return peek().kind == TokenKind::end; }

  Presentation stanza()
  {
    expect_keyword("group");
    Presentation p;
    Token const &name = next();
    if (name.kind != TokenKind::identifier && name.kind != TokenKind::number)
      fail("expected group name", name);
    p.name = name.text;

    expect_keyword("gens");
    do {
      Token const &g = next();
      if (g.kind != TokenKind::identifier || is_keyword(g.text))
        fail(p.generators.empty() ? "empty generator list" : "expected generator name", g);
      if (std::find(p.generators.begin(), p.generators.end(), g.text) != p.generators.end())
        fail("duplicate generator " + g.text, g);
      p.generators.push_back(g.text);
    } while (accept_symbol(","));

    expect_keyword("rels");
    do {
      p.relators.push_back(relation(p));
    } while (accept_symbol(","));

    if (!at_end() && !(peek().kind == TokenKind::identifier && peek().text == "group"))
      fail("unexpected token '" + peek().text + "'", peek());
    return p;
  }

private:
  Token const &peek() const { return tokens_[pos_]; }

  Token const &next()
  {
    Token const &t = tokens_[pos_];
    if (t.kind != TokenKind::end)
      ++pos_;
    return t;
  }

  [[noreturn]] void fail(std::string const &message, Token const &at) const
  {
    throw ParseError(at.kind == TokenKind::end ? message + " (at end of input)" : message,
                     at.line, at.column);
  }

  void expect_keyword(std::string_view kw)
  {
    Token const &t = next();
    if (t.kind != TokenKind::identifier || t.text != kw)
      fail("expected '" + std::string(kw) + "'", t);
  }

  bool accept_symbol(std::string_view s)
  {
    if (peek().kind == TokenKind::symbol && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }

  Word relation(Presentation const &p)
  {
    Word lhs = word(p);
    if (accept_symbol("="))
      return lhs * inverse(word(p));
    return lhs;
  }

  Word word(Presentation const &p)
  {
    if (peek().kind == TokenKind::number) {
      Token const &t = next();
      if (t.text != "1")
        fail("expected generator or '1'", t);
      return {};
    }
    Word w;
    do {
      Token const &g = next();
      if (g.kind != TokenKind::identifier || is_keyword(g.text))
        fail("expected generator name", g);
      auto it = std::find(p.generators.begin(), p.generators.end(), g.text);
      if (it == p.generators.end())
        fail("unknown generator " + g.text, g);
      long long exponent = 1;
      if (accept_symbol("^"))
        exponent = signed_int();
      w.letters.push_back({static_cast<std::size_t>(it - p.generators.begin()), exponent});
    } while (accept_symbol("*"));
    return reduce_word(w);
  }

  long long signed_int()
  {
    bool negative = false;
    if (accept_symbol("-"))
      negative = true;
    else
      accept_symbol("+");
    Token const &t = next();
    if (t.kind != TokenKind::number)
      fail("expected integer exponent", t);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc())
      fail("exponent out of range", t);
    return negative ? -value : value;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

} // namespace

Presentation parse_presentation(std::string_view text)
{
  Parser parser(tokenize(text));
  Presentation p = parser.stanza();
  if (!parser.at_end())
    throw ParseError("expected a single presentation", 0, 0);
  return p;
}

std::vector<Presentation> parse_presentations(std::string_view text)
{
  Parser parser(tokenize(text));
  std::vector<Presentation> result;
  while (!parser.at_end())
    result.push_back(parser.stanza());
  return result;
}

std::string render_word(Presentation const &p, Word const &w)
{
  if (w.empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i)
      out += '*';
    out += p.generators.at(w.letters[i].generator);
    if (w.letters[i].exponent != 1)
      out += '^' + std::to_string(w.letters[i].exponent);
  }
  return out;
}

std::string render_presentation(Presentation const &p)
{
  std::string out = "group " + p.name + " gens ";
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    out += (i ? "," : "") + p.generators[i];
  out += " rels ";
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    out += (i ? ", " : "") + render_word(p, p.relators[i]);
  return out + '\n';
}

} // namespace capgap
