#ifndef CAPGAP_PRESENTATION_HPP
#define CAPGAP_PRESENTATION_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace capgap {

/// One exponent run g_i^e of a word.
struct Letter
{
  std::size_t generator = 0;
  long long exponent = 0;

  friend bool operator==(Letter const &, Letter const &) = default;
};

/// A group word in exponent-run form, e.g. t*s*t*s^-3.
struct Word
{
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  /// Number of generator letters counted with multiplicity (|e| per run).
  std::size_t length() const;

  friend bool operator==(Word const &, Word const &) = default;
};

/// Free reduction: merges adjacent runs of the same generator and drops zero
/// exponents until no such pair is left.
Word reduce_word(Word const &w);

Word inverse(Word const &w);
/// Concatenation followed by free reduction.
Word operator*(Word const &lhs, Word const &rhs);
Word power(Word const &w, long long exponent);
Word generator_word(std::size_t generator, long long exponent = 1);

struct Presentation
{
  std::string name;
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t generator_index(std::string_view symbol) const;

  friend bool operator==(Presentation const &, Presentation const &) = default;
};

class ParseError : public std::runtime_error
{
public:
  ParseError(std::string const &message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses exactly one `group NAME gens ... rels ...` stanza. Relations
/// `u = v` become the relator u*v^-1.
Presentation parse_presentation(std::string_view text);

/// Parses every stanza in `text`, in order.
std::vector<Presentation> parse_presentations(std::string_view text);

/// Renders a word with the presentation's generator names ("1" if empty).
std::string render_word(Presentation const &p, Word const &w);

/// Renders a stanza that parse_presentation() maps back to `p`.
std::string render_presentation(Presentation const &p);

} // namespace capgap

#endif // CAPGAP_PRESENTATION_HPP
