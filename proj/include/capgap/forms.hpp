#ifndef CAPGAP_FORMS_HPP
#define CAPGAP_FORMS_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace capgap {

/// The binary quadratic form a x^2 + b xy + c y^2.
struct QuadraticForm
{
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  bool is_primitive() const;
  /// Positive definite and |b| <= a <= c, with b >= 0 if |b| = a or a = c.
  bool is_reduced() const;
  /// Order at most 2 in the class group: b = 0, a = b or a = c (for reduced forms).
  bool is_ambiguous() const;

  std::int64_t evaluate(std::int64_t x, std::int64_t y) const { return a * x * x + b * x * y + c * y * y; }

  friend auto operator<=>(QuadraticForm const &, QuadraticForm const &) = default;
};

std::ostream &operator<<(std::ostream &os, QuadraticForm const &f);

QuadraticForm principal_form(std::int64_t d);

/// The reduced form properly equivalent to a positive definite form.
QuadraticForm reduce(QuadraticForm f);

/// One reduced form per class of primitive forms of discriminant d < 0,
/// sorted by (a, b). Throws std::invalid_argument unless d < 0 is fundamental.
std::vector<QuadraticForm> reduced_forms(std::int64_t d);

/// Dirichlet composition, not reduced. Throws on a discriminant mismatch.
QuadraticForm compose_unreduced(QuadraticForm const &f, QuadraticForm const &g);

/// Reduced representative of the composed class.
QuadraticForm compose_forms(QuadraticForm const &f, QuadraticForm const &g);

/// Reduced representative of the inverse class, (a, -b, c).
QuadraticForm inverse_form(QuadraticForm const &f);

struct ClassGroupData
{
  std::int64_t discriminant = 0;
  std::vector<QuadraticForm> forms;              // reduced, forms[0] principal
  std::vector<std::vector<std::size_t>> table;   // table[i][j] = index of forms[i] * forms[j]
  std::vector<std::uint64_t> invariants;         // d_1 | d_2 | ...
  std::vector<std::size_t> two_torsion;          // indices of classes with x^2 = 1
  std::size_t two_rank = 0;

  std::size_t class_number() const { return forms.size(); }
  std::size_t index_of(QuadraticForm const &reduced) const;
};

/// Class group of discriminant d < 0 from the full composition table.
/// The 2-rank is cross-checked against genus theory (t - 1).
ClassGroupData class_group_structure(std::int64_t d);

} // namespace capgap

#endif // CAPGAP_FORMS_HPP
