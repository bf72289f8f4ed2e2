#ifndef CAPGAP_SELMER_HPP
#define CAPGAP_SELMER_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "capgap/forms.hpp"

namespace capgap {

/// u + v*w in the ring of integers of Q(sqrt d), where w = (d + sqrt d)/2.
struct QuadraticInteger
{
  std::int64_t u = 0;
  std::int64_t v = 0;

  friend bool operator==(QuadraticInteger const &, QuadraticInteger const &) = default;
};

/// Arithmetic in the maximal order of discriminant d, exact in 64 bits for
/// the desk-scale discriminants used here.
class QuadraticRing
{
public:
  explicit QuadraticRing(std::int64_t d);

  std::int64_t discriminant() const { return d_; }

  QuadraticInteger multiply(QuadraticInteger const &x, QuadraticInteger const &y) const;
  QuadraticInteger negate(QuadraticInteger const &x) const { return {-x.u, -x.v}; }
  std::int64_t norm(QuadraticInteger const &x) const;

  /// (X + Y sqrt d)/2; requires X = Y d mod 2.
  QuadraticInteger from_half(std::int64_t X, std::int64_t Y) const;
  /// Inverse of from_half: returns (X, Y).
  std::pair<std::int64_t, std::int64_t> to_half(QuadraticInteger const &x) const;

  bool divisible_by(QuadraticInteger const &x, std::int64_t n) const { return x.u % n == 0 && x.v % n == 0; }

  /// Some xi with x = xi^2 mod 4, searched over all 16 residues of O/4O.
  std::optional<QuadraticInteger> square_root_mod4(QuadraticInteger const &x) const;

  /// Units of O (d < 0 only): 2, 4 or 6 of them.
  std::vector<QuadraticInteger> units() const;

private:
  std::int64_t d_;
  std::int64_t w_norm_; // w * conj(w) = (d^2 - d)/4
};

std::ostream &operator<<(std::ostream &os, QuadraticInteger const &x);

/// (E_4^+ : E^2) for d < 0: units congruent to a square mod 4, modulo squares of units.
/// Cross-checked against the criterion "2 iff -4 divides d" away from d = -3, -4.
int e4_plus_index(std::int64_t d);

struct ClassCertificate
{
  QuadraticForm reduced;          // the class
  std::int64_t prime = 0;         // odd prime norm of the chosen ideal a, coprime to d
  QuadraticForm ideal_form;       // (p, B, C): a = [p, (-B + sqrt d)/2]
  QuadraticForm square_form;      // (p^2, B', C'): a^2 = [p^2, (-B' + sqrt d)/2]
  QuadraticInteger alpha;         // generator of a^2, the unit multiple that passes if any does
  std::optional<QuadraticInteger> root; // xi with alpha = xi^2 mod 4
  bool in_cl_star() const { return root.has_value(); }
};

struct SelmerData
{
  std::int64_t discriminant = 0;
  int e4_index = 1;
  std::size_t two_torsion_order = 0;
  std::vector<ClassCertificate> certificates; // one per class of order dividing 2
  std::vector<QuadraticForm> cl_star;         // reduced forms of the passing classes

  /// #Cl* * (E_4^+ : E^2) = #Cl[2].
  bool exact_sequence_holds() const { return cl_star.size() * e4_index == two_torsion_order; }
};

/// Certificates for every 2-torsion class of discriminant d < 0.
/// Throws std::runtime_error if a generator search fails.
SelmerData cl_star_subgroup(std::int64_t d);
SelmerData cl_star_subgroup(ClassGroupData const &cl);

} // namespace capgap

#endif // CAPGAP_SELMER_HPP
