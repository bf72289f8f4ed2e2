#ifndef CAPGAP_UNITS_HPP
#define CAPGAP_UNITS_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace capgap {

using BigInt = boost::multiprecision::cpp_int;

enum class UnitConvention
{
  integral,     // x^2 - m y^2 = +-1, unit x + y sqrt m
  half_integral // x^2 - m y^2 = +-4, unit (x + y sqrt m)/2; used when m = 1 mod 4
};

struct UnitResult
{
  std::int64_t radicand = 0;
  UnitConvention convention = UnitConvention::integral;
  BigInt x;
  BigInt y;
  int norm = 0; // +1 or -1

  /// x^2 - m y^2 equals norm (integral) or 4 * norm (half-integral).
  bool satisfies_pell() const;
  /// Human readable, e.g. "8 + sqrt(65)" or "(1 + sqrt(5))/2".
  std::string to_string() const;
};

char const *to_string(UnitConvention c);

/// Fundamental unit of Q(sqrt m) from the continued fraction of sqrt m, or of
/// (1 + sqrt m)/2 when m = 1 mod 4. Throws std::invalid_argument unless m > 1 is squarefree.
UnitResult fundamental_unit_norm(std::int64_t m);

} // namespace capgap

#endif // CAPGAP_UNITS_HPP
