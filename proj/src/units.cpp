#include "capgap/units.hpp"

#include <stdexcept>

#include "capgap/discriminant.hpp"

namespace capgap {

namespace {

std::int64_t isqrt(std::int64_t n)
{
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= n)
    ++r;
  return r;
}

} // namespace

bool UnitResult::satisfies_pell() const
{
  BigInt lhs = x * x - BigInt(radicand) * y * y;
  BigInt rhs = convention == UnitConvention::half_integral ? BigInt(4 * norm) : BigInt(norm);
  return lhs == rhs;
}

std::string UnitResult::to_string() const
{
  bool half = convention == UnitConvention::half_integral;
  BigInt a = x, b = y;
  if (half && a % 2 == 0 && b % 2 == 0) {
    a /= 2;
    b /= 2;
    half = false;
  }
  std::string root = "sqrt(" + std::to_string(radicand) + ")";
  std::string coef = b == 1 ? root : b.str() + "*" + root;
  std::string s = a.str() + " + " + coef;
  return half ? "(" + s + ")/2" : s;
}

char const *to_string(UnitConvention c)
{
  return c == UnitConvention::half_integral ? "half-integral" : "integral";
}

UnitResult fundamental_unit_norm(std::int64_t m)
{
  if (m <= 1 || !is_squarefree(m))
    throw std::invalid_argument("radicand must be a squarefree integer > 1");

  bool const half = m % 4 == 1;
  std::int64_t const s = isqrt(m);
  // continued fraction of (P + sqrt m)/Q, with Q | m - P^2 throughout
  std::int64_t P = half ? 1 : 0;
  std::int64_t Q = half ? 2 : 1;
  BigInt p_prev = 0, p_cur = 1, q_prev = 1, q_cur = 0;

  UnitResult out;
  out.radicand = m;
  out.convention = half ? UnitConvention::half_integral : UnitConvention::integral;

  for (long step = 0; step < 100'000'000; ++step) {
    std::int64_t a = (P + s) / Q;
    BigInt p_next = a * p_cur + p_prev;
    BigInt q_next = a * q_cur + q_prev;
    p_prev = p_cur;
    p_cur = p_next;
    q_prev = q_cur;
    q_cur = q_next;

    BigInt n;
    if (half)
      n = p_cur * p_cur - p_cur * q_cur - q_cur * q_cur * ((m - 1) / 4);
    else
      n = p_cur * p_cur - BigInt(m) * q_cur * q_cur;
    if (n == 1 || n == -1) {
      out.norm = n == 1 ? 1 : -1;
      out.x = half ? BigInt(2 * p_cur - q_cur) : p_cur;
      out.y = q_cur;
      return out;
    }

    P = a * Q - P;
    Q = (m - P * P) / Q;
  }
  throw std::runtime_error("continued fraction did not reach a unit");
}

} // namespace capgap
