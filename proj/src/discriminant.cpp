#include "capgap/discriminant.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace capgap {

bool is_prime(std::int64_t n)
{
  if (n < 2)
    return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0)
      return false;
  }
  return true;
}

bool is_squarefree(std::int64_t n)
{
  if (n == 0)
    return false;
  if (n < 0)
    n = -n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0)
      return false;
  }
  return true;
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

} // namespace

bool is_fundamental_discriminant(std::int64_t d)
{
  if (d == 0 || d == 1)
    return false;
  if (mod(d, 4) == 1)
    return is_squarefree(d);
  if (mod(d, 4) != 0)
    return false;
  std::int64_t m = d / 4;
  return (mod(m, 4) == 2 || mod(m, 4) == 3) && is_squarefree(m);
}

bool is_prime_discriminant(std::int64_t d)
{
  if (d == -4 || d == 8 || d == -8)
    return true;
  std::int64_t p = d < 0 ? -d : d;
  if (p % 2 == 0 || !is_prime(p))
    return false;
  return mod(d, 4) == 1;
}

std::vector<std::int64_t> factor_into_prime_discriminants(std::int64_t d)
{
  if (!is_fundamental_discriminant(d))
    throw std::invalid_argument(std::to_string(d) + " is not a fundamental discriminant");

  std::vector<std::int64_t> factors;
  std::int64_t n = d < 0 ? -d : d;
  std::int64_t odd_product = 1;
  while (n % 2 == 0)
    n /= 2;
  for (std::int64_t p = 3; n > 1; p += 2) {
    if (p * p > n)
      p = n;
    if (n % p)
      continue;
    n /= p;
    std::int64_t star = (p % 4 == 1) ? p : -p;
    factors.push_back(star);
    odd_product *= star;
  }
  if (d != odd_product)
    factors.push_back(d / odd_product); // -4, 8 or -8
  std::sort(factors.begin(), factors.end());
  return factors;
}

std::size_t prime_discriminant_count(std::int64_t d)
{
  return factor_into_prime_discriminants(d).size();
}

std::vector<std::int64_t> fundamental_discriminants(std::int64_t lo, std::int64_t hi)
{
  std::vector<std::int64_t> out;
  for (std::int64_t d = lo; d <= hi; ++d) {
    if (is_fundamental_discriminant(d))
      out.push_back(d);
  }
  return out;
}

} // namespace capgap
