#include "capgap/forms.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>

#include "capgap/discriminant.hpp"
#include "capgap/group.hpp"

namespace capgap {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// returns (g, x, y) with a x + b y = g = gcd(a, b) >= 0
std::tuple<std::int64_t, std::int64_t, std::int64_t> extended_gcd(std::int64_t a, std::int64_t b)
{
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
    std::tie(old_t, t) = std::pair{t, old_t - q * t};
  }
  if (old_r < 0)
    return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

void require_imaginary_fundamental(std::int64_t d)
{
  if (d >= 0)
    throw std::invalid_argument("class groups are only computed for d < 0");
  if (!is_fundamental_discriminant(d))
    throw std::invalid_argument(std::to_string(d) + " is not a fundamental discriminant");
}

} // namespace

bool QuadraticForm::is_primitive() const
{
  return std::gcd(std::gcd(a, b), c) == 1;
}

bool QuadraticForm::is_reduced() const
{
  if (a <= 0 || discriminant() >= 0)
    return false;
  std::int64_t abs_b = b < 0 ? -b : b;
  if (abs_b > a || a > c)
    return false;
  if ((abs_b == a || a == c) && b < 0)
    return false;
  return true;
}

bool QuadraticForm::is_ambiguous() const
{
  return b == 0 || a == b || a == c;
}

std::ostream &operator<<(std::ostream &os, QuadraticForm const &f)
{
  return os << '(' << f.a << ',' << f.b << ',' << f.c << ')';
}

QuadraticForm principal_form(std::int64_t d)
{
  std::int64_t b = mod(d, 2);
  return {1, b, (b * b - d) / 4};
}

QuadraticForm reduce(QuadraticForm f)
{
  std::int64_t const d = f.discriminant();
  if (d >= 0 || f.a <= 0)
    throw std::invalid_argument("reduce() expects a positive definite form");

  auto normalize = [&] {
    // bring b into (-a, a]
    std::int64_t r = floor_div(f.a - f.b, 2 * f.a);
    f.b += 2 * f.a * r;
    f.c = (f.b * f.b - d) / (4 * f.a);
  };

  normalize();
  while (f.a > f.c) {
    f = {f.c, -f.b, f.a};
    normalize();
  }
  if (f.a == f.c && f.b < 0)
    f.b = -f.b;
  return f;
}

std::vector<QuadraticForm> reduced_forms(std::int64_t d)
{
  require_imaginary_fundamental(d);
  std::vector<QuadraticForm> forms;
  // a <= sqrt(|d| / 3) for reduced forms
  for (std::int64_t a = 1; 3 * a * a <= -d; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (mod(b - d, 2) != 0)
        continue;
      std::int64_t num = b * b - d;
      if (num % (4 * a))
        continue;
      QuadraticForm f{a, b, num / (4 * a)};
      if (f.is_reduced() && f.is_primitive())
        forms.push_back(f);
    }
  }
  std::sort(forms.begin(), forms.end());
  return forms;
}

QuadraticForm compose_unreduced(QuadraticForm const &f, QuadraticForm const &g)
{
  std::int64_t const d = f.discriminant();
  if (g.discriminant() != d)
    throw std::invalid_argument("cannot compose forms of different discriminants");

  std::int64_t const beta = (f.b + g.b) / 2;
  auto [g1, x1, y1] = extended_gcd(f.a, g.a);
  auto [e, x2, y2] = extended_gcd(g1, beta);
  std::int64_t const u = x2 * x1, v = x2 * y1, w = y2;

  std::int64_t const a3 = (f.a / e) * (g.a / e);
  __int128 num = static_cast<__int128>(u) * f.a * g.b + static_cast<__int128>(v) * g.a * f.b +
                 static_cast<__int128>(w) * ((static_cast<__int128>(f.b) * g.b + d) / 2);
  __int128 b3 = num / e;
  __int128 two_a3 = 2 * static_cast<__int128>(a3);
  b3 = ((b3 % two_a3) + two_a3) % two_a3;
  if (b3 > a3)
    b3 -= two_a3;
  __int128 c_num = b3 * b3 - d;
  if (c_num % (4 * static_cast<__int128>(a3)))
    throw std::logic_error("composition produced a non-integral form");
  return {a3, static_cast<std::int64_t>(b3), static_cast<std::int64_t>(c_num / (4 * a3))};
}

QuadraticForm compose_forms(QuadraticForm const &f, QuadraticForm const &g)
{
  return reduce(compose_unreduced(f, g));
}

QuadraticForm inverse_form(QuadraticForm const &f)
{
  return reduce({f.a, -f.b, f.c});
}

std::size_t ClassGroupData::index_of(QuadraticForm const &reduced) const
{
  auto it = std::lower_bound(forms.begin(), forms.end(), reduced);
  if (it == forms.end() || *it != reduced)
    throw std::invalid_argument("form is not a reduced form of this discriminant");
  return static_cast<std::size_t>(it - forms.begin());
}

ClassGroupData class_group_structure(std::int64_t d)
{
  ClassGroupData data;
  data.discriminant = d;
  data.forms = reduced_forms(d);
  std::size_t const h = data.forms.size();
  if (data.forms.front() != principal_form(d))
    throw std::logic_error("principal form is not the least reduced form");

  data.table.assign(h, std::vector<std::size_t>(h));
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = i; j < h; ++j) {
      std::size_t k = data.index_of(compose_forms(data.forms[i], data.forms[j]));
      data.table[i][j] = data.table[j][i] = k;
    }
  }

  std::vector<std::uint64_t> orders(h, 1);
  for (std::size_t i = 0; i < h; ++i) {
    std::size_t x = i;
    while (x != 0) {
      x = data.table[x][i];
      ++orders[i];
    }
    if (i == 0)
      orders[i] = 1;
    if (orders[i] <= 2)
      data.two_torsion.push_back(i);
  }
  data.invariants = h == 1 ? std::vector<std::uint64_t>{} : invariant_factors_from_orders(orders);
  for (std::uint64_t f : data.invariants)
    data.two_rank += (f % 2 == 0) ? 1 : 0;

  if (std::size_t{1} << data.two_rank != data.two_torsion.size())
    throw std::logic_error("2-torsion count disagrees with the invariant factors");
  if (data.two_rank + 1 != prime_discriminant_count(d))
    throw std::logic_error("2-rank disagrees with genus theory for d = " + std::to_string(d));
  return data;
}

} // namespace capgap
