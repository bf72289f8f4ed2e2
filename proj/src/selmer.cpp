#include "capgap/selmer.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "capgap/discriminant.hpp"

namespace capgap {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::int64_t isqrt(std::int64_t n)
{
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n)
    --r;
  while ((r + 1) * (r + 1) <= n)
    ++r;
  return r;
}

constexpr std::int64_t kPrimeSearchLimit = 10'000'000;

// An odd prime p coprime to d with a form (p, B, C) in the class of `target`.
// For a class of order <= 2 both square roots B give the same class.
std::pair<std::int64_t, QuadraticForm> ideal_of_prime_norm(QuadraticForm const &target)
{
  std::int64_t const d = target.discriminant();
  for (std::int64_t p = 3; p < kPrimeSearchLimit; p += 2) {
    if (d % p == 0 || !is_prime(p))
      continue;
    for (std::int64_t B = 0; B < 2 * p; ++B) {
      if (mod(B * B - d, 4 * p) != 0)
        continue;
      QuadraticForm f{p, B, (B * B - d) / (4 * p)};
      QuadraticForm r = reduce(f);
      if (r == target || inverse_form(r) == target)
        return {p, f};
      break;
    }
  }
  throw std::runtime_error("no prime ideal found in class of discriminant " + std::to_string(d));
}

} // namespace

QuadraticRing::QuadraticRing(std::int64_t d) : d_(d), w_norm_((d * d - d) / 4)
{
  if (mod(d, 4) > 1)
    throw std::invalid_argument("discriminant must be 0 or 1 mod 4");
}

QuadraticInteger QuadraticRing::multiply(QuadraticInteger const &x, QuadraticInteger const &y) const
{
  return {x.u * y.u - x.v * y.v * w_norm_, x.u * y.v + x.v * y.u + d_ * x.v * y.v};
}

std::int64_t QuadraticRing::norm(QuadraticInteger const &x) const
{
  return x.u * x.u + d_ * x.u * x.v + w_norm_ * x.v * x.v;
}

QuadraticInteger QuadraticRing::from_half(std::int64_t X, std::int64_t Y) const
{
  if (mod(X - Y * d_, 2) != 0)
    throw std::invalid_argument("(X + Y sqrt d)/2 is not integral");
  return {(X - Y * d_) / 2, Y};
}

std::pair<std::int64_t, std::int64_t> QuadraticRing::to_half(QuadraticInteger const &x) const
{
  return {2 * x.u + d_ * x.v, x.v};
}

std::optional<QuadraticInteger> QuadraticRing::square_root_mod4(QuadraticInteger const &x) const
{
  for (std::int64_t a = 0; a < 4; ++a) {
    for (std::int64_t b = 0; b < 4; ++b) {
      QuadraticInteger xi{a, b};
      QuadraticInteger sq = multiply(xi, xi);
      if (divisible_by({x.u - sq.u, x.v - sq.v}, 4))
        return xi;
    }
  }
  return std::nullopt;
}

std::vector<QuadraticInteger> QuadraticRing::units() const
{
  if (d_ >= 0)
    throw std::invalid_argument("unit groups are only enumerated for d < 0");
  std::vector<QuadraticInteger> out;
  for (std::int64_t Y = -2; Y <= 2; ++Y) {
    for (std::int64_t X = -2; X <= 2; ++X) {
      if (X * X - Y * Y * d_ == 4 && mod(X - Y * d_, 2) == 0)
        out.push_back(from_half(X, Y));
    }
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, QuadraticInteger const &x)
{
  return os << x.u << (x.v < 0 ? "-" : "+") << (x.v < 0 ? -x.v : x.v) << "w";
}

int e4_plus_index(std::int64_t d)
{
  if (d >= 0 || !is_fundamental_discriminant(d))
    throw std::invalid_argument(std::to_string(d) + " is not a negative fundamental discriminant");
  QuadraticRing ring(d);
  auto units = ring.units();

  std::vector<QuadraticInteger> squares;
  std::size_t near_squares = 0;
  for (auto const &e : units) {
    auto sq = ring.multiply(e, e);
    if (std::find(squares.begin(), squares.end(), sq) == squares.end())
      squares.push_back(sq);
    if (ring.square_root_mod4(e))
      ++near_squares;
  }
  int index = static_cast<int>(near_squares / squares.size());

  if (d != -3 && d != -4) {
    auto factors = factor_into_prime_discriminants(d);
    int expected = std::find(factors.begin(), factors.end(), -4) != factors.end() ? 2 : 1;
    if (index != expected)
      throw std::logic_error("unit index disagrees with the -4 factor criterion at d = " + std::to_string(d));
  }
  return index;
}

SelmerData cl_star_subgroup(std::int64_t d)
{
  return cl_star_subgroup(class_group_structure(d));
}

SelmerData cl_star_subgroup(ClassGroupData const &cl)
{
  std::int64_t const d = cl.discriminant;
  QuadraticRing ring(d);
  auto const units = ring.units();

  SelmerData out;
  out.discriminant = d;
  out.e4_index = e4_plus_index(d);
  out.two_torsion_order = cl.two_torsion.size();

  for (std::size_t i : cl.two_torsion) {
    ClassCertificate cert;
    cert.reduced = cl.forms[i];
    auto [p, f] = ideal_of_prime_norm(cert.reduced);
    cert.prime = p;
    cert.ideal_form = f;
    cert.square_form = compose_unreduced(f, f);
    std::int64_t const n = p * p;
    if (cert.square_form.a != n)
      throw std::logic_error("square of a prime ideal coprime to d has unexpected norm");

    // alpha = (X + Y sqrt d)/2 of norm p^2 lying in a^2 = [p^2, (-B' + sqrt d)/2]
    std::optional<QuadraticInteger> alpha;
    std::int64_t const bound = isqrt(4 * n / -d) + 1;
    for (std::int64_t Y = -bound; Y <= bound && !alpha; ++Y) {
      std::int64_t rhs = 4 * n + Y * Y * d;
      if (rhs < 0)
        continue;
      std::int64_t X = isqrt(rhs);
      if (X * X != rhs)
        continue;
      for (std::int64_t sx : {X, -X}) {
        if (mod(sx - Y * d, 2) == 0 && mod(sx + Y * cert.square_form.b, 2 * n) == 0) {
          alpha = ring.from_half(sx, Y);
          break;
        }
      }
    }
    if (!alpha)
      throw std::runtime_error("no generator found for the square of a 2-torsion ideal at d = " +
                               std::to_string(d));

    cert.alpha = *alpha;
    for (auto const &e : units) {
      auto candidate = ring.multiply(*alpha, e);
      if (auto root = ring.square_root_mod4(candidate)) {
        cert.alpha = candidate;
        cert.root = root;
        break;
      }
    }
    if (cert.in_cl_star())
      out.cl_star.push_back(cert.reduced);
    out.certificates.push_back(cert);
  }
  return out;
}

} // namespace capgap
