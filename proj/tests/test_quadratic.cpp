#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "capgap/discriminant.hpp"
#include "capgap/forms.hpp"
#include "capgap/screening.hpp"
#include "capgap/selmer.hpp"
#include "capgap/units.hpp"
#include "support.hpp"

using namespace capgap;

namespace {

// Kronecker symbol (d/n) for n > 0.
int kronecker(std::int64_t d, std::int64_t n)
{
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    std::int64_t r = ((d % 8) + 8) % 8;
    if (r % 2 == 0)
      return 0;
    if (r == 3 || r == 5)
      result = -result;
  }
  std::int64_t a = ((d % n) + n) % n;
  std::int64_t b = n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      if (b % 8 == 3 || b % 8 == 5)
        result = -result;
    }
    std::swap(a, b);
    if (a % 4 == 3 && b % 4 == 3)
      result = -result;
    a %= b;
  }
  return b == 1 ? result : 0;
}

// Dirichlet's class number formula for d < 0.
std::int64_t analytic_class_number(std::int64_t d)
{
  std::int64_t w = d == -3 ? 6 : d == -4 ? 4 : 2;
  std::int64_t sum = 0;
  for (std::int64_t a = 1; a < -d; ++a)
    sum += kronecker(d, a) * a;
  return -w * sum / (2 * -d);
}

// Whether the positive definite form f represents n.
bool represents(QuadraticForm const &f, std::int64_t n)
{
  std::int64_t bound = static_cast<std::int64_t>(std::sqrt(4.0 * f.a * n / -f.discriminant())) + 1;
  for (std::int64_t y = -bound; y <= bound; ++y) {
    std::int64_t xbound = static_cast<std::int64_t>(std::sqrt(4.0 * f.c * n / -f.discriminant())) + 1;
    for (std::int64_t x = -xbound; x <= xbound; ++x)
      if (f.evaluate(x, y) == n)
        return true;
  }
  return false;
}

struct Pell
{
  std::int64_t x, y;
  int norm;
};

// Least y > 0 with x^2 - m y^2 = +-k (k = 1, or 4 for m = 1 mod 4).
Pell brute_force_pell(std::int64_t m)
{
  std::int64_t k = m % 4 == 1 ? 4 : 1;
  for (std::int64_t y = 1;; ++y) {
    for (int sign : {-1, 1}) {
      std::int64_t target = m * y * y + sign * k;
      auto x = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(target))));
      for (std::int64_t c = x - 1; c <= x + 1; ++c)
        if (c > 0 && c * c == target)
          return {c, y, sign};
    }
  }
}

std::string slurp(std::string const &path)
{
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("fundamental discriminants and prime discriminant factors")
{
  CHECK(is_fundamental_discriminant(-3));
  CHECK(is_fundamental_discriminant(-4));
  CHECK(is_fundamental_discriminant(-84));
  CHECK_FALSE(is_fundamental_discriminant(-12));
  CHECK_FALSE(is_fundamental_discriminant(-16));
  CHECK_FALSE(is_fundamental_discriminant(1));
  auto f84 = factor_into_prime_discriminants(-84);
  std::sort(f84.begin(), f84.end());
  CHECK(f84 == std::vector<std::int64_t>{-7, -4, -3});
  CHECK(factor_into_prime_discriminants(-260) == std::vector<std::int64_t>{-4, 5, 13});
  CHECK(prime_discriminant_count(-15) == 2);
  CHECK_THROWS_AS(factor_into_prime_discriminants(-12), std::invalid_argument);
  for (std::int64_t d : fundamental_discriminants(-3000, -3)) {
    auto f = factor_into_prime_discriminants(d);
    std::int64_t prod = 1;
    for (auto p : f) {
      CHECK(is_prime_discriminant(p));
      prod *= p;
    }
    CHECK(prod == d);
  }
}

TEST_CASE("class numbers match Dirichlet's formula")
{
  for (std::int64_t d : fundamental_discriminants(-4000, -3)) {
    CAPTURE(d);
    CHECK(static_cast<std::int64_t>(reduced_forms(d).size()) == analytic_class_number(d));
  }
}

TEST_CASE("small class groups")
{
  CHECK(class_group_structure(-3).class_number() == 1);
  CHECK(class_group_structure(-4).class_number() == 1);
  CHECK(class_group_structure(-23).invariants == std::vector<std::uint64_t>{3});
  CHECK(class_group_structure(-84).invariants == std::vector<std::uint64_t>{2, 2});
  CHECK(class_group_structure(-260).invariants == std::vector<std::uint64_t>{2, 4});
  CHECK(class_group_structure(-56).invariants == std::vector<std::uint64_t>{4});
  CHECK(reduced_forms(-20) == std::vector<QuadraticForm>{{1, 0, 5}, {2, 2, 3}});
  CHECK_THROWS_AS(reduced_forms(-12), std::invalid_argument);
  CHECK_THROWS_AS(reduced_forms(5), std::invalid_argument);
}

TEST_CASE("reduction preserves the discriminant and the represented numbers")
{
  std::uniform_int_distribution<std::int64_t> coef(-6, 6);
  for (std::int64_t d : fundamental_discriminants(-400, -3)) {
    for (QuadraticForm const &f : reduced_forms(d)) {
      CHECK(f.is_reduced());
      CHECK(f.is_primitive());
      // apply a random unimodular change of variables and reduce back
      std::int64_t p = 1, q = coef(testing::rng()), r = 0, s = 1;
      if (coef(testing::rng()) > 0)
        std::swap(q, r);
      QuadraticForm g{f.evaluate(p, r), 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s,
                      f.evaluate(q, s)};
      CHECK(g.discriminant() == d);
      CHECK(reduce(g) == f);
    }
  }
}

TEST_CASE("composition is a commutative group law with the expected values")
{
  for (std::int64_t d : fundamental_discriminants(-1500, -3)) {
    CAPTURE(d);
    ClassGroupData cl = class_group_structure(d);
    std::size_t h = cl.class_number();
    CHECK(cl.forms[0] == principal_form(d));
    for (std::size_t i = 0; i < h; ++i) {
      CHECK(cl.table[0][i] == i);
      CHECK(cl.table[i][cl.index_of(inverse_form(cl.forms[i]))] == 0);
      for (std::size_t j = 0; j < h; ++j) {
        CHECK(cl.table[i][j] == cl.table[j][i]);
        if (h <= 12)
          for (std::size_t k = 0; k < h; ++k)
            CHECK(cl.table[cl.table[i][j]][k] == cl.table[i][cl.table[j][k]]);
      }
    }
    // genus theory: #Cl[2] = 2^(t-1)
    CHECK(cl.two_torsion.size() == (std::size_t{1} << (prime_discriminant_count(d) - 1)));
    std::uint64_t order = 1;
    for (auto x : cl.invariants)
      order *= x;
    CHECK(order == h);
  }
}

TEST_CASE("composed forms represent products of represented numbers")
{
  std::uniform_int_distribution<std::int64_t> var(-3, 3);
  for (std::int64_t d : {-84LL, -260LL, -391LL, -1155LL, -2379LL}) {
    auto forms = reduced_forms(d);
    for (int trial = 0; trial < 40; ++trial) {
      QuadraticForm const &f = forms[testing::rng()() % forms.size()];
      QuadraticForm const &g = forms[testing::rng()() % forms.size()];
      std::int64_t x = var(testing::rng()), y = var(testing::rng()), z = var(testing::rng()),
                   w = var(testing::rng());
      std::int64_t n = f.evaluate(x, y) * g.evaluate(z, w);
      if (n == 0)
        continue;
      QuadraticForm fg = compose_unreduced(f, g);
      CHECK(fg.discriminant() == d);
      CHECK(represents(compose_forms(f, g), n));
    }
  }
  CHECK_THROWS(compose_unreduced(QuadraticForm{1, 0, 5}, QuadraticForm{1, 1, 6}));
}

TEST_CASE("ring arithmetic in the maximal order")
{
  std::uniform_int_distribution<std::int64_t> c(-20, 20);
  for (std::int64_t d : {-3LL, -4LL, -15LL, -84LL, -260LL}) {
    QuadraticRing ring(d);
    for (int trial = 0; trial < 200; ++trial) {
      QuadraticInteger x{c(testing::rng()), c(testing::rng())};
      QuadraticInteger y{c(testing::rng()), c(testing::rng())};
      QuadraticInteger z{c(testing::rng()), c(testing::rng())};
      CHECK(ring.norm(ring.multiply(x, y)) == ring.norm(x) * ring.norm(y));
      CHECK(ring.multiply(x, y) == ring.multiply(y, x));
      CHECK(ring.multiply(ring.multiply(x, y), z) == ring.multiply(x, ring.multiply(y, z)));
      auto [X, Y] = ring.to_half(x);
      CHECK(ring.from_half(X, Y) == x);
      // N((X + Y sqrt d)/2) = (X^2 - Y^2 d)/4
      CHECK(4 * ring.norm(x) == X * X - Y * Y * d);
    }
  }
}

TEST_CASE("units and squares modulo 4")
{
  CHECK(QuadraticRing(-3).units().size() == 6);
  CHECK(QuadraticRing(-4).units().size() == 4);
  CHECK(QuadraticRing(-84).units().size() == 2);
  for (std::int64_t d : {-3LL, -4LL, -15LL, -20LL, -84LL}) {
    QuadraticRing ring(d);
    for (std::int64_t u = 0; u < 4; ++u)
      for (std::int64_t v = 0; v < 4; ++v) {
        QuadraticInteger x{u, v};
        auto root = ring.square_root_mod4(x);
        bool brute = false;
        for (std::int64_t a = 0; a < 4 && !brute; ++a)
          for (std::int64_t b = 0; b < 4 && !brute; ++b) {
            QuadraticInteger sq = ring.multiply({a, b}, {a, b});
            brute = ring.divisible_by({sq.u - u, sq.v - v}, 4);
          }
        CHECK(root.has_value() == brute);
        if (root) {
          QuadraticInteger sq = ring.multiply(*root, *root);
          CHECK(ring.divisible_by({sq.u - u, sq.v - v}, 4));
        }
      }
  }
}

TEST_CASE("unit index is 2 exactly when -4 is a prime discriminant factor")
{
  for (std::int64_t d : fundamental_discriminants(-3000, -3)) {
    CAPTURE(d);
    auto f = factor_into_prime_discriminants(d);
    bool has_minus4 = std::find(f.begin(), f.end(), -4) != f.end();
    if (d == -3 || d == -4)
      CHECK(e4_plus_index(d) == 1); // -1 is a square of a unit
    else
      CHECK(e4_plus_index(d) == (has_minus4 ? 2 : 1));
  }
}

TEST_CASE("exact sequence for every fundamental discriminant down to -3000")
{
  for (std::int64_t d : fundamental_discriminants(-3000, -3)) {
    CAPTURE(d);
    SelmerData s = cl_star_subgroup(d);
    CHECK(s.exact_sequence_holds());
    QuadraticRing ring(d);
    for (ClassCertificate const &c : s.certificates) {
      CHECK(is_prime(c.prime));
      CHECK(d % c.prime != 0);
      CHECK(c.ideal_form.a == c.prime);
      CHECK(c.square_form.a == c.prime * c.prime);
      CHECK(c.ideal_form.discriminant() == d);
      CHECK(c.square_form.discriminant() == d);
      // the ideal lies in the class (or its inverse, which is the same class)
      CHECK(reduce(c.ideal_form) == c.reduced);
      CHECK(ring.norm(c.alpha) == c.prime * c.prime);
      CHECK_FALSE(ring.divisible_by(c.alpha, c.prime));
      if (c.root) {
        QuadraticInteger sq = ring.multiply(*c.root, *c.root);
        CHECK(ring.divisible_by({sq.u - c.alpha.u, sq.v - c.alpha.v}, 4));
      }
    }
    // the principal class always passes, and Cl* is a subgroup
    ClassGroupData cl = class_group_structure(d);
    CHECK(std::find(s.cl_star.begin(), s.cl_star.end(), principal_form(d)) != s.cl_star.end());
    for (auto const &a : s.cl_star)
      for (auto const &b : s.cl_star)
        CHECK(std::find(s.cl_star.begin(), s.cl_star.end(), compose_forms(a, b)) != s.cl_star.end());
  }
}

TEST_CASE("Cl* for the worked discriminants")
{
  SelmerData s84 = cl_star_subgroup(-84);
  CHECK(s84.two_torsion_order == 4);
  CHECK(s84.e4_index == 2);
  CHECK(s84.cl_star.size() == 2);
  SelmerData s15 = cl_star_subgroup(-15);
  CHECK(s15.e4_index == 1);
  CHECK(s15.cl_star.size() == 2);
}

TEST_CASE("fundamental units against a brute-force Pell search")
{
  for (std::int64_t m = 2; m < 110; ++m) {
    if (!is_squarefree(m))
      continue;
    CAPTURE(m);
    UnitResult u = fundamental_unit_norm(m);
    Pell brute = brute_force_pell(m);
    CHECK(u.satisfies_pell());
    CHECK(u.x == brute.x);
    CHECK(u.y == brute.y);
    CHECK(u.norm == brute.norm);
    CHECK(u.convention == (m % 4 == 1 ? UnitConvention::half_integral : UnitConvention::integral));
  }
  CHECK_THROWS_AS(fundamental_unit_norm(12), std::invalid_argument);
  CHECK_THROWS_AS(fundamental_unit_norm(1), std::invalid_argument);
}

TEST_CASE("unit rendering")
{
  CHECK(fundamental_unit_norm(2).to_string() == "1 + sqrt(2)");
  CHECK(fundamental_unit_norm(5).to_string() == "(1 + sqrt(5))/2");
  CHECK(fundamental_unit_norm(65).to_string() == "8 + sqrt(65)");
  CHECK(fundamental_unit_norm(65).norm == -1);
  CHECK(fundamental_unit_norm(3).norm == 1);
  // large radicands need big integers
  UnitResult big = fundamental_unit_norm(9949);
  CHECK(big.satisfies_pell());
  UnitResult p = fundamental_unit_norm(94);
  CHECK(p.x == 2143295);
  CHECK(p.y == 221064);
}

TEST_CASE("screening records are consistent")
{
  auto records = screen_candidates(20000);
  REQUIRE_FALSE(records.empty());
  std::int64_t last = 0;
  for (ScreeningRecord const &r : records) {
    CAPTURE(r.d);
    CHECK(-r.d > last);
    last = -r.d;
    CHECK(r.d == -4 * r.p * r.q);
    CHECK(r.p < r.q);
    CHECK(is_prime(r.p));
    CHECK(is_prime(r.q));
    CHECK(r.p % 4 == 1);
    CHECK(r.q % 4 == 1);
    CHECK(r.two_rank == 2);
    CHECK(r.e4_index == 2);
    CHECK(r.unit.radicand == r.p * r.q);
    CHECK(r.excluded() == (r.unit.norm == 1));
    CHECK(r.class_number == static_cast<std::size_t>(analytic_class_number(r.d)));
  }
  CHECK(records.front().d == -260);
  CHECK_FALSE(records.front().excluded());
}

TEST_CASE("screening output matches the golden file")
{
  std::string golden = slurp(std::string(CAPGAP_TEST_DATA_DIR) + "/screen_20000.tsv");
  REQUIRE_FALSE(golden.empty());
  CHECK(render_screening_tsv(screen_candidates(20000)) == golden);
}
