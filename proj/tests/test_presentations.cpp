#include <doctest.h>

#include <random>

#include "capgap/coset_enumeration.hpp"
#include "capgap/families.hpp"
#include "capgap/presentation.hpp"
#include "support.hpp"

using namespace capgap;

namespace {

Word random_word(std::size_t generators, std::size_t runs)
{
  std::uniform_int_distribution<std::size_t> gen(0, generators - 1);
  std::uniform_int_distribution<long long> exp(-3, 3);
  Word w;
  for (std::size_t i = 0; i < runs; ++i)
    w.letters.push_back({gen(testing::rng()), exp(testing::rng())});
  return w;
}

bool is_freely_reduced(Word const &w)
{
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (w.letters[i].exponent == 0)
      return false;
    if (i && w.letters[i].generator == w.letters[i - 1].generator)
      return false;
  }
  return true;
}

} // namespace

TEST_CASE("parse the SD16 stanza")
{
  Presentation p = parse_presentation("group SD16 gens s,t rels s^8, t^2, t*s*t*s^-3");
  CHECK(p.name == "SD16");
  CHECK(p.generators == std::vector<std::string>{"s", "t"});
  REQUIRE(p.relators.size() == 3);
  CHECK(p.relators[0] == generator_word(0, 8));
  CHECK(p.relators[2] == generator_word(1) * generator_word(0) * generator_word(1) * generator_word(0, -3));
}

TEST_CASE("relations become lhs * rhs^-1")
{
  Presentation a = parse_presentation("group A gens s,t rels t*s*t = s^3");
  Presentation b = parse_presentation("group A gens s,t rels t*s*t*s^-3");
  CHECK(a == b);
  Presentation c = parse_presentation("group C gens a,b rels a*b = b*a");
  CHECK(render_word(c, c.relators[0]) == "a*b*a^-1*b^-1");
}

TEST_CASE("trivial group and the empty word")
{
  Presentation p = parse_presentation("group C1 gens a rels a");
  CHECK(p.relators.size() == 1);
  CHECK(coset_enumerate(p, {}).coset_count == 1);
  Presentation q = parse_presentation("group Q gens a rels a^2 = 1");
  CHECK(q.relators[0] == generator_word(0, 2));
}

TEST_CASE("comments and layout are ignored")
{
  Presentation p = parse_presentation("# cyclic\ngroup C4   # order four\n  gens a\n  rels\n    a^4\n");
  CHECK(p.relators[0] == generator_word(0, 4));
}

TEST_CASE("parse errors carry positions")
{
  try {
    parse_presentation("group X gens a rels b^2");
    FAIL("expected a parse error");
  } catch (ParseError const &e) {
    CHECK(std::string(e.what()).find("unknown generator") != std::string::npos);
    CHECK(e.line() == 1);
    CHECK(e.column() == 21);
  }
  CHECK_THROWS_AS(parse_presentation("group X gens rels a"), ParseError);
  CHECK_THROWS_AS(parse_presentation("group X gens a,a rels a"), ParseError);
  CHECK_THROWS_AS(parse_presentation("group X gens a rels a^"), ParseError);
  CHECK_THROWS_AS(parse_presentation("group X gens a rels a $ a"), ParseError);
  try {
    parse_presentation("group X gens a\nrels a^2,\n  b");
    FAIL("expected a parse error");
  } catch (ParseError const &e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("several stanzas")
{
  auto all = parse_presentations("group A gens a rels a^2\ngroup B gens b rels b^3");
  REQUIRE(all.size() == 2);
  CHECK(all[1].name == "B");
  CHECK_THROWS_AS(parse_presentation("group A gens a rels a^2\ngroup B gens b rels b^3"), ParseError);
}

TEST_CASE("reduce_word examples")
{
  CHECK(reduce_word(Word{{{0, 1}, {0, -1}}}).empty());
  CHECK(reduce_word(Word{{{0, 2}, {0, 3}}}) == generator_word(0, 5));
  Word w{{{1, 1}, {0, 1}, {1, 1}, {0, -3}}};
  CHECK(reduce_word(w) == w);
  // cancellation cascades through the middle
  CHECK(reduce_word(Word{{{0, 1}, {1, 2}, {1, -2}, {0, -1}}}).empty());
  CHECK(reduce_word(Word{{{0, 0}, {1, 1}}}) == generator_word(1));
}

TEST_CASE("reduce_word is idempotent, shortening and free-reduced")
{
  for (int trial = 0; trial < 500; ++trial) {
    Word w = random_word(3, trial % 12);
    Word r = reduce_word(w);
    CHECK(reduce_word(r) == r);
    CHECK(r.length() <= w.length());
    CHECK(is_freely_reduced(r));
    CHECK((w * inverse(w)).empty());
  }
}

TEST_CASE("render and reparse round trip")
{
  for (int trial = 0; trial < 200; ++trial) {
    Presentation p{"R" + std::to_string(trial), {"a", "b", "c1"}, {}};
    std::size_t count = 1 + trial % 4;
    for (std::size_t i = 0; i < count; ++i)
      p.relators.push_back(reduce_word(random_word(3, 1 + i * 2)));
    CHECK(parse_presentation(render_presentation(p)) == p);
  }
  Presentation sd = semidihedral_presentation(4);
  CHECK(parse_presentation(render_presentation(sd)) == sd);
}

TEST_CASE("coset enumeration realizes known orders")
{
  CHECK(coset_enumerate(semidihedral_presentation(4), {}).coset_count == 16);
  CHECK(coset_enumerate(parse_presentation("group C8 gens a rels a^8"), {}).coset_count == 8);
  CHECK(coset_enumerate(holomorph_presentation(4), {}).coset_count == 32);
  // the same group written with x*y and relations
  Presentation hol = parse_presentation(
      "group Hol gens a,x,y rels a^8, x^2, y^2, x*y*x*y, x*a*x = a^-1, y*a*y = a^5");
  CHECK(coset_enumerate(hol, {}).coset_count == 32);
}

TEST_CASE("coset enumeration over a subgroup")
{
  Presentation sd = semidihedral_presentation(4);
  std::vector<Word> rotations{generator_word(0)};
  CosetAction act = coset_enumerate(sd, rotations);
  CHECK(act.coset_count == 2);
  std::vector<Word> reflection{generator_word(1)};
  CHECK(coset_enumerate(sd, reflection).coset_count == 8);
}

TEST_CASE("relators act trivially and the action is transitive")
{
  for (Presentation const &p : {semidihedral_presentation(5), modular_presentation(5), holomorph_presentation(4),
                                extension_presentation(4, false), extension_presentation(4, true)}) {
    CosetAction act = coset_enumerate(p, {});
    for (Word const &r : p.relators) {
      Permutation e = evaluate(act.generator_images, r);
      CHECK(e == Permutation::identity(act.coset_count));
    }
    std::vector<bool> seen(act.coset_count, false);
    std::vector<Point> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Point x = stack.back();
      stack.pop_back();
      for (auto const &g : act.generator_images) {
        Point y = g.images()[x];
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    CHECK(reached == act.coset_count);
  }
}

TEST_CASE("coset enumeration is deterministic")
{
  CosetAction a = coset_enumerate(holomorph_presentation(5), {});
  CosetAction b = coset_enumerate(holomorph_presentation(5), {});
  CHECK(a.generator_images == b.generator_images);
}

TEST_CASE("infinite or oversized groups hit the coset limit")
{
  Presentation free_product = parse_presentation("group Z2Z2 gens a,b rels a^2, b^2");
  CHECK_THROWS_AS(coset_enumerate(free_product, {}, 200), CosetLimitExceeded);
  Presentation big = parse_presentation("group C300 gens a rels a^300");
  CHECK_THROWS_AS(coset_enumerate(big, {}, 100), CosetLimitExceeded);
  CHECK(coset_enumerate(big, {}, 300).coset_count == 300);
}

TEST_CASE("every catalog presentation realizes its declared order")
{
  for (CatalogEntry const &e : testing::bundled_catalog().entries()) {
    CAPTURE(e.id);
    CosetAction act = coset_enumerate(e.presentation, {});
    CHECK(act.coset_count == e.order);
    for (Word const &r : e.presentation.relators)
      CHECK(evaluate(act.generator_images, r) == Permutation::identity(act.coset_count));
  }
}
