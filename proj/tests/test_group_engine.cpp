#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "capgap/catalog.hpp"
#include "capgap/group.hpp"
#include "capgap/isomorphism.hpp"
#include "capgap/permutation.hpp"
#include "support.hpp"

using namespace capgap;

namespace {

Permutation random_permutation(std::size_t degree)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), testing::rng());
  return Permutation(std::move(images));
}

// The same group on relabeled points, generated by a shuffled set of random
// elements that still generates it.
PermutationGroup scrambled_copy(PermutationGroup const &g)
{
  Permutation relabel = random_permutation(g.degree());
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  std::vector<ElementId> chosen;
  while (subgroup_closure(g, chosen).order() != g.order())
    chosen.push_back(static_cast<ElementId>(pick(testing::rng())));
  std::vector<Permutation> gens;
  for (ElementId e : chosen)
    gens.push_back(relabel.inverse() * g.element(e) * relabel);
  return PermutationGroup(gens);
}

// Naive closure of all commutators.
ElementSet commutator_closure(PermutationGroup const &g)
{
  std::vector<ElementId> commutators;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      Permutation const &x = g.element(static_cast<ElementId>(a));
      Permutation const &y = g.element(static_cast<ElementId>(b));
      commutators.push_back(g.id_of(x.inverse() * y.inverse() * x * y));
    }
  return subgroup_closure(g, commutators).members();
}

std::uint64_t product(std::vector<std::uint64_t> const &v)
{
  return std::accumulate(v.begin(), v.end(), std::uint64_t{1}, std::multiplies<>());
}

} // namespace

TEST_CASE("permutation products compose left to right")
{
  Permutation p{1, 2, 0};
  Permutation q{1, 0, 2};
  CHECK((p * q) == Permutation{0, 2, 1});
  CHECK((q * p) == Permutation{2, 1, 0});
  CHECK(p.pow(3).is_identity());
  CHECK(p.pow(-1) == p.inverse());
  CHECK((p * p.inverse()).is_identity());
  CHECK_THROWS(Permutation({0, 0, 1}));
}

TEST_CASE("group operations agree with permutation arithmetic")
{
  PermutationGroup g = testing::entry("16.08").group;
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = static_cast<ElementId>(pick(testing::rng()));
    auto b = static_cast<ElementId>(pick(testing::rng()));
    CHECK(g.element(g.multiply(a, b)) == g.element(a) * g.element(b));
    CHECK(g.element(g.inverse(a)) == g.element(a).inverse());
    CHECK(g.element(g.power(a, -3)) == g.element(a).pow(-3));
    CHECK(g.power(a, static_cast<long long>(g.element_order(a))) == PermutationGroup::identity());
    CHECK(g.element(g.commutator(a, b)) ==
          g.element(a).inverse() * g.element(b).inverse() * g.element(a) * g.element(b));
  }
  CHECK(g.element(0).is_identity());
}

TEST_CASE("element orders outside the group are rejected")
{
  PermutationGroup g = testing::entry("8.01").group;
  CHECK(element_order(g, g.element(g.generator_ids()[0])) == 8);
  CHECK_THROWS_AS(element_order(g, random_permutation(g.degree() + 1)), std::invalid_argument);
}

TEST_CASE("basic invariants of small 2-groups")
{
  CHECK(testing::entry("8.03").group.order() == 8);
  CHECK(index_two_subgroups(testing::entry("8.03").group).size() == 3);
  CHECK(index_two_subgroups(testing::entry("8.01").group).size() == 1);
  CHECK(index_two_subgroups(testing::entry("8.05").group).size() == 7);
  CHECK(center(testing::entry("8.04").group).order() == 2);
  CHECK(derived_subgroup(testing::entry("8.04").group).order() == 2);
  CHECK(conjugacy_class_sizes(testing::entry("8.03").group) == std::vector<std::size_t>{1, 1, 2, 2, 2});
  CHECK(derived_times_squares(testing::entry("16.08").group).order() == 4);
}

TEST_CASE("index-2 subgroups match homomorphisms onto C_2")
{
  for (CatalogEntry const &e : testing::bundled_catalog().entries()) {
    CAPTURE(e.id);
    auto fast = index_two_subgroups(e.group);
    auto brute = testing::index_two_by_homomorphisms(e);
    std::set<std::string> a, b;
    for (auto const &h : fast) {
      CHECK(h.order() * 2 == e.order);
      CHECK(is_normal(h));
      a.insert(h.members().to_string());
    }
    for (auto const &m : brute)
      b.insert(m.to_string());
    CHECK(a == b);
    CHECK(a.size() == fast.size());
  }
}

TEST_CASE("derived subgroup matches the naive commutator closure")
{
  for (CatalogEntry const &e : testing::bundled_catalog().entries()) {
    CAPTURE(e.id);
    SubgroupHandle d = derived_subgroup(e.group);
    CHECK(d.members() == commutator_closure(e.group));
    CHECK(is_normal(d));
    // |G/G'| is the product of the invariant factors
    auto inv = abelian_invariants(e.group, d);
    CHECK(product(inv) * d.order() == e.order);
    CHECK(std::is_sorted(inv.begin(), inv.end()));
    for (std::size_t i = 1; i < inv.size(); ++i)
      CHECK(inv[i] % inv[i - 1] == 0);
    // index-2 subgroups of G are those of G/G', 2^r - 1 of them
    std::size_t even = std::count_if(inv.begin(), inv.end(), [](auto x) { return x % 2 == 0; });
    CHECK(index_two_subgroups(e.group).size() == (std::size_t{1} << even) - 1);
  }
}

TEST_CASE("abelian invariants from element orders")
{
  std::vector<std::uint64_t> c2c4{1, 2, 2, 2, 4, 4, 4, 4};
  CHECK(invariant_factors_from_orders(c2c4) == std::vector<std::uint64_t>{2, 4});
  std::vector<std::uint64_t> c8{1, 2, 4, 4, 8, 8, 8, 8};
  CHECK(invariant_factors_from_orders(c8) == std::vector<std::uint64_t>{8});
  std::vector<std::uint64_t> c6{1, 2, 3, 3, 6, 6};
  CHECK(invariant_factors_from_orders(c6) == std::vector<std::uint64_t>{6});
  std::vector<std::uint64_t> trivial{1};
  CHECK(invariant_factors_from_orders(trivial).empty());
}

TEST_CASE("abelian_invariants rejects non-normal or non-abelian quotients")
{
  PermutationGroup d4 = testing::entry("8.03").group;
  CHECK_THROWS_AS(abelian_invariants(d4, trivial_subgroup(d4)), std::invalid_argument);
  for (ElementId e = 1; e < d4.order(); ++e) {
    std::vector<ElementId> one{e};
    SubgroupHandle h = subgroup_closure(d4, one);
    if (h.order() == 2 && !is_normal(h)) {
      CHECK_THROWS_AS(abelian_invariants(d4, h), std::invalid_argument);
      break;
    }
  }
}

TEST_CASE("cosets partition the group")
{
  PermutationGroup g = testing::entry("16.06").group;
  for (auto const &h : index_two_subgroups(g)) {
    ElementSet seen;
    std::size_t cosets = 0;
    for (ElementId x = 0; x < g.order(); ++x) {
      ElementSet c = coset_of(h, x);
      CHECK(c.count() == h.order());
      if ((c & seen).none()) {
        seen |= c;
        ++cosets;
      } else {
        CHECK((c & seen) == c);
      }
    }
    CHECK(cosets == 2);
  }
}

TEST_CASE("small generating sets have minimal size for 2-groups")
{
  for (CatalogEntry const &e : testing::bundled_catalog().entries()) {
    CAPTURE(e.id);
    auto gens = small_generating_set(e.group);
    CHECK(subgroup_closure(e.group, gens).order() == e.order);
    // Burnside basis theorem: rank of G/Phi(G)
    std::size_t frattini_quotient = e.order / derived_times_squares(e.group).order();
    std::size_t rank = 0;
    while ((std::size_t{1} << rank) < frattini_quotient)
      ++rank;
    CHECK(gens.size() == rank);
  }
}

TEST_CASE("isomorphism search finds relabeled copies")
{
  for (CatalogEntry const &e : testing::bundled_catalog().entries()) {
    if (e.order < 8)
      continue;
    CAPTURE(e.id);
    PermutationGroup copy = scrambled_copy(e.group);
    auto iso = find_isomorphism(copy, e.group);
    REQUIRE(iso);
    // bijective homomorphism
    std::set<ElementId> image(iso->begin(), iso->end());
    CHECK(image.size() == e.order);
    for (int trial = 0; trial < 50; ++trial) {
      std::uniform_int_distribution<std::size_t> pick(0, e.order - 1);
      auto a = static_cast<ElementId>(pick(testing::rng()));
      auto b = static_cast<ElementId>(pick(testing::rng()));
      CHECK((*iso)[copy.multiply(a, b)] == e.group.multiply((*iso)[a], (*iso)[b]));
    }
    CHECK(identify_in_catalog(copy, testing::bundled_catalog().of_order(e.order)).id == e.id);
  }
}

TEST_CASE("groups with equal element-order statistics are told apart")
{
  // C_4 x C_4 and C_4 x| C_4 share element orders; so do D_4 x C_2 and others
  PermutationGroup a = testing::entry("16.02").group;
  PermutationGroup b = testing::entry("16.04").group;
  std::vector<std::size_t> oa, ob;
  for (ElementId e = 0; e < 16; ++e) {
    oa.push_back(a.element_order(e));
    ob.push_back(b.element_order(e));
  }
  std::sort(oa.begin(), oa.end());
  std::sort(ob.begin(), ob.end());
  CHECK(oa == ob);
  CHECK_FALSE(is_isomorphic(a, b));
  CHECK(is_isomorphic(a, scrambled_copy(a)));
}

TEST_CASE("bundled catalog is complete and pairwise distinct")
{
  Catalog const &c = testing::bundled_catalog();
  CHECK(c.of_order(8).size() == 5);
  CHECK(c.of_order(16).size() == 14);
  CHECK(c.of_order(32).size() == 51);
  CHECK(expected_group_count(16) == 14);
  CHECK(expected_group_count(32) == 51);
  CatalogCheck check = verify_catalog(c);
  for (auto const &p : check.problems)
    MESSAGE(p);
  CHECK(check.ok());
}

TEST_CASE("catalog names and Hall-Senior numbers")
{
  CHECK(testing::entry("16.08").name == "SD_16");
  CHECK(testing::entry("16.07").hs == "16.012");
  CHECK_FALSE(testing::entry("16.08").hs.has_value());
  CHECK(testing::entry("32.43").hs == "32.044");
  CHECK(testing::entry("32.18").hs == "32.049");
  CHECK(testing::bundled_catalog().find("32.52") == nullptr);
}

TEST_CASE("catalog entry parsing")
{
  CatalogEntry e = parse_catalog_entry("# id: 8.04\n# name: H_8\ngroup Q8\n  gens i,j\n  rels i^4, i^2 = j^2, j*i*j^-1 = i^-1\n");
  CHECK(e.order == 8);
  CHECK(e.name == "H_8");
  CHECK_FALSE(e.hs);
  CHECK(is_isomorphic(e.group, testing::entry("8.04").group));
  CHECK_THROWS_AS(parse_catalog_entry("# id: 8.04\ngroup Q gens i rels i^4\n"), CatalogError);
  CHECK_THROWS_AS(parse_catalog_entry("group Q gens i rels i^8\n"), CatalogError);
}

TEST_CASE("a catalog with a duplicate class fails verification")
{
  Catalog c;
  c.add(testing::entry("8.01"));
  CatalogEntry twin = testing::entry("8.01");
  twin.id = "8.02";
  c.add(twin);
  CHECK_FALSE(verify_catalog(c).ok());
}
