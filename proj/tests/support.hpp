#ifndef CAPGAP_TESTS_SUPPORT_HPP
#define CAPGAP_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "capgap/catalog.hpp"
#include "capgap/group.hpp"

namespace capgap::testing {

/// The bundled catalog, loaded once per test binary.
inline Catalog const &bundled_catalog()
{
  static Catalog const catalog = Catalog::load(CAPGAP_TEST_CATALOG_DIR);
  return catalog;
}

inline CatalogEntry const &entry(std::string_view id)
{
  CatalogEntry const *e = bundled_catalog().find(id);
  if (!e)
    throw std::runtime_error("missing catalog entry " + std::string(id));
  return *e;
}

inline std::mt19937_64 &rng()
{
  static std::mt19937_64 gen(20241016);
  return gen;
}

/// Kernels of all surjections G -> C_2, found by trying every assignment of
/// 0/1 to the generators and checking the relators of a presentation.
inline std::vector<ElementSet> index_two_by_homomorphisms(CatalogEntry const &e)
{
  PermutationGroup const &g = e.group;
  auto const &gens = g.generator_ids();
  std::size_t k = gens.size();
  std::vector<ElementSet> kernels;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    // a map to C_2 respects a relator iff its exponent sum on odd-image generators is even
    bool ok = true;
    for (Word const &r : e.presentation.relators) {
      long long sum = 0;
      for (Letter const &l : r.letters)
        if (mask >> l.generator & 1)
          sum += l.exponent;
      ok = ok && sum % 2 == 0;
    }
    if (!ok)
      continue;
    // parity of each element along a spanning tree of generator multiplications
    std::vector<int> parity(g.order(), -1);
    parity[0] = 0;
    std::vector<ElementId> stack{0};
    while (!stack.empty()) {
      ElementId x = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < k; ++i) {
        ElementId y = g.multiply(x, gens[i]);
        if (parity[y] < 0) {
          parity[y] = parity[x] ^ static_cast<int>(mask >> i & 1);
          stack.push_back(y);
        }
      }
    }
    ElementSet kernel;
    for (std::size_t x = 0; x < g.order(); ++x)
      if (parity[x] == 0)
        kernel.set(x);
    kernels.push_back(kernel);
  }
  return kernels;
}

} // namespace capgap::testing

#endif // CAPGAP_TESTS_SUPPORT_HPP
