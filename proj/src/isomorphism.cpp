#include "capgap/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace capgap {

Fingerprint fingerprint(PermutationGroup const &g)
{
  Fingerprint f;
  f.order = g.order();
  for (std::size_t a = 0; a < g.order(); ++a)
    f.element_orders.push_back(g.element_order(static_cast<ElementId>(a)));
  std::sort(f.element_orders.begin(), f.element_orders.end());
  f.exponent = std::accumulate(f.element_orders.begin(), f.element_orders.end(), std::size_t{1},
                               [](std::size_t a, std::size_t b) { return std::lcm(a, b); });
  f.class_sizes = conjugacy_class_sizes(g);
  f.center_order = center(g).order();
  SubgroupHandle derived = derived_subgroup(g);
  f.derived_order = derived.order();
  f.abelianization = abelian_invariants(g, derived);
  return f;
}

namespace {

class IsomorphismSearch
{
public:
  IsomorphismSearch(PermutationGroup const &g, PermutationGroup const &h)
    : g_(g), h_(h), gens_(small_generating_set(g))
  {
    for (ElementId x : gens_) {
      std::vector<ElementId> options;
      for (std::size_t y = 0; y < h.order(); ++y) {
        if (h.element_order(static_cast<ElementId>(y)) == g.element_order(x))
          options.push_back(static_cast<ElementId>(y));
      }
      candidates_.push_back(std::move(options));
    }
    images_.resize(gens_.size());
  }

  std::optional<std::vector<ElementId>> run()
  {
    if (g_.order() != h_.order())
      return std::nullopt;
    if (search(0))
      return map_;
    return std::nullopt;
  }

private:
  // Extends the assignment gens_[0..k) -> images_[0..k) along a spanning
  // tree of <gens_[0..k)> and checks it is a well-defined injective
  // homomorphism there.
  bool consistent(std::size_t k)
  {
    std::vector<int> map(g_.order(), -1);
    std::vector<bool> used(h_.order(), false);
    std::vector<ElementId> queue{0};
    map[0] = 0;
    used[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      ElementId x = queue[i];
      for (std::size_t j = 0; j < k; ++j) {
        ElementId y = g_.multiply(x, gens_[j]);
        ElementId image = h_.multiply(static_cast<ElementId>(map[x]), images_[j]);
        if (map[y] < 0) {
          if (used[image])
            return false;
          map[y] = image;
          used[image] = true;
          queue.push_back(y);
        } else if (map[y] != image) {
          return false;
        }
      }
    }
    if (k == gens_.size()) {
      map_.assign(map.begin(), map.end());
    }
    return true;
  }

  bool search(std::size_t k)
  {
    if (k == gens_.size())
      return true;
    for (ElementId candidate : candidates_[k]) {
      images_[k] = candidate;
      if (consistent(k + 1) && search(k + 1))
        return true;
    }
    return false;
  }

  PermutationGroup const &g_;
  PermutationGroup const &h_;
  std::vector<ElementId> gens_;
  std::vector<std::vector<ElementId>> candidates_;
  std::vector<ElementId> images_;
  std::vector<ElementId> map_;
};

} // namespace

std::optional<std::vector<ElementId>> find_isomorphism(PermutationGroup const &g,
                                                       PermutationGroup const &h)
{
  if (g.order() != h.order())
    return std::nullopt;
  return IsomorphismSearch(g, h).run();
}

bool is_isomorphic(PermutationGroup const &g, PermutationGroup const &h)
{
  return is_isomorphic(g, fingerprint(g), h, fingerprint(h));
}

bool is_isomorphic(PermutationGroup const &g, Fingerprint const &fg, PermutationGroup const &h,
                   Fingerprint const &fh)
{
  if (fg != fh)
    return false;
  return find_isomorphism(g, h).has_value();
}

} // namespace capgap
