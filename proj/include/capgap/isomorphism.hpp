#ifndef CAPGAP_ISOMORPHISM_HPP
#define CAPGAP_ISOMORPHISM_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "capgap/group.hpp"

namespace capgap {

/// Isomorphism invariants used to filter candidates before searching.
struct Fingerprint
{
  std::size_t order = 0;
  std::vector<std::size_t> element_orders; // sorted multiset
  std::vector<std::size_t> class_sizes;    // sorted multiset
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::size_t exponent = 0;
  std::vector<std::uint64_t> abelianization;

  friend auto operator<=>(Fingerprint const &, Fingerprint const &) = default;
};

Fingerprint fingerprint(PermutationGroup const &g);

/// An isomorphism G -> H as the image of every element of G, if one exists.
/// Images of a small generating set of G are searched over elements of H of
/// matching order; partial assignments are pruned as soon as the subgroup
/// they generate fails to map homomorphically.
std::optional<std::vector<ElementId>> find_isomorphism(PermutationGroup const &g,
                                                       PermutationGroup const &h);

bool is_isomorphic(PermutationGroup const &g, PermutationGroup const &h);

/// Same as is_isomorphic() but reuses precomputed fingerprints.
bool is_isomorphic(PermutationGroup const &g, Fingerprint const &fg, PermutationGroup const &h,
                   Fingerprint const &fh);

} // namespace capgap

#endif // CAPGAP_ISOMORPHISM_HPP
