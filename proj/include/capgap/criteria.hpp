#ifndef CAPGAP_CRITERIA_HPP
#define CAPGAP_CRITERIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "capgap/catalog.hpp"
#include "capgap/group.hpp"

namespace capgap {

struct InvolutionGeneration
{
  bool generates = false;
  /// All g in G \ H with g^2 = 1, in element order.
  std::vector<ElementId> involutions;
};

/// Whether the involutions of G lying outside the index-2 subgroup H generate
/// G. Throws std::invalid_argument if (G:H) != 2.
InvolutionGeneration involution_generated_outside(PermutationGroup const &g, SubgroupHandle const &h);

struct ScanRow
{
  std::string g_id;
  std::string g_hs; // empty when the table has no Hall-Senior number
  std::string g_name;
  std::string h_id;
  std::string h_name;

  friend bool operator==(ScanRow const &, ScanRow const &) = default;
};

struct ScanOptions
{
  bool include_abelian = false;
};

/// Every (G, isomorphism type of H) with |G| = order, (G:H) = 2 and G
/// generated by the involutions outside H. Sorted by (G id, H id).
/// Requires the catalog to be complete for `order` and `order / 2`.
std::vector<ScanRow> scan_catalog(std::size_t order, Catalog const &catalog, ScanOptions options = {});

} // namespace capgap

#endif // CAPGAP_CRITERIA_HPP
