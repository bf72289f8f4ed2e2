#ifndef CAPGAP_TRANSFER_HPP
#define CAPGAP_TRANSFER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "capgap/group.hpp"

namespace capgap {

/// The transfer Ver: G/G' -> H/H' for a subgroup H of index 2.
///
/// With coset representatives r_1 = 1 and r_2 = the least element outside H,
/// write g*r_i = r_pi(i) * h_i; then Ver(g) = h_1 h_2 H'.
class TransferMap
{
public:
  TransferMap(PermutationGroup g, SubgroupHandle h);

  PermutationGroup const &group() const { return group_; }
  SubgroupHandle const &subgroup() const { return subgroup_; }
  /// H' as a subgroup of G.
  SubgroupHandle const &subgroup_derived() const { return subgroup_derived_; }
  std::pair<ElementId, ElementId> representatives() const { return {PermutationGroup::identity(), outside_}; }

  /// The product h_1 h_2, an element of H.
  ElementId product(ElementId g) const;
  /// Least element of the coset Ver(g) = h_1 h_2 H'.
  ElementId image(ElementId g) const;
  /// Preimage in G of the kernel; always contains G'.
  SubgroupHandle kernel() const;

private:
  PermutationGroup group_;
  SubgroupHandle subgroup_;
  SubgroupHandle subgroup_derived_;
  ElementId outside_ = 0;
};

TransferMap transfer_map(PermutationGroup const &g, SubgroupHandle const &h);

/// Least element of the coset x*N.
ElementId coset_representative(SubgroupHandle const &n, ElementId x);

struct CapitulationGap
{
  bool has_gap = false;
  /// Least element of the witness coset wG', if any.
  std::optional<ElementId> witness;
  ElementSet witness_coset;
};

struct TransferEntry
{
  SubgroupHandle subgroup;
  /// (least element of a coset of G', least element of its image coset of H')
  std::vector<std::pair<ElementId, ElementId>> images;
  SubgroupHandle kernel;
};

struct TransferReport
{
  SubgroupHandle derived;
  std::vector<TransferEntry> entries; // one per index-2 subgroup
  CapitulationGap gap;
};

/// Transfers to every index-2 subgroup and the capitulation-gap verdict:
/// the gap exists iff some element of order 2 in G/G' lies in no transfer
/// kernel. The witness is the coset with the least representative.
TransferReport transfer_report(PermutationGroup const &g);

CapitulationGap capitulation_gap(PermutationGroup const &g);

} // namespace capgap

#endif // CAPGAP_TRANSFER_HPP
