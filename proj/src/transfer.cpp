#include "capgap/transfer.hpp"

#include <stdexcept>

namespace capgap {

TransferMap::TransferMap(PermutationGroup g, SubgroupHandle h)
  : group_(std::move(g)), subgroup_(std::move(h)), subgroup_derived_(trivial_subgroup(group_))
{
  if (!subgroup_.parent().same_group(group_))
    throw std::invalid_argument("subgroup belongs to a different group");
  if (subgroup_.order() * 2 != group_.order())
    throw std::invalid_argument("transfer is only implemented for subgroups of index 2");

  for (std::size_t a = 0; a < group_.order(); ++a) {
    if (!subgroup_.contains(static_cast<ElementId>(a))) {
      outside_ = static_cast<ElementId>(a);
      break;
    }
  }

  std::vector<ElementId> commutators;
  auto elements = subgroup_.elements();
  for (ElementId x : elements) {
    for (ElementId y : elements)
      commutators.push_back(group_.commutator(x, y));
  }
  subgroup_derived_ = subgroup_closure(group_, commutators);
}

ElementId TransferMap::product(ElementId g) const
{
  ElementId const reps[2] = {PermutationGroup::identity(), outside_};
  ElementId result = PermutationGroup::identity();
  for (ElementId r : reps) {
    ElementId gr = group_.multiply(g, r);
    ElementId target = subgroup_.contains(gr) ? reps[0] : reps[1];
    ElementId h = group_.multiply(group_.inverse(target), gr);
    result = group_.multiply(result, h);
  }
  return result;
}

ElementId TransferMap::image(ElementId g) const
{
  return coset_representative(subgroup_derived_, product(g));
}

SubgroupHandle TransferMap::kernel() const
{
  ElementSet members;
  for (std::size_t a = 0; a < group_.order(); ++a) {
    if (subgroup_derived_.contains(product(static_cast<ElementId>(a))))
      members.set(a);
  }
  return SubgroupHandle(group_, members);
}

TransferMap transfer_map(PermutationGroup const &g, SubgroupHandle const &h)
{
  return TransferMap(g, h);
}

ElementId coset_representative(SubgroupHandle const &n, ElementId x)
{
  ElementSet coset = coset_of(n, x);
  for (std::size_t a = 0; a < n.parent().order(); ++a) {
    if (coset.test(a))
      return static_cast<ElementId>(a);
  }
  throw std::logic_error("empty coset");
}

TransferReport transfer_report(PermutationGroup const &g)
{
  TransferReport report{derived_subgroup(g), {}, {}};

  std::vector<ElementId> coset_reps;
  ElementSet covered;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (covered.test(a))
      continue;
    covered |= coset_of(report.derived, static_cast<ElementId>(a));
    coset_reps.push_back(static_cast<ElementId>(a));
  }

  for (SubgroupHandle const &h : index_two_subgroups(g)) {
    TransferMap ver(g, h);
    TransferEntry entry{h, {}, ver.kernel()};
    for (ElementId r : coset_reps)
      entry.images.emplace_back(r, ver.image(r));
    report.entries.push_back(std::move(entry));
  }

  // elements of order 2 in G/G': cosets rG' with r outside G' and r^2 in G'
  for (ElementId r : coset_reps) {
    if (report.derived.contains(r) || !report.derived.contains(g.multiply(r, r)))
      continue;
    bool captured = false;
    for (auto const &entry : report.entries) {
      if (entry.kernel.contains(r)) {
        captured = true;
        break;
      }
    }
    if (!captured) {
      report.gap.has_gap = true;
      report.gap.witness = r;
      report.gap.witness_coset = coset_of(report.derived, r);
      break;
    }
  }
  return report;
}

CapitulationGap capitulation_gap(PermutationGroup const &g) { return transfer_report(g).gap; }

} // namespace capgap
