#ifndef CAPGAP_GROUP_HPP
#define CAPGAP_GROUP_HPP

#include <bitset>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "capgap/coset_enumeration.hpp"
#include "capgap/permutation.hpp"
#include "capgap/presentation.hpp"

namespace capgap {

inline constexpr std::size_t kMaxGroupOrder = 256;

/// Position of an element in the group's sorted element list. The sort is
/// lexicographic on permutation images, so the identity is always 0.
using ElementId = std::uint16_t;
using ElementSet = std::bitset<kMaxGroupOrder>;

/// A finite permutation group with all elements enumerated and a full
/// multiplication table. Immutable and cheap to copy.
class PermutationGroup
{
public:
  PermutationGroup() = default;
  explicit PermutationGroup(std::vector<Permutation> generators, std::string name = {});

  /// Regular representation obtained by enumerating the cosets of the
  /// trivial subgroup.
  static PermutationGroup from_presentation(Presentation const &p,
                                            std::size_t max_cosets = kDefaultMaxCosets);

  std::string const &name() const;
  std::size_t order() const;
  std::size_t degree() const;

  std::vector<Permutation> const &generators() const;
  std::vector<ElementId> const &generator_ids() const;

  Permutation const &element(ElementId e) const;
  std::optional<ElementId> find(Permutation const &p) const;
  /// Throws std::invalid_argument when `p` is not an element.
  ElementId id_of(Permutation const &p) const;

  static constexpr ElementId identity() { return 0; }
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const;
  ElementId power(ElementId a, long long exponent) const;
  ElementId commutator(ElementId a, ElementId b) const;
  ElementId conjugate(ElementId a, ElementId by) const;
  std::size_t element_order(ElementId a) const;

  bool is_abelian() const;
  ElementSet all() const;

  bool same_group(PermutationGroup const &other) const { return data_ == other.data_; }

private:
  struct Data;
  std::shared_ptr<Data const> data_;
  Data const &data() const;
};

/// A subgroup given by its element set inside a fixed parent group.
class SubgroupHandle
{
public:
  SubgroupHandle(PermutationGroup parent, ElementSet members);

  PermutationGroup const &parent() const { return parent_; }
  ElementSet const &members() const { return members_; }
  std::vector<ElementId> elements() const;
  std::size_t order() const { return members_.count(); }
  std::size_t index() const { return parent_.order() / order(); }
  bool contains(ElementId e) const { return members_.test(e); }
  bool contains(SubgroupHandle const &other) const;

  /// The subgroup as a group in its own right, on the parent's points.
  PermutationGroup as_group(std::string name = {}) const;

  friend bool operator==(SubgroupHandle const &a, SubgroupHandle const &b)
  {
    return a.parent_.same_group(b.parent_) && a.members_ == b.members_;
  }

private:
  PermutationGroup parent_;
  ElementSet members_;
};

/// Least k >= 1 with g^k = 1. Throws std::invalid_argument if g is not in G.
std::size_t element_order(PermutationGroup const &g, Permutation const &x);

SubgroupHandle subgroup_closure(PermutationGroup const &g, std::span<ElementId const> generators);
SubgroupHandle subgroup_closure(PermutationGroup const &g, std::span<Permutation const> generators);
SubgroupHandle trivial_subgroup(PermutationGroup const &g);
SubgroupHandle whole_group(PermutationGroup const &g);

bool is_normal(SubgroupHandle const &n);
SubgroupHandle derived_subgroup(PermutationGroup const &g);
SubgroupHandle center(PermutationGroup const &g);
/// G'G^2, the smallest normal subgroup with elementary abelian 2-quotient.
SubgroupHandle derived_times_squares(PermutationGroup const &g);

/// Every subgroup of index 2, ordered by their sorted element lists.
std::vector<SubgroupHandle> index_two_subgroups(PermutationGroup const &g);

/// The coset n*x as an element set.
ElementSet coset_of(SubgroupHandle const &n, ElementId x);

/// Invariant factors d_1 | d_2 | ... of G/N. Throws std::invalid_argument if
/// N is not normal or G/N is not abelian.
std::vector<std::uint64_t> abelian_invariants(PermutationGroup const &g, SubgroupHandle const &n);

/// Invariant factors of a finite abelian group given the multiset of its
/// element orders.
std::vector<std::uint64_t> invariant_factors_from_orders(std::span<std::uint64_t const> element_orders);

/// Sizes of the conjugacy classes, sorted ascending.
std::vector<std::size_t> conjugacy_class_sizes(PermutationGroup const &g);

/// A generating set built greedily: each new element lies outside the
/// subgroup generated so far. For 2-groups the elements are chosen outside
/// the Frattini subgroup first, so the set has minimal size.
std::vector<ElementId> small_generating_set(PermutationGroup const &g);

} // namespace capgap

#endif // CAPGAP_GROUP_HPP
