#ifndef CAPGAP_FAMILIES_HPP
#define CAPGAP_FAMILIES_HPP

#include <string>
#include <vector>

#include "capgap/catalog.hpp"
#include "capgap/group.hpp"
#include "capgap/presentation.hpp"

namespace capgap {

/// Semidihedral and modular groups of order 2^n = 4m, both C_{2m} x| C_2:
///   SD_{2^n} = <s, t : s^{2m} = t^2 = 1, t s t = s^{m-1}>
///   MD_n(2)  = <s, t : s^{2m} = t^2 = 1, t s t = s^{m+1}>
enum class MetacyclicKind { semidihedral, modular };

struct MetacyclicGroup
{
  MetacyclicKind kind;
  int n = 0;
  long long m = 0;
  Presentation presentation;
  PermutationGroup group;
  ElementId sigma = 0;
  ElementId tau = 0;

  /// s^i t^j.
  ElementId element(long long i, int j) const;
};

Presentation semidihedral_presentation(int n);
Presentation modular_presentation(int n);

/// Realizes the group by coset enumeration. Requires 4 <= n <= 8.
MetacyclicGroup build_metacyclic(MetacyclicKind kind, int n);
inline MetacyclicGroup semidihedral(int n) { return build_metacyclic(MetacyclicKind::semidihedral, n); }
inline MetacyclicGroup modular(int n) { return build_metacyclic(MetacyclicKind::modular, n); }

/// Normal-form label "s^i*t^j" of an element (i in [0, 2m), j in {0, 1}).
std::string normal_form(MetacyclicGroup const &g, ElementId e);

/// Shortest label of the coset e*N: the normal form of its least-exponent
/// member.
std::string coset_label(MetacyclicGroup const &g, SubgroupHandle const &n, ElementId e);

/// Label "<w>" of a subgroup K containing N with K = <w>N for the first word w
/// among s^i, s^i*t, t*s^i (i = 0, 1, ...). Falls back to listing the
/// normal forms when K/N is not cyclic.
std::string cyclic_label(MetacyclicGroup const &g, SubgroupHandle const &n, SubgroupHandle const &k);

/// The three maximal subgroups <s>, <s^2, t>, <s^2, s*t>, in that order.
std::vector<SubgroupHandle> maximal_subgroups(MetacyclicGroup const &g);

/// C_{2^{n-1}} x| Aut(C_{2^{n-1}})[2]:
///   <a, x, y : a^{2m} = x^2 = y^2 = (xy)^2 = 1, x a x = a^-1, y a y = a^{m+1}>
Presentation holomorph_presentation(int n);

/// <r, s, t : r^2 = t^2 = s^{2m} = 1, r s r = s^-1, r t r = t, t s t = s^{m-1}>
/// (modular = false) or with t s t = s^{m+1} (modular = true).
Presentation extension_presentation(int n, bool modular);

struct HolomorphFamily
{
  int n = 0;
  long long m = 0;
  PermutationGroup group;
  ElementId a = 0;
  ElementId x = 0;
  ElementId y = 0;
  SubgroupHandle sd_subgroup; // <a, xy>
  SubgroupHandle md_subgroup; // <a, y>
};

/// Requires 4 <= n <= 7 (order 2^{n+1} <= 256).
HolomorphFamily build_holomorph_family(int n);

enum class Dt1Mode { automatic, existence_only, uniqueness };

struct Dt1Report
{
  int n = 0;
  bool sd_isomorphic = false;
  bool md_isomorphic = false;
  bool sd_generated = false;
  bool md_generated = false;
  bool uniqueness_checked = false;
  std::string family_id; // catalog id of the realized group, when known
  std::vector<std::string> sd_overgroups;
  std::vector<std::string> md_overgroups;

  bool existence() const { return sd_isomorphic && md_isomorphic && sd_generated && md_generated; }
  /// Exactly one overgroup for each subgroup type, and it is the same group.
  bool uniqueness() const;
};

/// Existence: <a, xy> ~ SD_{2^n}, <a, y> ~ MD_n(2), and the group is generated
/// by involutions outside each. Uniqueness (when a catalog of order 2^{n+1} is
/// available, or demanded): every catalog group with an index-2 subgroup of
/// either type and the involution property is collected.
Dt1Report verify_dt1_uniqueness(int n, Catalog const &catalog, Dt1Mode mode = Dt1Mode::automatic);

} // namespace capgap

#endif // CAPGAP_FAMILIES_HPP
