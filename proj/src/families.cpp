#include "capgap/families.hpp"

#include <stdexcept>

#include "capgap/criteria.hpp"
#include "capgap/isomorphism.hpp"

namespace capgap {

namespace {

long long half_order_exponent(int n) { return 1LL << (n - 2); }

Presentation metacyclic_presentation(std::string name, int n, long long twist)
{
  long long m = half_order_exponent(n);
  Presentation p{std::move(name), {"s", "t"}, {}};
  p.relators.push_back(generator_word(0, 2 * m));
  p.relators.push_back(generator_word(1, 2));
  // t s t = s^twist
  p.relators.push_back(generator_word(1) * generator_word(0) * generator_word(1) *
                       generator_word(0, -twist));
  return p;
}

} // namespace

Presentation semidihedral_presentation(int n)
{
  if (n < 4)
    throw std::invalid_argument("semidihedral groups need n >= 4");
  return metacyclic_presentation("SD" + std::to_string(1LL << n), n, half_order_exponent(n) - 1);
}

Presentation modular_presentation(int n)
{
  if (n < 4)
    throw std::invalid_argument("modular groups need n >= 4");
  return metacyclic_presentation("MD" + std::to_string(n), n, half_order_exponent(n) + 1);
}

ElementId MetacyclicGroup::element(long long i, int j) const
{
  return group.multiply(group.power(sigma, i), group.power(tau, j));
}

MetacyclicGroup build_metacyclic(MetacyclicKind kind, int n)
{
  if (n < 4 || n > 8)
    throw std::invalid_argument("metacyclic family needs 4 <= n <= 8");
  MetacyclicGroup g{kind, n, half_order_exponent(n), {}, {}, 0, 0};
  g.presentation = kind == MetacyclicKind::semidihedral ? semidihedral_presentation(n)
                                                        : modular_presentation(n);
  g.group = PermutationGroup::from_presentation(g.presentation);
  g.sigma = g.group.generator_ids()[0];
  g.tau = g.group.generator_ids()[1];
  return g;
}

std::string normal_form(MetacyclicGroup const &g, ElementId e)
{
  for (long long i = 0; i < 2 * g.m; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (g.element(i, j) != e)
        continue;
      std::string out;
      if (i == 1)
        out = "s";
      else if (i > 1)
        out = "s^" + std::to_string(i);
      if (j)
        out += out.empty() ? "t" : "*t";
      return out.empty() ? "1" : out;
    }
  }
  throw std::invalid_argument("element is not in normal form s^i t^j");
}

std::string coset_label(MetacyclicGroup const &g, SubgroupHandle const &n, ElementId e)
{
  ElementSet coset = coset_of(n, e);
  for (int j = 0; j < 2; ++j) {
    for (long long i = 0; i < 2 * g.m; ++i) {
      ElementId x = g.element(i, j);
      if (coset.test(x))
        return normal_form(g, x);
    }
  }
  throw std::logic_error("coset without normal-form member");
}

std::string cyclic_label(MetacyclicGroup const &g, SubgroupHandle const &n, SubgroupHandle const &k)
{
  auto generated = [&](ElementId w) {
    std::vector<ElementId> gens = n.elements();
    gens.push_back(w);
    return subgroup_closure(g.group, gens) == k;
  };
  for (long long i = 0; i < 2 * g.m; ++i) {
    std::string s = i == 0 ? "" : (i == 1 ? "s" : "s^" + std::to_string(i));
    if (generated(g.element(i, 0)))
      return "<" + (s.empty() ? std::string("1") : s) + ">";
    if (generated(g.element(i, 1)))
      return "<" + (s.empty() ? std::string("t") : s + "*t") + ">";
    if (i > 0 && generated(g.group.multiply(g.tau, g.group.power(g.sigma, i))))
      return "<t*" + s + ">";
  }
  std::string out = "{";
  ElementSet covered;
  for (ElementId e : k.elements()) {
    if (covered.test(e))
      continue;
    covered |= coset_of(n, e);
    out += (out.size() > 1 ? "," : "") + coset_label(g, n, e);
  }
  return out + "}";
}

std::vector<SubgroupHandle> maximal_subgroups(MetacyclicGroup const &g)
{
  ElementId s = g.sigma;
  ElementId s2 = g.group.multiply(s, s);
  ElementId st = g.group.multiply(s, g.tau);
  std::vector<ElementId> h1{s}, h2{s2, g.tau}, h3{s2, st};
  return {subgroup_closure(g.group, h1), subgroup_closure(g.group, h2), subgroup_closure(g.group, h3)};
}

Presentation holomorph_presentation(int n)
{
  if (n < 4)
    throw std::invalid_argument("holomorph family needs n >= 4");
  long long m = half_order_exponent(n);
  Presentation p{"Hol" + std::to_string(n), {"a", "x", "y"}, {}};
  Word a = generator_word(0), x = generator_word(1), y = generator_word(2);
  p.relators = {power(a, 2 * m), power(x, 2), power(y, 2), power(x * y, 2),
                x * a * x * a,                      // x a x = a^-1
                y * a * y * power(a, -(m + 1))};    // y a y = a^{m+1}
  return p;
}

Presentation extension_presentation(int n, bool modular)
{
  if (n < 4)
    throw std::invalid_argument("extension family needs n >= 4");
  long long m = half_order_exponent(n);
  Presentation p{std::string(modular ? "Gamma2_" : "Gamma1_") + std::to_string(n), {"r", "s", "t"}, {}};
  Word r = generator_word(0), s = generator_word(1), t = generator_word(2);
  p.relators = {power(r, 2), power(t, 2), power(s, 2 * m),
                r * s * r * s,                 // r s r = s^-1
                r * t * r * inverse(t),        // r t r = t
                t * s * t * power(s, -(modular ? m + 1 : m - 1))};
  return p;
}

HolomorphFamily build_holomorph_family(int n)
{
  if (n < 4)
    throw std::invalid_argument("holomorph family needs n >= 4 (m = 2^(n-2) >= 4)");
  if (n > 7)
    throw std::invalid_argument("holomorph family of order 2^(n+1) > 256 is out of range");
  HolomorphFamily f{n, half_order_exponent(n), {}, 0, 0, 0,
                    SubgroupHandle({}, {}), SubgroupHandle({}, {})};
  f.group = PermutationGroup::from_presentation(holomorph_presentation(n));
  f.a = f.group.generator_ids()[0];
  f.x = f.group.generator_ids()[1];
  f.y = f.group.generator_ids()[2];
  std::vector<ElementId> sd{f.a, f.group.multiply(f.x, f.y)};
  std::vector<ElementId> md{f.a, f.y};
  f.sd_subgroup = subgroup_closure(f.group, sd);
  f.md_subgroup = subgroup_closure(f.group, md);
  return f;
}

bool Dt1Report::uniqueness() const
{
  return uniqueness_checked && sd_overgroups.size() == 1 && md_overgroups == sd_overgroups &&
         (family_id.empty() || sd_overgroups.front() == family_id);
}

Dt1Report verify_dt1_uniqueness(int n, Catalog const &catalog, Dt1Mode mode)
{
  HolomorphFamily family = build_holomorph_family(n);
  MetacyclicGroup sd = semidihedral(n);
  MetacyclicGroup md = modular(n);
  Fingerprint const sd_fp = fingerprint(sd.group);
  Fingerprint const md_fp = fingerprint(md.group);

  Dt1Report report;
  report.n = n;
  PermutationGroup sd_sub = family.sd_subgroup.as_group();
  PermutationGroup md_sub = family.md_subgroup.as_group();
  report.sd_isomorphic = family.sd_subgroup.index() == 2 &&
                         is_isomorphic(sd_sub, fingerprint(sd_sub), sd.group, sd_fp);
  report.md_isomorphic = family.md_subgroup.index() == 2 &&
                         is_isomorphic(md_sub, fingerprint(md_sub), md.group, md_fp);
  report.sd_generated = family.sd_subgroup.index() == 2 &&
                        involution_generated_outside(family.group, family.sd_subgroup).generates;
  report.md_generated = family.md_subgroup.index() == 2 &&
                        involution_generated_outside(family.group, family.md_subgroup).generates;

  std::size_t const order = std::size_t{1} << (n + 1);
  bool const have_catalog = catalog.has_order(order);
  if (mode == Dt1Mode::uniqueness && !have_catalog)
    throw CatalogError("no catalog of order " + std::to_string(order) + " for the uniqueness check");
  if (mode == Dt1Mode::existence_only || !have_catalog)
    return report;

  auto entries = catalog.of_order(order);
  report.family_id = identify_in_catalog(family.group, entries).id;
  report.uniqueness_checked = true;
  for (CatalogEntry const &entry : entries) {
    bool sd_hit = false, md_hit = false;
    for (SubgroupHandle const &h : index_two_subgroups(entry.group)) {
      PermutationGroup hg = h.as_group();
      Fingerprint const fp = fingerprint(hg);
      bool is_sd = !sd_hit && is_isomorphic(hg, fp, sd.group, sd_fp);
      bool is_md = !md_hit && is_isomorphic(hg, fp, md.group, md_fp);
      if (!is_sd && !is_md)
        continue;
      if (!involution_generated_outside(entry.group, h).generates)
        continue;
      sd_hit = sd_hit || is_sd;
      md_hit = md_hit || is_md;
    }
    if (sd_hit)
      report.sd_overgroups.push_back(entry.id);
    if (md_hit)
      report.md_overgroups.push_back(entry.id);
  }
  return report;
}

} // namespace capgap
