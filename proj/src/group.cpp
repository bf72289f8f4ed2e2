#include "capgap/group.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace capgap {

struct PermutationGroup::Data
{
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<ElementId> generator_ids;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, ElementId, PermutationHash> index;
  std::vector<ElementId> table; // table[a * n + b] = a * b
  std::vector<ElementId> inverses;
  std::vector<std::size_t> orders;
};

PermutationGroup::PermutationGroup(std::vector<Permutation> generators, std::string name)
{
  if (generators.empty())
    throw std::invalid_argument("a permutation group needs at least one generator");
  std::size_t degree = generators.front().degree();
  for (auto const &g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generators have different degrees");
  }

  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->degree = degree;
  d->generators = std::move(generators);

  // closure under right multiplication by generators
  std::vector<Permutation> found{Permutation::identity(degree)};
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen{{found.front(), 0}};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto const &g : d->generators) {
      Permutation next = found[i] * g;
      if (seen.contains(next))
        continue;
      if (found.size() == kMaxGroupOrder)
        throw std::length_error("group order exceeds " + std::to_string(kMaxGroupOrder));
      seen.emplace(next, found.size());
      found.push_back(std::move(next));
    }
  }

  std::sort(found.begin(), found.end());
  std::size_t const n = found.size();
  d->elements = std::move(found);
  for (std::size_t i = 0; i < n; ++i)
    d->index.emplace(d->elements[i], static_cast<ElementId>(i));
  for (auto const &g : d->generators)
    d->generator_ids.push_back(d->index.at(g));

  std::size_t const k = d->generators.size();
  std::vector<ElementId> right(n * k);
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t j = 0; j < k; ++j)
      right[e * k + j] = d->index.at(d->elements[e] * d->generators[j]);
  }

  // spanning tree: every element b != 1 is parent(b) * generator(b)
  std::vector<ElementId> bfs{0};
  std::vector<std::pair<ElementId, std::size_t>> parent(n, {0, 0});
  std::vector<bool> reached(n, false);
  reached[0] = true;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      ElementId b = right[bfs[i] * k + j];
      if (!reached[b]) {
        reached[b] = true;
        parent[b] = {bfs[i], j};
        bfs.push_back(b);
      }
    }
  }

  d->table.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    d->table[a * n] = static_cast<ElementId>(a);
    for (std::size_t i = 1; i < n; ++i) {
      ElementId b = bfs[i];
      auto [p, j] = parent[b];
      d->table[a * n + b] = right[d->table[a * n + p] * k + j];
    }
  }

  d->inverses.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (d->table[a * n + b] == 0) {
        d->inverses[a] = static_cast<ElementId>(b);
        break;
      }
    }
  }

  d->orders.assign(n, 1);
  for (std::size_t a = 1; a < n; ++a) {
    ElementId x = static_cast<ElementId>(a);
    std::size_t ord = 1;
    while (x != 0) {
      x = d->table[x * n + a];
      ++ord;
    }
    d->orders[a] = ord;
  }

  data_ = std::move(d);
}

PermutationGroup PermutationGroup::from_presentation(Presentation const &p, std::size_t max_cosets)
{
  CosetAction action = coset_enumerate(p, {}, max_cosets);
  if (action.coset_count > kMaxGroupOrder)
    throw std::length_error("group order exceeds " + std::to_string(kMaxGroupOrder));
  return PermutationGroup(std::move(action.generator_images), p.name);
}

PermutationGroup::Data const &PermutationGroup::data() const
{
  if (!data_)
    throw std::logic_error("empty PermutationGroup");
  return *data_;
}

std::string const &PermutationGroup::name() const { return data().name; }
std::size_t PermutationGroup::order() const { return data().elements.size(); }
std::size_t PermutationGroup::degree() const { return data().degree; }
std::vector<Permutation> const &PermutationGroup::generators() const { return data().generators; }
std::vector<ElementId> const &PermutationGroup::generator_ids() const { return data().generator_ids; }
Permutation const &PermutationGroup::element(ElementId e) const { return data().elements.at(e); }

std::optional<ElementId> PermutationGroup::find(Permutation const &p) const
{
  auto it = data().index.find(p);
  if (it == data().index.end())
    return std::nullopt;
  return it->second;
}

ElementId PermutationGroup::id_of(Permutation const &p) const
{
  if (auto e = find(p))
    return *e;
  throw std::invalid_argument("permutation is not an element of the group");
}

ElementId PermutationGroup::multiply(ElementId a, ElementId b) const
{
  return data().table[static_cast<std::size_t>(a) * order() + b];
}

ElementId PermutationGroup::inverse(ElementId a) const { return data().inverses[a]; }

ElementId PermutationGroup::power(ElementId a, long long exponent) const
{
  long long ord = static_cast<long long>(element_order(a));
  long long e = ((exponent % ord) + ord) % ord;
  ElementId result = identity();
  for (long long i = 0; i < e; ++i)
    result = multiply(result, a);
  return result;
}

ElementId PermutationGroup::commutator(ElementId a, ElementId b) const
{
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

ElementId PermutationGroup::conjugate(ElementId a, ElementId by) const
{
  return multiply(multiply(inverse(by), a), by);
}

std::size_t PermutationGroup::element_order(ElementId a) const { return data().orders[a]; }

bool PermutationGroup::is_abelian() const
{
  auto const &gens = generator_ids();
  for (ElementId a : gens) {
    for (ElementId b : gens) {
      if (multiply(a, b) != multiply(b, a))
        return false;
    }
  }
  return true;
}

ElementSet PermutationGroup::all() const
{
  ElementSet s;
  for (std::size_t i = 0; i < order(); ++i)
    s.set(i);
  return s;
}

SubgroupHandle::SubgroupHandle(PermutationGroup parent, ElementSet members)
  : parent_(std::move(parent)), members_(members)
{}

std::vector<ElementId> SubgroupHandle::elements() const
{
  std::vector<ElementId> out;
  out.reserve(order());
  for (std::size_t i = 0; i < parent_.order(); ++i) {
    if (members_.test(i))
      out.push_back(static_cast<ElementId>(i));
  }
  return out;
}

bool SubgroupHandle::contains(SubgroupHandle const &other) const
{
  return (other.members_ & ~members_).none();
}

PermutationGroup SubgroupHandle::as_group(std::string name) const
{
  std::vector<ElementId> gens;
  ElementSet span;
  span.set(0);
  for (ElementId e : elements()) {
    if (span.test(e))
      continue;
    gens.push_back(e);
    span = subgroup_closure(parent_, gens).members();
  }
  std::vector<Permutation> perms;
  for (ElementId e : gens)
    perms.push_back(parent_.element(e));
  if (perms.empty())
    perms.push_back(Permutation::identity(parent_.degree()));
  return PermutationGroup(std::move(perms), std::move(name));
}

std::size_t element_order(PermutationGroup const &g, Permutation const &x)
{
  return g.element_order(g.id_of(x));
}

SubgroupHandle subgroup_closure(PermutationGroup const &g, std::span<ElementId const> generators)
{
  ElementSet members;
  members.set(0);
  std::vector<ElementId> queue{0};
  for (ElementId x : generators) {
    if (x >= g.order())
      throw std::invalid_argument("element outside the group");
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (ElementId x : generators) {
      ElementId y = g.multiply(queue[i], x);
      if (!members.test(y)) {
        members.set(y);
        queue.push_back(y);
      }
    }
  }
  return SubgroupHandle(g, members);
}

SubgroupHandle subgroup_closure(PermutationGroup const &g, std::span<Permutation const> generators)
{
  std::vector<ElementId> ids;
  for (auto const &p : generators)
    ids.push_back(g.id_of(p));
  return subgroup_closure(g, ids);
}

SubgroupHandle trivial_subgroup(PermutationGroup const &g)
{
  ElementSet s;
  s.set(0);
  return SubgroupHandle(g, s);
}

SubgroupHandle whole_group(PermutationGroup const &g) { return SubgroupHandle(g, g.all()); }

bool is_normal(SubgroupHandle const &n)
{
  PermutationGroup const &g = n.parent();
  for (ElementId x : n.elements()) {
    for (ElementId t : g.generator_ids()) {
      if (!n.contains(g.conjugate(x, t)))
        return false;
    }
  }
  return true;
}

SubgroupHandle derived_subgroup(PermutationGroup const &g)
{
  std::vector<ElementId> commutators;
  ElementSet seen;
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = a + 1; b < g.order(); ++b) {
      ElementId c = g.commutator(static_cast<ElementId>(a), static_cast<ElementId>(b));
      if (!seen.test(c)) {
        seen.set(c);
        commutators.push_back(c);
      }
    }
  }
  return subgroup_closure(g, commutators);
}

SubgroupHandle center(PermutationGroup const &g)
{
  ElementSet s;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (ElementId t : g.generator_ids()) {
      if (g.multiply(static_cast<ElementId>(a), t) != g.multiply(t, static_cast<ElementId>(a))) {
        central = false;
        break;
      }
    }
    if (central)
      s.set(a);
  }
  return SubgroupHandle(g, s);
}

SubgroupHandle derived_times_squares(PermutationGroup const &g)
{
  std::vector<ElementId> gens = derived_subgroup(g).elements();
  for (std::size_t a = 0; a < g.order(); ++a)
    gens.push_back(g.multiply(static_cast<ElementId>(a), static_cast<ElementId>(a)));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return subgroup_closure(g, gens);
}

ElementSet coset_of(SubgroupHandle const &n, ElementId x)
{
  ElementSet s;
  for (ElementId h : n.elements())
    s.set(n.parent().multiply(h, x));
  return s;
}

std::vector<SubgroupHandle> index_two_subgroups(PermutationGroup const &g)
{
  SubgroupHandle m = derived_times_squares(g);
  std::size_t quotient = g.order() / m.order();
  if (quotient == 1)
    return {};

  // basis of the elementary abelian quotient G/M
  std::vector<ElementId> basis;
  std::vector<ElementId> spanning = m.elements();
  ElementSet span = m.members();
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (span.test(a))
      continue;
    basis.push_back(static_cast<ElementId>(a));
    spanning.push_back(static_cast<ElementId>(a));
    span = subgroup_closure(g, spanning).members();
  }
  std::size_t const rank = basis.size();

  // coordinates of every element with respect to the basis
  std::vector<std::uint32_t> coords(g.order(), 0);
  for (std::uint32_t s = 0; s < (1u << rank); ++s) {
    ElementId rep = g.identity();
    for (std::size_t i = 0; i < rank; ++i) {
      if (s & (1u << i))
        rep = g.multiply(rep, basis[i]);
    }
    for (ElementId x : m.elements())
      coords[g.multiply(x, rep)] = s;
  }

  std::vector<SubgroupHandle> result;
  for (std::uint32_t functional = 1; functional < (1u << rank); ++functional) {
    ElementSet kernel;
    for (std::size_t a = 0; a < g.order(); ++a) {
      if (std::popcount(functional & coords[a]) % 2 == 0)
        kernel.set(a);
    }
    result.emplace_back(g, kernel);
  }
  std::sort(result.begin(), result.end(), [](SubgroupHandle const &x, SubgroupHandle const &y) {
    return x.elements() < y.elements();
  });
  return result;
}

std::vector<std::uint64_t> invariant_factors_from_orders(std::span<std::uint64_t const> element_orders)
{
  std::uint64_t const n = element_orders.size();
  if (n == 0)
    throw std::invalid_argument("empty group");

  // prime-power parts: for each prime p, the sizes of the cyclic p-factors
  std::map<std::uint64_t, std::vector<std::uint64_t>> parts;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; rest > 1; ++p) {
    if (rest % p)
      continue;
    while (rest % p == 0)
      rest /= p;
    // s[k] = log_p #{x : x^(p^k) = 1}
    std::vector<std::uint64_t> s{0};
    std::uint64_t pk = 1;
    for (;;) {
      pk *= p;
      std::uint64_t count = 0;
      for (std::uint64_t o : element_orders)
        count += (pk % o == 0) ? 1 : 0;
      std::uint64_t e = 0;
      for (std::uint64_t c = count; c > 1; c /= p)
        ++e;
      if (e == s.back())
        break;
      s.push_back(e);
    }
    // number of cyclic factors of order >= p^k is s[k] - s[k-1]
    std::vector<std::uint64_t> at_least;
    for (std::size_t k = 1; k < s.size(); ++k)
      at_least.push_back(s[k] - s[k - 1]);
    std::vector<std::uint64_t> factors;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      std::uint64_t exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
      std::uint64_t size = 1;
      for (std::size_t i = 0; i <= k; ++i)
        size *= p;
      factors.insert(factors.end(), exactly, size);
    }
    std::sort(factors.begin(), factors.end(), std::greater<>());
    parts[p] = factors;
  }

  std::size_t count = 0;
  for (auto const &[p, f] : parts)
    count = std::max(count, f.size());
  std::vector<std::uint64_t> result(count, 1);
  for (auto const &[p, f] : parts) {
    for (std::size_t i = 0; i < f.size(); ++i)
      result[count - 1 - i] *= f[i];
  }
  std::uint64_t product = std::accumulate(result.begin(), result.end(), std::uint64_t{1},
                                          std::multiplies<>());
  if (product != n)
    throw std::invalid_argument("element orders do not describe an abelian group");
  return result;
}

std::vector<std::uint64_t> abelian_invariants(PermutationGroup const &g, SubgroupHandle const &n)
{
  if (!n.parent().same_group(g))
    throw std::invalid_argument("subgroup belongs to a different group");
  if (!is_normal(n))
    throw std::invalid_argument("subgroup is not normal");
  for (ElementId a : g.generator_ids()) {
    for (ElementId b : g.generator_ids()) {
      if (!n.contains(g.commutator(a, b)))
        throw std::invalid_argument("quotient is not abelian");
    }
  }

  std::vector<std::uint64_t> orders;
  ElementSet covered;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (covered.test(a))
      continue;
    covered |= coset_of(n, static_cast<ElementId>(a));
    std::uint64_t k = 1;
    ElementId x = static_cast<ElementId>(a);
    while (!n.contains(x)) {
      x = g.multiply(x, static_cast<ElementId>(a));
      ++k;
    }
    orders.push_back(k);
  }
  if (orders.size() == 1)
    return {};
  return invariant_factors_from_orders(orders);
}

std::vector<std::size_t> conjugacy_class_sizes(PermutationGroup const &g)
{
  std::vector<std::size_t> sizes;
  std::vector<bool> done(g.order(), false);
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (done[a])
      continue;
    std::vector<ElementId> orbit{static_cast<ElementId>(a)};
    done[a] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (ElementId t : g.generator_ids()) {
        ElementId c = g.conjugate(orbit[i], t);
        if (!done[c]) {
          done[c] = true;
          orbit.push_back(c);
        }
      }
    }
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<ElementId> small_generating_set(PermutationGroup const &g)
{
  bool two_group = std::has_single_bit(g.order());
  ElementSet span;
  std::vector<ElementId> spanning;
  if (two_group) {
    SubgroupHandle frattini = derived_times_squares(g);
    span = frattini.members();
    spanning = frattini.elements();
  } else {
    span.set(0);
  }

  std::vector<ElementId> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), ElementId{0});
  std::stable_sort(by_order.begin(), by_order.end(), [&](ElementId a, ElementId b) {
    return g.element_order(a) > g.element_order(b);
  });

  std::vector<ElementId> gens;
  while (span.count() < g.order()) {
    for (ElementId a : by_order) {
      if (span.test(a))
        continue;
      gens.push_back(a);
      spanning.push_back(a);
      span = subgroup_closure(g, spanning).members();
      break;
    }
  }
  return gens;
}

} // namespace capgap
