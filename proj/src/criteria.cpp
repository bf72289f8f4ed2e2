#include "capgap/criteria.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace capgap {

InvolutionGeneration involution_generated_outside(PermutationGroup const &g, SubgroupHandle const &h)
{
  if (!h.parent().same_group(g))
    throw std::invalid_argument("subgroup belongs to a different group");
  if (h.order() * 2 != g.order())
    throw std::invalid_argument("subgroup does not have index 2");

  InvolutionGeneration result;
  for (std::size_t a = 0; a < g.order(); ++a) {
    auto e = static_cast<ElementId>(a);
    if (!h.contains(e) && g.element_order(e) == 2)
      result.involutions.push_back(e);
  }
  result.generates = subgroup_closure(g, result.involutions).order() == g.order();
  return result;
}

namespace {

void require_complete(Catalog const &catalog, std::size_t order)
{
  std::size_t want = expected_group_count(order);
  std::size_t have = catalog.of_order(order).size();
  if (have == 0 || (want && have != want))
    throw CatalogError("catalog incomplete for order " + std::to_string(order) + ": " +
                       std::to_string(have) + " groups");
}

std::vector<ScanRow> scan_entry(CatalogEntry const &entry, std::span<CatalogEntry const> halves)
{
  std::vector<ScanRow> rows;
  for (SubgroupHandle const &h : index_two_subgroups(entry.group)) {
    if (!involution_generated_outside(entry.group, h).generates)
      continue;
    CatalogEntry const &match = identify_in_catalog(h.as_group(), halves);
    bool seen = std::any_of(rows.begin(), rows.end(),
                            [&](ScanRow const &r) { return r.h_id == match.id; });
    if (!seen)
      rows.push_back({entry.id, entry.hs.value_or(""), entry.name, match.id, match.name});
  }
  return rows;
}

} // namespace

std::vector<ScanRow> scan_catalog(std::size_t order, Catalog const &catalog, ScanOptions options)
{
  if (order < 2 || order % 2)
    throw std::invalid_argument("scan order must be even");
  require_complete(catalog, order);
  require_complete(catalog, order / 2);
  auto halves = catalog.of_order(order / 2);

  std::vector<std::future<std::vector<ScanRow>>> jobs;
  for (CatalogEntry const &entry : catalog.of_order(order)) {
    if (!options.include_abelian && entry.group.is_abelian())
      continue;
    jobs.push_back(std::async(std::launch::async, scan_entry, std::cref(entry), halves));
  }

  std::vector<ScanRow> rows;
  for (auto &job : jobs) {
    auto part = job.get();
    rows.insert(rows.end(), part.begin(), part.end());
  }
  auto key = [](ScanRow const &r) {
    auto num = [](std::string const &id) {
      auto dot = id.find('.');
      return std::pair{std::stoul(id.substr(0, dot)), std::stoul(id.substr(dot + 1))};
    };
    return std::pair{num(r.g_id), num(r.h_id)};
  };
  std::sort(rows.begin(), rows.end(), [&](ScanRow const &a, ScanRow const &b) { return key(a) < key(b); });
  return rows;
}

} // namespace capgap
