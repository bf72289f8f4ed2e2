#include "capgap/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#ifndef CAPGAP_DEFAULT_CATALOG_DIR
#define CAPGAP_DEFAULT_CATALOG_DIR "catalog"
#endif

namespace capgap {

namespace {

std::pair<std::size_t, std::size_t> split_id(std::string const &id)
{
  static std::regex const pattern(R"((\d+)\.(\d+))");
  std::smatch m;
  if (!std::regex_match(id, m, pattern))
    throw CatalogError("malformed group id '" + id + "'");
  return {std::stoul(m[1]), std::stoul(m[2])};
}

} // namespace

CatalogEntry parse_catalog_entry(std::string_view text, std::string_view source)
{
  static std::regex const header(R"(^#\s*(id|hs|name)\s*:\s*(.*?)\s*$)");
  CatalogEntry entry;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::smatch m;
    if (!std::regex_match(line, m, header))
      continue;
    if (m[1] == "id")
      entry.id = m[2];
    else if (m[1] == "hs")
      entry.hs = m[2].str();
    else
      entry.name = m[2];
  }
  std::string const where(source);
  if (entry.id.empty())
    throw CatalogError(where + ": missing '# id:' header");
  if (entry.name.empty())
    throw CatalogError(where + ": missing '# name:' header");
  entry.order = split_id(entry.id).first;

  try {
    entry.presentation = parse_presentation(text);
  } catch (ParseError const &e) {
    throw CatalogError(where + ": " + e.what());
  }
  entry.group = PermutationGroup::from_presentation(entry.presentation);
  if (entry.group.order() != entry.order) {
    throw CatalogError(where + ": presentation defines a group of order " +
                       std::to_string(entry.group.order()) + ", id says " +
                       std::to_string(entry.order));
  }
  entry.fingerprint = fingerprint(entry.group);
  return entry;
}

Catalog Catalog::load(std::filesystem::path const &root)
{
  namespace fs = std::filesystem;
  if (!fs::is_directory(root))
    throw CatalogError("catalog directory not found: " + root.string());

  std::vector<fs::path> files;
  for (auto const &dir : fs::directory_iterator(root)) {
    if (!dir.is_directory() || dir.path().filename().string().rfind("order", 0) != 0)
      continue;
    for (auto const &file : fs::directory_iterator(dir.path())) {
      if (file.is_regular_file() && file.path().extension() == ".grp")
        files.push_back(file.path());
    }
  }
  std::sort(files.begin(), files.end());

  Catalog catalog;
  for (auto const &path : files) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    catalog.add(parse_catalog_entry(buffer.str(), path.string()));
  }
  return catalog;
}

void Catalog::add(CatalogEntry entry)
{
  auto key = split_id(entry.id);
  auto pos = std::upper_bound(entries_.begin(), entries_.end(), key,
                              [](auto const &k, CatalogEntry const &e) { return k < split_id(e.id); });
  entries_.insert(pos, std::move(entry));
}

std::span<CatalogEntry const> Catalog::of_order(std::size_t order) const
{
  auto first = std::find_if(entries_.begin(), entries_.end(),
                            [&](CatalogEntry const &e) { return e.order == order; });
  auto last = std::find_if(first, entries_.end(),
                           [&](CatalogEntry const &e) { return e.order != order; });
  return {entries_.data() + (first - entries_.begin()), static_cast<std::size_t>(last - first)};
}

CatalogEntry const *Catalog::find(std::string_view id) const
{
  for (auto const &e : entries_) {
    if (e.id == id)
      return &e;
  }
  return nullptr;
}

std::filesystem::path default_catalog_dir()
{
  if (char const *env = std::getenv("CAPGAP_CATALOG"); env && *env)
    return env;
  return CAPGAP_DEFAULT_CATALOG_DIR;
}

CatalogEntry const &identify_in_catalog(PermutationGroup const &g, std::span<CatalogEntry const> entries)
{
  return identify_in_catalog(g, fingerprint(g), entries);
}

CatalogEntry const &identify_in_catalog(PermutationGroup const &g, Fingerprint const &fp,
                                        std::span<CatalogEntry const> entries)
{
  std::vector<CatalogEntry const *> candidates;
  for (auto const &e : entries) {
    if (e.order == g.order() && e.fingerprint == fp)
      candidates.push_back(&e);
  }
  CatalogEntry const *match = nullptr;
  if (candidates.size() == 1) {
    match = candidates.front();
  } else {
    for (auto const *e : candidates) {
      if (!find_isomorphism(g, e->group))
        continue;
      if (match)
        throw CatalogError("ambiguous catalog match: " + match->id + " and " + e->id);
      match = e;
    }
  }
  if (!match)
    throw CatalogError("no catalog entry of order " + std::to_string(g.order()) +
                       " is isomorphic to the group");
  return *match;
}

std::size_t expected_group_count(std::size_t order)
{
  switch (order) {
  case 1: return 1;
  case 2: return 1;
  case 4: return 2;
  case 8: return 5;
  case 16: return 14;
  case 32: return 51;
  default: return 0;
  }
}

CatalogCheck verify_catalog(Catalog const &catalog)
{
  CatalogCheck check;
  std::vector<std::size_t> orders;
  for (auto const &e : catalog.entries()) {
    if (orders.empty() || orders.back() != e.order)
      orders.push_back(e.order);
  }

  for (std::size_t order : orders) {
    auto entries = catalog.of_order(order);
    check.groups_checked += entries.size();
    if (std::size_t want = expected_group_count(order); want && entries.size() != want) {
      check.problems.push_back("order " + std::to_string(order) + ": " +
                               std::to_string(entries.size()) + " entries, expected " +
                               std::to_string(want));
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].group.order() != order)
        check.problems.push_back(entries[i].id + ": realized order " +
                                 std::to_string(entries[i].group.order()));
      for (std::size_t j = i + 1; j < entries.size(); ++j) {
        if (entries[i].id == entries[j].id)
          check.problems.push_back("duplicate id " + entries[i].id);
        if (is_isomorphic(entries[i].group, entries[i].fingerprint, entries[j].group,
                          entries[j].fingerprint))
          check.problems.push_back(entries[i].id + " and " + entries[j].id + " are isomorphic");
      }
    }
  }
  return check;
}

} // namespace capgap
