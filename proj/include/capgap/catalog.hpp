#ifndef CAPGAP_CATALOG_HPP
#define CAPGAP_CATALOG_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "capgap/group.hpp"
#include "capgap/isomorphism.hpp"
#include "capgap/presentation.hpp"

namespace capgap {

/// One small group: table identifiers plus a presentation realized as a
/// permutation group.
struct CatalogEntry
{
  std::size_t order = 0;
  std::string id;                // "16.08"
  std::optional<std::string> hs; // Hall-Senior number, "16.012"
  std::string name;              // "SD_16"
  Presentation presentation;
  PermutationGroup group;
  Fingerprint fingerprint;
};

class CatalogError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Parses a `.grp` file: `# id:`, `# hs:` and `# name:` header lines followed
/// by one presentation stanza. The order is taken from the id prefix and
/// checked against the realized group.
CatalogEntry parse_catalog_entry(std::string_view text, std::string_view source = "<input>");

class Catalog
{
public:
  Catalog() = default;

  /// Loads every `order*/*.grp` file below `root`.
  static Catalog load(std::filesystem::path const &root);

  void add(CatalogEntry entry);

  std::span<CatalogEntry const> entries() const { return entries_; }
  /// Entries of one order, sorted by id.
  std::span<CatalogEntry const> of_order(std::size_t order) const;
  bool has_order(std::size_t order) const { return !of_order(order).empty(); }
  CatalogEntry const *find(std::string_view id) const;

private:
  std::vector<CatalogEntry> entries_;
};

/// The bundled catalog directory, overridden by the CAPGAP_CATALOG
/// environment variable.
std::filesystem::path default_catalog_dir();

/// The unique entry isomorphic to `g`. Throws CatalogError when no entry or
/// more than one entry matches.
CatalogEntry const &identify_in_catalog(PermutationGroup const &g, std::span<CatalogEntry const> entries);
CatalogEntry const &identify_in_catalog(PermutationGroup const &g, Fingerprint const &fp,
                                        std::span<CatalogEntry const> entries);

/// Number of isomorphism classes of groups of the given order, for the
/// orders the catalog covers (0 for other orders).
std::size_t expected_group_count(std::size_t order);

struct CatalogCheck
{
  std::vector<std::string> problems;
  std::size_t groups_checked = 0;
  bool ok() const { return problems.empty(); }
};

/// Self-test: realized orders match ids, ids are unique, each order present
/// is complete, and entries of equal order are pairwise non-isomorphic.
CatalogCheck verify_catalog(Catalog const &catalog);

} // namespace capgap

#endif // CAPGAP_CATALOG_HPP
