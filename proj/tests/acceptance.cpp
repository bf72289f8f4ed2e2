// Runs every acceptance criterion against the bundled catalog and prints one
// PASS/FAIL line per criterion. Optional arguments select criteria by number.
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <vector>

#include "capgap/catalog.hpp"
#include "capgap/verification.hpp"

using namespace capgap;

int main(int argc, char **argv)
{
  std::set<int> selected;
  for (int i = 1; i < argc; ++i)
    selected.insert(std::atoi(argv[i]));

  Catalog catalog = Catalog::load(CAPGAP_TEST_CATALOG_DIR);
  std::vector<std::function<CheckResult()>> checks{
      [&] { return check_order16_table(catalog); },
      [&] { return check_order32_table(catalog); },
      [&] { return check_holomorph_uniqueness(catalog); },
      check_transfer_kernels,
      check_abelian_no_gap,
      check_element_orders,
      check_unique_cyclic_subgroup,
      check_exact_sequence,
      check_class_numbers,
      check_screening,
      check_coset_counts,
  };

  int ran = 0, failed = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (!selected.empty() && !selected.count(static_cast<int>(i + 1)))
      continue;
    CheckResult r = checks[i]();
    ++ran;
    failed += r.passed ? 0 : 1;
    std::cout << format_check(r) << std::endl;
  }
  std::cout << ran - failed << " of " << ran << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
