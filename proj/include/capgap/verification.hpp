#ifndef CAPGAP_VERIFICATION_HPP
#define CAPGAP_VERIFICATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "capgap/catalog.hpp"

namespace capgap {

/// Outcome of one end-to-end check of a published result.
struct CheckResult
{
  int number = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double time_limit = 0; // seconds; 0 means unlimited
};

using IdPair = std::pair<std::string, std::string>;

/// (G id, H id) rows of the published order-16 and order-32 tables.
std::vector<IdPair> published_order16_rows();
std::vector<IdPair> published_order32_rows();

CheckResult check_order16_table(Catalog const &catalog);
CheckResult check_order32_table(Catalog const &catalog);
CheckResult check_holomorph_uniqueness(Catalog const &catalog);
CheckResult check_transfer_kernels();
CheckResult check_abelian_no_gap();
CheckResult check_element_orders();
CheckResult check_unique_cyclic_subgroup();
CheckResult check_exact_sequence();
CheckResult check_class_numbers();
CheckResult check_screening();
CheckResult check_coset_counts();

/// All checks above, in order.
std::vector<CheckResult> run_all_checks(Catalog const &catalog);

/// "PASS  3  title  (1.23 s)  detail"
std::string format_check(CheckResult const &r);

} // namespace capgap

#endif // CAPGAP_VERIFICATION_HPP
