#ifndef CAPGAP_SCREENING_HPP
#define CAPGAP_SCREENING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "capgap/units.hpp"

namespace capgap {

inline constexpr std::int64_t kDefaultScreeningBound = 100'000;

/// d = -4pq with p < q primes, p = q = 1 mod 4.
struct ScreeningRecord
{
  std::int64_t d = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::size_t class_number = 0;
  std::vector<std::uint64_t> invariants;
  std::size_t two_rank = 0;
  int e4_index = 0;
  UnitResult unit; // of Q(sqrt(pq))
  /// A fundamental unit of norm +1 rules the candidate out.
  bool excluded() const { return unit.norm == 1; }
};

/// All candidates with |d| <= bound, ascending in |d|.
std::vector<ScreeningRecord> screen_candidates(std::int64_t bound = kDefaultScreeningBound);

std::string join_invariants(std::vector<std::uint64_t> const &invariants);

/// Tab-separated with header `d p q h invariants two_rank e4_index unit_norm excluded`.
std::string render_screening_tsv(std::vector<ScreeningRecord> const &records);

} // namespace capgap

#endif // CAPGAP_SCREENING_HPP
