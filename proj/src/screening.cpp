#include "capgap/screening.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

#include "capgap/discriminant.hpp"
#include "capgap/forms.hpp"
#include "capgap/selmer.hpp"

namespace capgap {

namespace {

ScreeningRecord evaluate(std::int64_t p, std::int64_t q)
{
  ScreeningRecord r;
  r.p = p;
  r.q = q;
  r.d = -4 * p * q;
  auto cl = class_group_structure(r.d);
  r.class_number = cl.class_number();
  r.invariants = cl.invariants;
  r.two_rank = cl.two_rank;
  r.e4_index = e4_plus_index(r.d);
  r.unit = fundamental_unit_norm(p * q);
  return r;
}

} // namespace

std::vector<ScreeningRecord> screen_candidates(std::int64_t bound)
{
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t p = 5; 4 * p * p < bound; p += 4) {
    if (!is_prime(p))
      continue;
    for (std::int64_t q = p + 4; 4 * p * q <= bound; q += 4) {
      if (is_prime(q))
        pairs.emplace_back(p, q);
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](auto const &x, auto const &y) {
    return std::pair{x.first * x.second, x.first} < std::pair{y.first * y.second, y.first};
  });

  std::vector<ScreeningRecord> out(pairs.size());
  std::size_t const workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < pairs.size(); i += workers)
        out[i] = evaluate(pairs[i].first, pairs[i].second);
    }));
  }
  for (auto &j : jobs)
    j.get();
  return out;
}

std::string join_invariants(std::vector<std::uint64_t> const &invariants)
{
  std::string s;
  for (std::size_t i = 0; i < invariants.size(); ++i)
    s += (i ? "," : "") + std::to_string(invariants[i]);
  return s.empty() ? "1" : s;
}

std::string render_screening_tsv(std::vector<ScreeningRecord> const &records)
{
  std::ostringstream os;
  os << "d\tp\tq\th\tinvariants\ttwo_rank\te4_index\tunit_norm\texcluded\n";
  for (auto const &r : records) {
    os << r.d << '\t' << r.p << '\t' << r.q << '\t' << r.class_number << '\t' << join_invariants(r.invariants)
       << '\t' << r.two_rank << '\t' << r.e4_index << '\t' << r.unit.norm << '\t'
       << (r.excluded() ? "yes" : "no") << '\n';
  }
  return os.str();
}

} // namespace capgap
