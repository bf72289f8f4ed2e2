#include "capgap/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "capgap/coset_enumeration.hpp"
#include "capgap/criteria.hpp"
#include "capgap/discriminant.hpp"
#include "capgap/families.hpp"
#include "capgap/forms.hpp"
#include "capgap/screening.hpp"
#include "capgap/selmer.hpp"
#include "capgap/transfer.hpp"

namespace capgap {

namespace {

CheckResult timed(int number, std::string title, double limit, std::function<bool(std::ostream &)> body)
{
  CheckResult r;
  r.number = number;
  r.title = std::move(title);
  r.time_limit = limit;
  std::ostringstream detail;
  auto start = std::chrono::steady_clock::now();
  try {
    r.passed = body(detail);
  } catch (std::exception const &e) {
    r.passed = false;
    detail << "error: " << e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0 && r.seconds > limit) {
    r.passed = false;
    detail << (detail.tellp() > 0 ? "; " : "") << "over the time limit of " << limit << " s";
  }
  r.detail = detail.str();
  return r;
}

bool compare_rows(std::vector<ScanRow> const &rows, std::vector<IdPair> const &expected, std::ostream &os)
{
  std::vector<IdPair> got;
  for (auto const &r : rows)
    got.emplace_back(r.g_id, r.h_id);
  std::vector<IdPair> missing, extra;
  std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(), std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(), std::back_inserter(extra));
  os << got.size() << " rows";
  for (auto const &[g, h] : missing)
    os << "; missing (" << g << ", " << h << ")";
  for (auto const &[g, h] : extra)
    os << "; unexpected (" << g << ", " << h << ")";
  return got == expected;
}

SubgroupHandle join(PermutationGroup const &g, SubgroupHandle const &n, ElementId x)
{
  std::vector<ElementId> gens = n.elements();
  gens.push_back(x);
  return subgroup_closure(g, gens);
}

// all invariant-factor lists d_1 | d_2 | ... with product n and d_i > 1
void invariant_factor_lists(std::uint64_t n, std::uint64_t divisor_of_next, std::vector<std::uint64_t> &tail,
                            std::vector<std::vector<std::uint64_t>> &out)
{
  if (n == 1) {
    out.emplace_back(tail.rbegin(), tail.rend());
    return;
  }
  for (std::uint64_t d = 2; d <= n; ++d) {
    if (n % d || divisor_of_next % d)
      continue;
    tail.push_back(d);
    invariant_factor_lists(n / d, d, tail, out);
    tail.pop_back();
  }
}

Presentation abelian_presentation(std::vector<std::uint64_t> const &factors)
{
  Presentation p{"Ab", {}, {}};
  if (factors.empty()) {
    p.generators = {"a"};
    p.relators = {generator_word(0)};
    return p;
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    p.generators.push_back("g" + std::to_string(i + 1));
    p.relators.push_back(generator_word(i, static_cast<long long>(factors[i])));
    for (std::size_t j = 0; j < i; ++j) {
      Word gi = generator_word(i), gj = generator_word(j);
      p.relators.push_back(inverse(gi) * inverse(gj) * gi * gj);
    }
  }
  return p;
}

std::size_t count_distinct(std::vector<Permutation> perms)
{
  std::sort(perms.begin(), perms.end());
  return static_cast<std::size_t>(std::unique(perms.begin(), perms.end()) - perms.begin());
}

} // namespace

std::vector<IdPair> published_order16_rows()
{
  return {{"16.07", "8.01"}, {"16.11", "8.02"}, {"16.11", "8.03"}, {"16.13", "8.04"}};
}

std::vector<IdPair> published_order32_rows()
{
  return {{"32.18", "16.01"}, {"32.27", "16.03"}, {"32.28", "16.04"}, {"32.34", "16.02"},
          {"32.39", "16.05"}, {"32.39", "16.07"}, {"32.42", "16.09"}, {"32.43", "16.06"},
          {"32.43", "16.08"}, {"32.46", "16.10"}, {"32.46", "16.11"}, {"32.48", "16.12"},
          {"32.48", "16.13"}, {"32.49", "16.11"}, {"32.49", "16.13"}, {"32.50", "16.12"}};
}

CheckResult check_order16_table(Catalog const &catalog)
{
  return timed(1, "order-16 involution table", 10, [&](std::ostream &os) {
    return compare_rows(scan_catalog(16, catalog), published_order16_rows(), os);
  });
}

CheckResult check_order32_table(Catalog const &catalog)
{
  return timed(2, "order-32 involution table", 60, [&](std::ostream &os) {
    return compare_rows(scan_catalog(32, catalog), published_order32_rows(), os);
  });
}

CheckResult check_holomorph_uniqueness(Catalog const &catalog)
{
  return timed(3, "unique overgroup Hol(C_8) and the family for n = 5, 6", 0, [&](std::ostream &os) {
    bool ok = true;
    Dt1Report r = verify_dt1_uniqueness(4, catalog, Dt1Mode::uniqueness);
    auto show = [&](std::vector<std::string> const &ids) {
      std::string s = "{";
      for (auto const &id : ids)
        s += (s.size() > 1 ? "," : "") + id;
      return s + "}";
    };
    std::vector<std::string> const want{"32.43"};
    ok = r.existence() && r.sd_overgroups == want && r.md_overgroups == want && r.family_id == "32.43";
    os << "n=4: SD16 overgroups " << show(r.sd_overgroups) << ", MD16 overgroups " << show(r.md_overgroups)
       << ", family " << r.family_id;
    for (int n : {5, 6}) {
      Dt1Report e = verify_dt1_uniqueness(n, catalog, Dt1Mode::existence_only);
      os << "; n=" << n << (e.existence() ? " exists" : " FAILS");
      ok = ok && e.existence();
    }
    return ok;
  });
}

CheckResult check_transfer_kernels()
{
  return timed(4, "transfer kernels and gap witnesses of SD/MD", 5, [](std::ostream &os) {
    bool ok = true;
    for (int n = 4; n <= 6; ++n) {
      for (auto kind : {MetacyclicKind::semidihedral, MetacyclicKind::modular}) {
        MetacyclicGroup g = build_metacyclic(kind, n);
        PermutationGroup const &G = g.group;
        SubgroupHandle derived = derived_subgroup(G);
        bool sd = kind == MetacyclicKind::semidihedral;
        ElementId middle = sd ? G.multiply(g.sigma, g.tau) : G.multiply(g.tau, G.power(g.sigma, g.m / 2));
        std::vector<ElementId> kernel_gens{g.tau, middle, g.tau};
        auto maxs = maximal_subgroups(g);
        for (std::size_t i = 0; i < 3; ++i) {
          if (transfer_map(G, maxs[i]).kernel() != join(G, derived, kernel_gens[i])) {
            ok = false;
            os << g.presentation.name << " kernel " << i + 1 << " differs; ";
          }
        }
        CapitulationGap gap = capitulation_gap(G);
        ElementId w = sd ? g.sigma : G.power(g.sigma, g.m / 2);
        if (!gap.has_gap || gap.witness_coset != coset_of(derived, w)) {
          ok = false;
          os << g.presentation.name << " witness differs; ";
        }
      }
    }
    os << (ok ? "n = 4, 5, 6 match" : "");
    return ok;
  });
}

CheckResult check_abelian_no_gap()
{
  return timed(5, "abelian groups of order <= 32 have no gap", 30, [](std::ostream &os) {
    std::size_t groups = 0, gaps = 0;
    for (std::uint64_t n = 1; n <= 32; ++n) {
      std::vector<std::vector<std::uint64_t>> lists;
      std::vector<std::uint64_t> tail;
      invariant_factor_lists(n, n, tail, lists);
      for (auto const &factors : lists) {
        PermutationGroup G = PermutationGroup::from_presentation(abelian_presentation(factors));
        ++groups;
        if (G.order() != n || capitulation_gap(G).has_gap) {
          ++gaps;
          os << "order " << n << " fails; ";
        }
      }
    }
    os << groups << " groups, " << gaps << " failures";
    return gaps == 0;
  });
}

CheckResult check_element_orders()
{
  return timed(6, "element-order formulas in SD and MD", 0, [](std::ostream &os) {
    std::size_t checked = 0, bad = 0;
    for (int n = 4; n <= 6; ++n) {
      for (auto kind : {MetacyclicKind::semidihedral, MetacyclicKind::modular}) {
        MetacyclicGroup g = build_metacyclic(kind, n);
        long long const m = g.m;
        for (long long i = 0; i < 2 * m; ++i) {
          auto rotation = static_cast<long long>(g.group.element_order(g.element(i, 0)));
          auto reflection = static_cast<long long>(g.group.element_order(g.element(i, 1)));
          long long want_rotation = 2 * m / std::gcd(i, 2 * m);
          long long want_reflection = kind == MetacyclicKind::semidihedral ? 4 / std::gcd(i, 2LL)
                                                                           : 2 * m / std::gcd(i, m);
          checked += 2;
          bad += (rotation != want_rotation) + (reflection != want_reflection);
        }
      }
    }
    os << checked << " elements, " << bad << " mismatches";
    return bad == 0;
  });
}

CheckResult check_unique_cyclic_subgroup()
{
  return timed(7, "<s^2> unique cyclic of order 2^(n-2) in SD, quotient (2,2)", 0, [](std::ostream &os) {
    bool ok = true;
    for (int n = 4; n <= 6; ++n) {
      MetacyclicGroup g = semidihedral(n);
      PermutationGroup const &G = g.group;
      std::set<std::string> cyclic;
      std::size_t normal = 0;
      SubgroupHandle target = subgroup_closure(G, std::vector<ElementId>{G.power(g.sigma, 2)});
      for (std::size_t e = 0; e < G.order(); ++e) {
        auto x = static_cast<ElementId>(e);
        if (G.element_order(x) != static_cast<std::size_t>(g.m))
          continue;
        SubgroupHandle c = subgroup_closure(G, std::vector<ElementId>{x});
        if (cyclic.insert(c.members().to_string()).second && is_normal(c))
          ++normal;
      }
      bool unique = cyclic.size() == 1 && cyclic.count(target.members().to_string()) == 1;
      bool klein = abelian_invariants(G, target) == std::vector<std::uint64_t>{2, 2};
      os << (n > 4 ? "; " : "") << "n=" << n << ": " << cyclic.size() << " cyclic (" << normal << " normal)"
         << (klein ? ", quotient (2,2)" : ", quotient not (2,2)");
      ok = ok && unique && klein;
    }
    return ok;
  });
}

CheckResult check_exact_sequence()
{
  return timed(8, "#Cl* (E4+:E^2) = #Cl[2] for -5000 <= d < 0", 300, [](std::ostream &os) {
    std::size_t count = 0, bad = 0;
    for (std::int64_t d : fundamental_discriminants(-5000, -1)) {
      ++count;
      SelmerData s = cl_star_subgroup(d);
      if (!s.exact_sequence_holds()) {
        if (++bad <= 5)
          os << "fails at " << d << "; ";
      }
    }
    os << count << " discriminants, " << bad << " failures";
    return bad == 0 && count > 0;
  });
}

CheckResult check_class_numbers()
{
  return timed(9, "h(-3) = h(-4) = 1 and 2-rank = t - 1", 0, [](std::ostream &os) {
    bool ok = class_group_structure(-3).class_number() == 1 && class_group_structure(-4).class_number() == 1;
    std::size_t count = 0, bad = 0;
    for (std::int64_t d : fundamental_discriminants(-5000, -1)) {
      ++count;
      try {
        ClassGroupData c = class_group_structure(d);
        std::size_t even = std::count_if(c.invariants.begin(), c.invariants.end(),
                                         [](std::uint64_t f) { return f % 2 == 0; });
        if (even + 1 != prime_discriminant_count(d))
          ++bad;
      } catch (std::logic_error const &) {
        ++bad;
      }
    }
    os << (ok ? "h(-3) = h(-4) = 1; " : "class number anchor fails; ") << count << " discriminants, " << bad
       << " rank mismatches";
    return ok && bad == 0;
  });
}

CheckResult check_screening()
{
  return timed(10, "screening d = -4pq up to 1000", 0, [](std::ostream &os) {
    auto records = screen_candidates(1000);
    bool ok = true;
    auto it = std::find_if(records.begin(), records.end(), [](auto const &r) { return r.d == -260; });
    if (it == records.end()) {
      os << "d = -260 missing; ";
      return false;
    }
    // independent search: least y > 0 with 65 y^2 +- 1 a square
    std::int64_t px = 0, py = 0, pn = 0;
    for (std::int64_t y = 1; !pn; ++y) {
      for (int sign : {-1, 1}) {
        std::int64_t t = 65 * y * y + sign;
        auto x = static_cast<std::int64_t>(std::sqrt(static_cast<double>(t)) + 0.5);
        if (x * x == t && !pn) {
          px = x;
          py = y;
          pn = sign;
        }
      }
    }
    UnitResult const &u = it->unit;
    bool unit_ok = u.norm == pn && u.x == 2 * px && u.y == 2 * py;
    ok = it->two_rank == 2 && it->e4_index == 2 && !it->excluded() && unit_ok;
    os << "d = -260: rank " << it->two_rank << ", e4 " << it->e4_index << ", unit " << u.to_string() << " norm "
       << u.norm << " (search: " << px << " + " << py << "*sqrt(65), norm " << pn << ")";
    std::size_t excluded = 0;
    for (auto const &r : records) {
      if (r.excluded() != (r.unit.norm == 1) || r.two_rank != 2 || r.e4_index != 2 || !r.unit.satisfies_pell())
        ok = false;
      excluded += r.excluded();
    }
    os << "; " << records.size() << " candidates, " << excluded << " excluded";
    return ok;
  });
}

CheckResult check_coset_counts()
{
  return timed(11, "coset enumeration vs normal forms", 0, [](std::ostream &os) {
    bool ok = true;
    for (int n = 4; n <= 6; ++n) {
      long long const m = 1LL << (n - 2);
      for (Presentation const &p : {semidihedral_presentation(n), modular_presentation(n)}) {
        CosetAction act = coset_enumerate(p, {});
        std::vector<Permutation> forms;
        for (long long i = 0; i < 2 * m; ++i)
          for (int j = 0; j < 2; ++j)
            forms.push_back(evaluate(act.generator_images, generator_word(0, i) * generator_word(1, j)));
        std::size_t distinct = count_distinct(forms);
        os << (os.tellp() > 0 ? "; " : "") << p.name << " " << act.coset_count << "/" << distinct;
        ok = ok && act.coset_count == distinct && distinct == static_cast<std::size_t>(4 * m);
      }
      Presentation hol = holomorph_presentation(n);
      CosetAction act = coset_enumerate(hol, {});
      std::vector<Permutation> forms;
      for (long long i = 0; i < 2 * m; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k)
            forms.push_back(evaluate(act.generator_images,
                                     generator_word(0, i) * generator_word(1, j) * generator_word(2, k)));
      std::size_t distinct = count_distinct(forms);
      os << "; " << hol.name << " " << act.coset_count << "/" << distinct;
      ok = ok && act.coset_count == distinct && distinct == static_cast<std::size_t>(8 * m);
    }
    return ok;
  });
}

std::vector<CheckResult> run_all_checks(Catalog const &catalog)
{
  return {check_order16_table(catalog),  check_order32_table(catalog), check_holomorph_uniqueness(catalog),
          check_transfer_kernels(),      check_abelian_no_gap(),       check_element_orders(),
          check_unique_cyclic_subgroup(), check_exact_sequence(),       check_class_numbers(),
          check_screening(),             check_coset_counts()};
}

std::string format_check(CheckResult const &r)
{
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f s", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + "  [" + std::to_string(r.number) + "] " + r.title + "  (" +
         timing + ")  " + r.detail;
}

} // namespace capgap
