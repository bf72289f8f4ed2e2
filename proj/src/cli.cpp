#include "capgap/cli.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "capgap/catalog.hpp"
#include "capgap/discriminant.hpp"
#include "capgap/families.hpp"
#include "capgap/forms.hpp"
#include "capgap/selmer.hpp"
#include "capgap/transfer.hpp"
#include "capgap/units.hpp"
#include "capgap/verification.hpp"

namespace capgap {

using nlohmann::json;

namespace {

struct Context
{
  bool json_output = false;
  std::string catalog_dir;
  std::ostringstream out;
  std::ostringstream err;

  OutputMode mode() const { return json_output ? OutputMode::json : OutputMode::text; }
  Catalog catalog() const { return Catalog::load(catalog_dir.empty() ? default_catalog_dir() : std::filesystem::path(catalog_dir)); }
};

std::string pad(std::string s, std::size_t width)
{
  if (s.size() < width)
    s.append(width - s.size(), ' ');
  return s;
}

// rows of cells, aligned with two spaces between columns
std::string align(std::vector<std::vector<std::string>> const &rows)
{
  std::vector<std::size_t> width;
  for (auto const &row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (auto const &row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i)
      line += i + 1 == row.size() ? row[i] : pad(row[i], width[i] + 2);
    out += line + '\n';
  }
  return out;
}

std::string join(std::vector<std::string> const &parts, std::string_view sep)
{
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i)
    s += (i ? std::string(sep) : std::string()) + parts[i];
  return s;
}

std::string form_string(QuadraticForm const &f)
{
  std::ostringstream os;
  os << f;
  return os.str();
}

std::string half_string(QuadraticRing const &ring, QuadraticInteger const &x)
{
  auto [X, Y] = ring.to_half(x);
  std::string root = "sqrt(" + std::to_string(ring.discriminant()) + ")";
  bool integral = X % 2 == 0 && Y % 2 == 0;
  if (integral) {
    X /= 2;
    Y /= 2;
  }
  std::string s = Y == 0 ? std::to_string(X)
                         : std::to_string(X) + (Y < 0 ? " - " : " + ") + std::to_string(Y < 0 ? -Y : Y) + "*" + root;
  return integral ? s : "(" + s + ")/2";
}

// Shortest words in the presentation generators, by breadth-first search.
std::vector<std::string> element_words(CatalogEntry const &entry)
{
  PermutationGroup const &g = entry.group;
  auto const &gens = g.generator_ids();
  std::vector<std::vector<std::size_t>> letters(g.order());
  std::vector<bool> seen(g.order(), false);
  std::deque<ElementId> queue{PermutationGroup::identity()};
  seen[0] = true;
  while (!queue.empty()) {
    ElementId x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      ElementId y = g.multiply(x, gens[i]);
      if (seen[y])
        continue;
      seen[y] = true;
      letters[y] = letters[x];
      letters[y].push_back(i);
      queue.push_back(y);
    }
  }
  std::vector<std::string> words(g.order());
  for (std::size_t e = 0; e < g.order(); ++e) {
    Word w;
    for (std::size_t i : letters[e])
      w = w * generator_word(i);
    words[e] = render_word(entry.presentation, w);
  }
  return words;
}

// Generators of K modulo N, chosen greedily among short words.
std::vector<ElementId> generators_mod(PermutationGroup const &g, SubgroupHandle const &k, SubgroupHandle const &n,
                                      std::vector<std::string> const &words)
{
  std::vector<ElementId> order(g.order());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = static_cast<ElementId>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId a, ElementId b) { return words[a].size() < words[b].size(); });
  std::vector<ElementId> gens, all = n.elements();
  SubgroupHandle current = n;
  for (ElementId e : order) {
    if (!k.contains(e) || current.contains(e))
      continue;
    gens.push_back(e);
    all.push_back(e);
    current = subgroup_closure(g, all);
  }
  return gens;
}

std::string join_factors(std::vector<std::uint64_t> const &f)
{
  return join_invariants(f);
}

int cmd_catalog_verify(Context &ctx)
{
  Catalog catalog = ctx.catalog();
  CatalogCheck check = verify_catalog(catalog);
  std::map<std::size_t, std::size_t> per_order;
  for (auto const &e : catalog.entries())
    ++per_order[e.order];
  if (ctx.json_output) {
    json j;
    j["ok"] = check.ok();
    j["groups_checked"] = check.groups_checked;
    j["problems"] = check.problems;
    for (auto [order, count] : per_order)
      j["orders"][std::to_string(order)] = count;
    ctx.out << j.dump(2) << '\n';
  } else {
    for (auto [order, count] : per_order)
      ctx.out << "order " << order << ": " << count << " groups\n";
    for (auto const &p : check.problems)
      ctx.out << "problem: " << p << '\n';
    ctx.out << check.groups_checked << " groups checked: " << (check.ok() ? "ok" : "FAILED") << '\n';
  }
  return check.ok() ? 0 : 1;
}

int cmd_scan(Context &ctx, std::size_t order, bool include_abelian)
{
  Catalog catalog = ctx.catalog();
  ctx.out << render_table(scan_catalog(order, catalog, {include_abelian}), ctx.mode());
  return 0;
}

int cmd_kernels(Context &ctx, std::string const &family, int n)
{
  MetacyclicGroup g = build_metacyclic(family == "sd" ? MetacyclicKind::semidihedral : MetacyclicKind::modular, n);
  TransferReport report = transfer_report(g.group);
  SubgroupHandle const &derived = report.derived;
  std::vector<std::string> const names{"<s>", "<s^2,t>", "<s^2,s*t>"};

  json entries = json::array();
  std::vector<std::vector<std::string>> table{{"H", "Ver(s)H'", "Ver(t)H'", "ker Ver"}};
  auto maxs = maximal_subgroups(g);
  for (std::size_t i = 0; i < maxs.size(); ++i) {
    TransferMap t = transfer_map(g.group, maxs[i]);
    std::string vs = coset_label(g, t.subgroup_derived(), t.image(g.sigma));
    std::string vt = coset_label(g, t.subgroup_derived(), t.image(g.tau));
    std::string ker = cyclic_label(g, derived, t.kernel());
    table.push_back({names[i], vs, vt, ker + "G'"});
    entries.push_back({{"subgroup", names[i]}, {"ver_s", vs}, {"ver_t", vt}, {"kernel", ker}});
  }
  std::optional<std::string> witness;
  if (report.gap.witness)
    witness = coset_label(g, derived, *report.gap.witness);
  std::string derived_label = cyclic_label(g, trivial_subgroup(g.group), derived);

  if (ctx.json_output) {
    json j{{"group", g.presentation.name}, {"n", n},          {"m", g.m}, {"order", g.group.order()},
           {"derived", derived_label},     {"entries", entries}, {"capitulation_gap", report.gap.has_gap}};
    j["witness"] = witness ? json(*witness) : json(nullptr);
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << g.presentation.name << " (n = " << n << ", m = " << g.m << "), G' = " << derived_label << '\n';
    ctx.out << align(table);
    ctx.out << "capitulation gap: " << (report.gap.has_gap ? "yes, witness " + *witness + "G'" : "no") << '\n';
  }
  return 0;
}

int cmd_gap(Context &ctx, std::string const &id)
{
  Catalog catalog = ctx.catalog();
  CatalogEntry const *entry = catalog.find(id);
  if (!entry)
    throw std::invalid_argument("no catalog group with id " + id);
  PermutationGroup const &g = entry->group;
  auto words = element_words(*entry);
  TransferReport report = transfer_report(g);
  auto const &derived = report.derived;
  auto halves = catalog.of_order(g.order() / 2);
  bool can_identify = g.order() % 2 == 0 && halves.size() == expected_group_count(g.order() / 2) && !halves.empty();

  auto mod_label = [&](SubgroupHandle const &k) {
    auto gens = generators_mod(g, k, derived, words);
    if (gens.empty())
      return std::string("G'");
    std::vector<std::string> w;
    for (ElementId e : gens)
      w.push_back(words[e]);
    return "<" + join(w, ",") + ">G'";
  };

  json subgroups = json::array();
  std::vector<std::vector<std::string>> table{{"H", "type", "kernel"}};
  for (auto const &entry_h : report.entries) {
    auto gens = generators_mod(g, entry_h.subgroup, trivial_subgroup(g), words);
    std::vector<std::string> w;
    for (ElementId e : gens)
      w.push_back(words[e]);
    std::string h_label = "<" + join(w, ",") + ">";
    std::string type = can_identify ? identify_in_catalog(entry_h.subgroup.as_group(), halves).id : "-";
    std::string ker = mod_label(entry_h.kernel);
    table.push_back({h_label, type, ker});
    subgroups.push_back({{"subgroup", h_label}, {"type", type}, {"kernel", ker}});
  }
  std::optional<std::string> witness;
  if (report.gap.witness)
    witness = words[*report.gap.witness];
  auto abelianization = abelian_invariants(g, derived);

  if (ctx.json_output) {
    json j{{"id", entry->id},
           {"name", entry->name},
           {"order", g.order()},
           {"abelianization", abelianization},
           {"subgroups", subgroups},
           {"capitulation_gap", report.gap.has_gap}};
    j["witness"] = witness ? json(*witness) : json(nullptr);
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << entry->id << " " << entry->name << ", order " << g.order() << ", G/G' = ("
            << join_factors(abelianization) << ")\n";
    if (report.entries.empty())
      ctx.out << "no subgroups of index 2\n";
    else
      ctx.out << align(table);
    ctx.out << "capitulation gap: " << (report.gap.has_gap ? "yes, witness " + *witness + "G'" : "no") << '\n';
  }
  return 0;
}

int cmd_dt1(Context &ctx, int n, bool uniqueness)
{
  Catalog catalog;
  try {
    catalog = ctx.catalog();
  } catch (CatalogError const &) {
    if (uniqueness)
      throw;
  }
  Dt1Report r = verify_dt1_uniqueness(n, catalog, uniqueness ? Dt1Mode::uniqueness : Dt1Mode::automatic);
  bool ok = r.existence() && (!r.uniqueness_checked || r.uniqueness());
  long long m = 1LL << (n - 2);
  if (ctx.json_output) {
    json j{{"n", n},
           {"m", m},
           {"order", 2 * 4 * m},
           {"sd_isomorphic", r.sd_isomorphic},
           {"md_isomorphic", r.md_isomorphic},
           {"sd_generated", r.sd_generated},
           {"md_generated", r.md_generated},
           {"existence", r.existence()},
           {"uniqueness_checked", r.uniqueness_checked}};
    j["family_id"] = r.family_id.empty() ? json(nullptr) : json(r.family_id);
    if (r.uniqueness_checked) {
      j["sd_overgroups"] = r.sd_overgroups;
      j["md_overgroups"] = r.md_overgroups;
      j["unique"] = r.uniqueness();
    }
    ctx.out << j.dump(2) << '\n';
  } else {
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    ctx.out << "n = " << n << ", m = " << m << ", order " << 8 * m << '\n';
    ctx.out << "<a,xy> ~ SD" << (4 * m) << ": " << yes(r.sd_isomorphic)
            << ", generated by involutions outside: " << yes(r.sd_generated) << '\n';
    ctx.out << "<a,y> ~ MD" << n << "(2): " << yes(r.md_isomorphic)
            << ", generated by involutions outside: " << yes(r.md_generated) << '\n';
    if (!r.family_id.empty())
      ctx.out << "catalog id: " << r.family_id << '\n';
    if (r.uniqueness_checked) {
      ctx.out << "overgroups of SD: {" << join(r.sd_overgroups, ",") << "}, of MD: {" << join(r.md_overgroups, ",")
              << "}\n";
      ctx.out << "uniqueness: " << (r.uniqueness() ? "unique, and the groups coincide" : "FAILED") << '\n';
    } else {
      ctx.out << "uniqueness: not checked (no catalog of order " << 8 * m << ")\n";
    }
  }
  return ok ? 0 : 1;
}

int cmd_quad_class(Context &ctx, std::int64_t d)
{
  ClassGroupData cl = class_group_structure(d);
  auto factors = factor_into_prime_discriminants(d);
  std::vector<std::string> forms, torsion;
  for (auto const &f : cl.forms)
    forms.push_back(form_string(f));
  for (std::size_t i : cl.two_torsion)
    torsion.push_back(form_string(cl.forms[i]));
  if (ctx.json_output) {
    json j{{"d", d},
           {"prime_discriminants", factors},
           {"h", cl.class_number()},
           {"invariants", cl.invariants},
           {"two_rank", cl.two_rank},
           {"forms", forms},
           {"two_torsion", torsion}};
    ctx.out << j.dump(2) << '\n';
  } else {
    std::vector<std::string> fs;
    for (auto f : factors)
      fs.push_back(f < 0 ? "(" + std::to_string(f) + ")" : std::to_string(f));
    ctx.out << "d = " << d << " = " << join(fs, " * ") << '\n';
    ctx.out << "h = " << cl.class_number() << ", Cl = (" << join_factors(cl.invariants) << "), 2-rank "
            << cl.two_rank << '\n';
    ctx.out << "reduced forms: " << join(forms, " ") << '\n';
    ctx.out << "Cl[2]: " << join(torsion, " ") << '\n';
  }
  return 0;
}

int cmd_quad_selmer(Context &ctx, std::int64_t d)
{
  SelmerData s = cl_star_subgroup(d);
  QuadraticRing ring(d);
  json certs = json::array();
  std::vector<std::vector<std::string>> table{{"class", "p", "a", "alpha", "alpha = xi^2 mod 4"}};
  for (auto const &c : s.certificates) {
    std::string root = c.root ? half_string(ring, *c.root) : "";
    table.push_back({form_string(c.reduced), std::to_string(c.prime), form_string(c.ideal_form),
                     half_string(ring, c.alpha), c.root ? "yes, xi = " + root : "no"});
    json jc{{"class", form_string(c.reduced)},
            {"prime", c.prime},
            {"ideal", form_string(c.ideal_form)},
            {"alpha", half_string(ring, c.alpha)},
            {"square_mod_4", c.in_cl_star()}};
    jc["xi"] = c.root ? json(root) : json(nullptr);
    certs.push_back(jc);
  }
  if (ctx.json_output) {
    json j{{"d", d},
           {"e4_index", s.e4_index},
           {"two_torsion", s.two_torsion_order},
           {"cl_star", s.cl_star.size()},
           {"certificates", certs},
           {"exact_sequence", s.exact_sequence_holds()}};
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << "d = " << d << ", (E4+ : E^2) = " << s.e4_index << ", #Cl[2] = " << s.two_torsion_order << '\n';
    ctx.out << align(table);
    ctx.out << "#Cl* = " << s.cl_star.size() << "; #Cl* * (E4+ : E^2) = #Cl[2]: "
            << (s.exact_sequence_holds() ? "yes" : "NO") << '\n';
  }
  return s.exact_sequence_holds() ? 0 : 1;
}

int cmd_quad_screen(Context &ctx, std::int64_t bound)
{
  if (bound <= 0)
    throw std::invalid_argument("--max must be positive");
  ctx.out << render_screening(screen_candidates(bound), ctx.mode());
  return 0;
}

int cmd_verify(Context &ctx)
{
  Catalog catalog = ctx.catalog();
  auto results = run_all_checks(catalog);
  bool ok = std::all_of(results.begin(), results.end(), [](auto const &r) { return r.passed; });
  if (ctx.json_output) {
    json j = json::array();
    for (auto const &r : results)
      j.push_back({{"criterion", r.number},
                   {"title", r.title},
                   {"passed", r.passed},
                   {"seconds", r.seconds},
                   {"detail", r.detail}});
    ctx.out << j.dump(2) << '\n';
  } else {
    for (auto const &r : results)
      ctx.out << format_check(r) << '\n';
    ctx.out << (ok ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return ok ? 0 : 1;
}

} // namespace

std::string render_table(std::vector<ScanRow> const &rows, OutputMode mode)
{
  if (mode == OutputMode::json) {
    json j = json::array();
    for (auto const &r : rows) {
      j.push_back({{"g_id", r.g_id},
                   {"g_hs", r.g_hs.empty() ? json(nullptr) : json(r.g_hs)},
                   {"g_name", r.g_name},
                   {"h_id", r.h_id},
                   {"h_name", r.h_name}});
    }
    return j.dump(2) + '\n';
  }
  std::vector<std::vector<std::string>> cells{{"G", "HS", "name", "H", "name"}};
  for (auto const &r : rows)
    cells.push_back({r.g_id, r.g_hs.empty() ? "-" : r.g_hs, r.g_name, r.h_id, r.h_name});
  return align(cells);
}

std::vector<ScanRow> parse_table_json(std::string_view text)
{
  std::vector<ScanRow> rows;
  for (auto const &j : json::parse(text)) {
    ScanRow r;
    r.g_id = j.at("g_id").get<std::string>();
    r.g_hs = j.at("g_hs").is_null() ? "" : j.at("g_hs").get<std::string>();
    r.g_name = j.at("g_name").get<std::string>();
    r.h_id = j.at("h_id").get<std::string>();
    r.h_name = j.at("h_name").get<std::string>();
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string render_screening(std::vector<ScreeningRecord> const &records, OutputMode mode)
{
  if (mode == OutputMode::text)
    return render_screening_tsv(records);
  json j = json::array();
  for (auto const &r : records) {
    j.push_back({{"d", r.d},
                 {"p", r.p},
                 {"q", r.q},
                 {"h", r.class_number},
                 {"invariants", r.invariants},
                 {"two_rank", r.two_rank},
                 {"e4_index", r.e4_index},
                 {"unit", r.unit.to_string()},
                 {"unit_norm", r.unit.norm},
                 {"excluded", r.excluded()}});
  }
  return j.dump(2) + '\n';
}

CommandOutcome run(std::vector<std::string> const &args)
{
  Context ctx;
  CLI::App app{"Verification toolkit for capitulation gaps: small 2-groups, transfers and quadratic fields",
               "capgap"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", ctx.json_output, "JSON output");
  app.add_option("--catalog", ctx.catalog_dir, "catalog directory (default: bundled, or $CAPGAP_CATALOG)");

  std::function<int()> action;

  auto *catalog = app.add_subcommand("catalog", "bundled small-group catalog");
  catalog->require_subcommand(1);
  catalog->add_subcommand("verify", "self-test the catalog")->callback([&] { action = [&] { return cmd_catalog_verify(ctx); }; });

  std::size_t order = 0;
  bool include_abelian = false;
  auto *scan = app.add_subcommand("scan", "groups generated by involutions outside an index-2 subgroup");
  scan->add_option("--order", order, "group order")->required()->check(CLI::IsMember({16, 32}));
  scan->add_flag("--include-abelian", include_abelian, "also scan abelian groups");
  scan->callback([&] { action = [&] { return cmd_scan(ctx, order, include_abelian); }; });

  std::string family;
  int n = 0;
  auto *kernels = app.add_subcommand("kernels", "transfer kernels of SD_{2^n} or MD_n(2)");
  kernels->add_option("--family", family, "sd or md")->required()->check(CLI::IsMember({"sd", "md"}));
  kernels->add_option("--n", n, "order exponent, 4..8")->required()->check(CLI::Range(4, 8));
  kernels->callback([&] { action = [&] { return cmd_kernels(ctx, family, n); }; });

  std::string group_id;
  auto *gap = app.add_subcommand("gap", "transfer kernels and capitulation gap of a catalog group");
  gap->add_option("--group", group_id, "catalog id, e.g. 16.08")->required();
  gap->callback([&] { action = [&] { return cmd_gap(ctx, group_id); }; });

  bool uniqueness = false;
  auto *dt1 = app.add_subcommand("dt1", "the extension C_{2^{n-1}} x| Aut(C_{2^{n-1}})[2]");
  dt1->add_option("--n", n, "order exponent, 4..7")->required()->check(CLI::Range(4, 7));
  dt1->add_flag("--uniqueness", uniqueness, "require the uniqueness check against the catalog");
  dt1->callback([&] { action = [&] { return cmd_dt1(ctx, n, uniqueness); }; });

  std::int64_t d = 0, bound = kDefaultScreeningBound;
  auto *quad = app.add_subcommand("quad", "imaginary quadratic fields");
  quad->require_subcommand(1);
  auto *qclass = quad->add_subcommand("class", "class group from reduced forms");
  qclass->add_option("--d", d, "negative fundamental discriminant")->required();
  qclass->callback([&] { action = [&] { return cmd_quad_class(ctx, d); }; });
  auto *qselmer = quad->add_subcommand("selmer", "Cl* certificates and the unit index");
  qselmer->add_option("--d", d, "negative fundamental discriminant")->required();
  qselmer->callback([&] { action = [&] { return cmd_quad_selmer(ctx, d); }; });
  auto *qscreen = quad->add_subcommand("screen", "screen d = -4pq, p = q = 1 mod 4");
  qscreen->add_option("--max", bound, "bound on |d|");
  qscreen->callback([&] { action = [&] { return cmd_quad_screen(ctx, bound); }; });

  bool all = false;
  auto *verify = app.add_subcommand("verify", "run every end-to-end check");
  verify->add_flag("--all", all, "all checks")->required();
  verify->callback([&] { action = [&] { return cmd_verify(ctx); }; });

  CommandOutcome outcome;
  if (!args.empty() && !args.front().empty() && args.front().front() != '-') {
    auto known = app.get_subcommands([](CLI::App *) { return true; });
    bool found = std::any_of(known.begin(), known.end(), [&](CLI::App *a) { return a->get_name() == args.front(); });
    if (!found) {
      outcome.exit_code = 2;
      outcome.error = "unknown command: " + args.front() + "\n\n" + app.help();
      return outcome;
    }
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const &) {
    CLI::App const *target = &app;
    for (CLI::App const *sub = &app; sub;) {
      auto subs = sub->get_subcommands();
      if (subs.empty())
        break;
      target = sub = subs.front();
    }
    outcome.output = target->help();
    return outcome;
  } catch (CLI::ParseError const &e) {
    outcome.exit_code = 2;
    outcome.error = std::string(e.what()) + "\n\n" + app.help();
    return outcome;
  }

  try {
    outcome.exit_code = action();
  } catch (std::invalid_argument const &e) {
    outcome.exit_code = 2;
    ctx.err << "error: " << e.what() << '\n';
  } catch (CatalogError const &e) {
    outcome.exit_code = 2;
    ctx.err << "catalog error: " << e.what() << '\n';
  } catch (std::exception const &e) {
    outcome.exit_code = 1;
    ctx.err << "failed: " << e.what() << '\n';
  }
  outcome.output = ctx.out.str();
  outcome.error += ctx.err.str();
  return outcome;
}

} // namespace capgap
