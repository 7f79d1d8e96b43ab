#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "pchi/catalog.hpp"
#include "pchi/report.hpp"
#include "pchi/verify.hpp"

using namespace pchi;

namespace {

// exit codes: 0 ok, 1 theorem violation, 2 input error, 3 resource cap,
// 4 conjecture counterexample
constexpr int kOk = 0;
constexpr int kTheorem = 1;
constexpr int kInput = 2;
constexpr int kResource = 3;
constexpr int kCounterexample = 4;

std::vector<Kind> parse_kinds(const std::string& list) {
  if (list.empty()) return all_kinds();
  std::vector<Kind> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string::npos) comma = list.size();
    out.push_back(parse_kind(list.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::string class_label(const SubgroupClass& c) {
  return "order " + std::to_string(c.order()) + ", class size " +
         std::to_string(c.class_size);
}

int cmd_chi(const std::string& spec, int prime, const std::string& scope_text,
            const std::string& kinds_text, const std::string& format, bool timings) {
  auto t0 = std::chrono::steady_clock::now();
  GroupPtr g = build_group(spec);
  Scope scope = parse_scope(scope_text);
  std::vector<Kind> kinds = parse_kinds(kinds_text);
  ClassTable table(g, prime);
  auto t1 = std::chrono::steady_clock::now();
  ChiReport report = make_chi_report(table, scope, kinds, spec);
  auto t2 = std::chrono::steady_clock::now();
  bool empty_scope = table.select(scope).empty();
  if (format == "json") {
    std::map<std::string, long> phases;
    if (timings) {
      phases["classes_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
      phases["chi_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(t2 - t1).count();
    }
    std::cout << report_document(table, report, {}, phases).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << render_csv(report);
  } else {
    if (empty_scope)
      std::cout << "scope " << scope_name(scope) << " is empty for " << spec
                << " at p=" << prime << "\n";
    std::cout << render_table(report);
  }
  return kOk;
}

int cmd_weights(const std::string& spec, int prime, const std::string& kind_text,
                const std::string& side, const std::string& scope_text) {
  GroupPtr g = build_group(spec);
  Kind kind = parse_kind(kind_text);
  Scope scope = parse_scope(scope_text);
  bool want_weighting = side == "weighting";
  if (!want_weighting && side != "coweighting")
    throw input_error("--side must be weighting or coweighting");
  ClassTable table(g, prime);
  ChiReport report = make_chi_report(table, scope, {kind}, spec);
  const KindResult& res = report.results.front().second;
  const WeightVector& w = want_weighting ? res.weighting : res.coweighting;
  if (w.values.empty() && !table.select(scope).empty()) {
    std::cout << "no " << side << " is computed for kind " << kind_text << " on scope "
              << scope_name(scope) << "\n";
    return kInput;
  }
  std::cout << spec << "  p=" << prime << "  " << kind_text << " " << side << " ("
            << scope_name(scope) << " scope)\n";
  Rat total(0);
  for (std::size_t i = 0; i < w.sel.size(); ++i) {
    const SubgroupClass& c = table.classes()[static_cast<std::size_t>(w.sel[i])];
    std::cout << "  [" << class_label(c) << "]: " << rat_str(w.values[i]) << "\n";
    total += w.values[i];
  }
  std::cout << "  sum: " << rat_str(total) << "\n";
  return kOk;
}

int cmd_verify(const std::string& spec, int prime) {
  GroupPtr g = build_group(spec);
  ClassTable table(g, prime);
  bool bad = false;
  IdentityResiduals ids = verify_combinatorial_identities(g, prime);
  std::cout << "poset identity residual:     " << rat_str(ids.poset) << "\n";
  std::cout << "frobenius identity residual: " << rat_str(ids.frobenius) << "\n";
  std::cout << "orbit identity residual:     " << rat_str(ids.orbit) << "\n";
  bad |= !ids.ok();
  IntegralityReport integ = verify_integrality(table);
  std::cout << "chi(F*)=" << rat_str(integ.chi_f) << " chi(O*)=" << rat_str(integ.chi_o)
            << " integrality " << (integ.ok() ? "ok" : "VIOLATED") << "\n";
  bad |= !integ.ok();
  SupportReport support = verify_support(table);
  if (support.ok()) {
    std::cout << "support theorems: ok\n";
  } else {
    for (const auto& v : support.violations) std::cout << "support: " << v << "\n";
    bad = true;
  }
  for (Scope s : {Scope::All, Scope::NonIdentity, Scope::Centric, Scope::ElemAbelian,
                  Scope::Radical}) {
    make_chi_report(table, s, all_kinds(), spec);  // throws on route disagreement
    std::cout << "route agreement on scope " << scope_name(s) << ": ok\n";
  }
  return bad ? kTheorem : kOk;
}

int cmd_table(const std::string& family, int from, int to, int prime,
              const std::string& scope_text) {
  if (family != "A") throw input_error("only --family A is available");
  if (from < 3 || to < from) throw input_error("need 3 <= from <= to");
  Scope scope = parse_scope(scope_text);
  std::vector<Kind> kinds =
      scope == Scope::Centric
          ? std::vector<Kind>{Kind::O, Kind::T, Kind::L, Kind::F, Kind::Ftilde}
          : std::vector<Kind>{Kind::S, Kind::T, Kind::L, Kind::F, Kind::O};
  std::cout << "n";
  for (Kind k : kinds) std::cout << "\t" << kind_name(k);
  std::cout << "\n";
  for (int n = from; n <= to; ++n) {
    std::string spec = "A" + std::to_string(n);
    GroupPtr g = build_group(spec);
    ClassTable table(g, prime);
    ChiReport report = make_chi_report(table, scope, kinds, spec);
    std::cout << n;
    for (const auto& [kind, res] : report.results) std::cout << "\t" << rat_str(res.chi);
    std::cout << "\n";
  }
  return kOk;
}

int cmd_scan(const std::string& conjecture, unsigned long max_order, int prime) {
  std::vector<std::string> specs = catalog_groups_up_to(max_order);
  ScanReport report;
  if (conjecture == "quillen")
    report = scan_quillen(specs, prime);
  else if (conjecture == "fradical")
    report = scan_fradical_support(specs, prime);
  else
    throw input_error("--conjecture must be quillen or fradical");
  std::cout << "scan " << report.conjecture << "  p=" << prime << "  max order "
            << max_order << "  (" << specs.size() << " groups)\n";
  std::cout << "note: " << report.header << "\n";
  for (const ScanEntry& e : report.entries)
    std::cout << (e.consistent ? "  ok   " : "  FAIL ") << e.spec << " (order "
              << e.order << "): " << e.detail << "\n";
  if (report.has_chi_f)
    std::cout << "chi(F*) range over scanned groups: [" << rat_str(report.min_chi_f)
              << ", " << rat_str(report.max_chi_f) << "]\n";
  if (report.counterexample()) {
    // serialized witness for each inconsistent group
    for (const ScanEntry& e : report.entries) {
      if (e.consistent) continue;
      GroupPtr g = build_group(e.spec);
      ClassTable table(g, prime);
      Scope scope = conjecture == "fradical" ? Scope::Centric : Scope::NonIdentity;
      ChiReport witness = make_chi_report(table, scope, all_kinds(), e.spec);
      std::cout << report_document(table, witness).dump(2) << "\n";
    }
    return kCounterexample;
  }
  std::cout << "no counterexample\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler characteristics of p-subgroup categories of finite groups"};
  app.require_subcommand(1);

  std::string spec, scope = "nonidentity", kinds, format = "table", kind = "T",
              side = "weighting", family = "A", conjecture;
  int prime = 2, from = 4, to = 7;
  unsigned long max_order = 760;
  bool timings = false;

  CLI::App* c_chi = app.add_subcommand("chi", "Euler characteristics of one group");
  c_chi->add_option("spec", spec, "group spec, e.g. A4, Dih:6, S3xS3")->required();
  c_chi->add_option("--prime", prime, "the prime p")->required();
  c_chi->add_option("--scope", scope, "all|nonidentity|centric|elementary-abelian|radical");
  c_chi->add_option("--kinds", kinds, "comma list from S,T,L,F,O,Ftilde (default all)");
  c_chi->add_option("--format", format, "table|json|csv");
  c_chi->add_flag("--timings", timings, "attach phase timings to JSON output");

  CLI::App* c_w = app.add_subcommand("weights", "per-class weighting of one category");
  c_w->add_option("spec", spec)->required();
  c_w->add_option("--prime", prime)->required();
  c_w->add_option("--kind", kind, "S|T|L|F|O|Ftilde");
  c_w->add_option("--side", side, "weighting|coweighting");
  c_w->add_option("--scope", scope);

  CLI::App* c_v = app.add_subcommand("verify", "check every identity on one group");
  c_v->add_option("spec", spec)->required();
  c_v->add_option("--prime", prime)->required();

  CLI::App* c_t = app.add_subcommand("table", "chi table for a family of groups");
  c_t->add_option("--family", family, "only A (alternating groups)");
  c_t->add_option("--from", from);
  c_t->add_option("--to", to);
  c_t->add_option("--prime", prime);
  c_t->add_option("--scope", scope);

  CLI::App* c_s = app.add_subcommand("scan", "conjecture scan over the catalog");
  c_s->add_option("--conjecture", conjecture, "quillen|fradical")->required();
  c_s->add_option("--max-order", max_order);
  c_s->add_option("--prime", prime);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (c_chi->parsed()) return cmd_chi(spec, prime, scope, kinds, format, timings);
    if (c_w->parsed()) return cmd_weights(spec, prime, kind, side, scope);
    if (c_v->parsed()) return cmd_verify(spec, prime);
    if (c_t->parsed()) return cmd_table(family, from, to, prime, scope);
    if (c_s->parsed()) return cmd_scan(conjecture, max_order, prime);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const resource_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const theorem_error& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kTheorem;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return kTheorem;
  }
  return kInput;
}
