// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. The stretch row (A8) only runs when CHI_ACCEPT_STRETCH is set and
// never gates.
#include <array>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pchi/catalog.hpp"
#include "pchi/report.hpp"
#include "pchi/verify.hpp"

using namespace pchi;
using Clock = std::chrono::steady_clock;

namespace {

bool g_all_ok = true;

void line(int n, const std::string& what, bool ok, const std::string& note = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << n << ": " << what;
  if (!note.empty()) std::cout << " [" << note << "]";
  std::cout << std::endl;
  if (!ok) g_all_ok = false;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string chi_str(const ClassTable& t, Kind k, Scope s) {
  return rat_str(chi_matrix(t, k, s));
}

// criterion 1: alternating-group table at p=2, nonidentity scope
void criterion1() {
  struct Row {
    const char* spec;
    const char* s, *l, *f, *o;
  };
  const Row rows[] = {{"A4", "1", "1/12", "1/3", "1/3"},
                      {"A5", "5", "1/12", "1/3", "1/3"},
                      {"A6", "-15", "-1/24", "1/3", "1/3"},
                      {"A7", "-175", "-1/24", "1/3", "2/9"}};
  bool ok = true;
  std::ostringstream note;
  for (const Row& r : rows) {
    auto t0 = Clock::now();
    ClassTable t(build_group(r.spec), 2);
    bool here = chi_str(t, Kind::S, Scope::NonIdentity) == r.s &&
                chi_str(t, Kind::L, Scope::NonIdentity) == r.l &&
                chi_str(t, Kind::F, Scope::NonIdentity) == r.f &&
                chi_str(t, Kind::O, Scope::NonIdentity) == r.o;
    double secs = seconds_since(t0);
    if (secs > 30.0) here = false;
    if (!here) note << r.spec << " mismatch or too slow (" << secs << "s); ";
    ok = ok && here;
  }
  line(1, "alternating-group table values at p=2 (A4..A7, within 30s each)", ok,
       note.str());
  if (std::getenv("CHI_ACCEPT_STRETCH")) {
    auto t0 = Clock::now();
    ClassTable t(build_group("A8"), 2);
    bool stretch = chi_str(t, Kind::S, Scope::NonIdentity) == "65" &&
                   chi_str(t, Kind::L, Scope::NonIdentity) == "1081/2016" &&
                   chi_str(t, Kind::F, Scope::NonIdentity) == "41/63" &&
                   chi_str(t, Kind::O, Scope::NonIdentity) == "13/63";
    std::cout << (stretch ? "PASS" : "FAIL") << "  criterion 1 (stretch, non-gating): A8 row ["
              << seconds_since(t0) << "s]" << std::endl;
  } else {
    std::cout << "SKIP  criterion 1 (stretch, non-gating): A8 row (set CHI_ACCEPT_STRETCH to run)"
              << std::endl;
  }
}

// criterion 2: centric-scope table at p=2
void criterion2() {
  bool ok = true;
  std::ostringstream note;
  auto row = [&](const char* spec, std::map<Kind, std::string> expect) {
    auto t0 = Clock::now();
    ClassTable t(build_group(spec), 2);
    for (const auto& [k, v] : expect)
      if (chi_str(t, k, Scope::Centric) != v) {
        ok = false;
        note << spec << " " << kind_name(k) << "; ";
      }
    if (seconds_since(t0) > 60.0) {
      ok = false;
      note << spec << " too slow; ";
    }
  };
  for (const char* spec : {"A4", "A5"})
    row(spec, {{Kind::O, "1/3"},
               {Kind::T, "1/12"},
               {Kind::L, "1/12"},
               {Kind::F, "1/3"},
               {Kind::Ftilde, "1/3"}});
  row("A6", {{Kind::T, "-1/24"}, {Kind::O, "1/3"}});
  row("A7", {{Kind::T, "-5/72"}, {Kind::O, "2/9"}, {Kind::F, "1/3"}, {Kind::Ftilde, "1/3"}});
  line(2, "centric-scope table values at p=2 (A4..A7, within 60s each)", ok, note.str());
}

// criterion 3: closed-family values
void criterion3() {
  bool ok = chi_poset(build_group("A5"), 5) == Rat(6) &&
            chi_poset(build_group("SL2:3"), 3) == Rat(4);
  {
    ClassTable t(build_group("Dih:3"), 3);
    ok = ok && chi_matrix(t, Kind::F, Scope::NonIdentity) == make_rat(1, 2);
  }
  {
    ClassTable t(build_group("SL2:5"), 5);
    ok = ok && chi_matrix(t, Kind::F, Scope::NonIdentity) == make_rat(1, 2);
  }
  line(3, "closed-family values: poset chi of A5 at p=5 and SL2:3 at p=3, "
          "Frobenius chi of Dih:3 at p=3 and SL2:5 at p=5",
       ok);
}

// criterion 4: worked examples
void criterion4() {
  bool ok = true;
  {
    ClassTable t(build_group("G288"), 2);
    ok = chi_str(t, Kind::F, Scope::NonIdentity) == "10/9";
  }
  {
    ClassTable t(build_group("C2cubeByC3"), 2);
    WeightVector w = solve_weighting(t, zeta_matrix(t, Kind::F, Scope::NonIdentity));
    Rat at_center(0), at_sylow(0);
    bool rest_zero = true;
    for (std::size_t i = 0; i < w.sel.size(); ++i) {
      const SubgroupClass& c = t.classes()[static_cast<std::size_t>(w.sel[i])];
      if (c.order() == 2 && c.class_size == 1)
        at_center = w.values[i];
      else if (c.order() == 8)
        at_sylow = w.values[i];
      else if (w.values[i] != 0)
        rest_zero = false;
    }
    ok = ok && at_center == make_rat(2, 3) && at_sylow == make_rat(1, 3) && rest_zero &&
         chi_matrix(t, Kind::F, Scope::NonIdentity) == Rat(1);
  }
  line(4, "worked examples: Frobenius chi 10/9 for the order-288 group, "
          "Frobenius weighting {2/3 at the center, 1/3 at the Sylow} for C2^3:C3",
       ok);
}

bool g_pending7_integrality = true;
std::string g_pending7_note;

// criteria 5, 7 (integrality part), 8: one pass over the catalog
void criteria578() {
  auto t0 = Clock::now();
  bool routes_ok = true, integ_ok = true, support_ok = true;
  std::ostringstream note5, note7, note8;
  for (const std::string& spec : catalog_groups_up_to(2500)) {
    GroupPtr g = build_group(spec);
    for (int p : {2, 3}) {
      try {
        ClassTable t(g, p);
        make_chi_report(t, Scope::NonIdentity, all_kinds(), spec);
        make_chi_report(t, Scope::Centric, all_kinds(), spec);
        if (!verify_integrality(t).ok()) {
          integ_ok = false;
          note7 << spec << " p=" << p << "; ";
        }
        SupportReport s = verify_support(t);
        if (!s.ok()) {
          support_ok = false;
          note8 << spec << " p=" << p << ": " << s.violations.front() << "; ";
        }
      } catch (const std::exception& e) {
        routes_ok = false;
        note5 << spec << " p=" << p << ": " << e.what() << "; ";
      }
    }
  }
  double secs = seconds_since(t0);
  if (secs > 600.0) {
    routes_ok = false;
    note5 << "suite exceeded 10 minutes; ";
  }
  std::ostringstream t5;
  t5 << "all routes agree on every catalog group of order <= 2500 at p=2,3 ["
     << static_cast<long>(secs) << "s]";
  line(5, t5.str(), routes_ok, note5.str());
  g_pending7_integrality = integ_ok;
  g_pending7_note = note7.str();
  line(8, "support theorems on every catalog group of order <= 2500 at p=2,3",
       support_ok, note8.str());
}

// criterion 6: oracle equivalence on catalog groups of order <= 200
void criterion6() {
  bool ok = true;
  std::ostringstream note;
  for (const std::string& spec : catalog_groups_up_to(200)) {
    GroupPtr g = build_group(spec);
    for (int p : {2, 3}) {
      // (a) enumeration equals the subset-closure oracle: grow every
      // subgroup one extra generator at a time, closing words against a
      // precomputed multiplication table (element arithmetic hashes
      // permutation images and is far too slow for this loop)
      std::size_t ord = g->order();
      std::set<std::string> oracle;
      {
        std::vector<std::vector<int>> mt(ord, std::vector<int>(ord));
        for (std::size_t x = 0; x < ord; ++x)
          for (std::size_t y = 0; y < ord; ++y)
            mt[x][y] = g->mult(static_cast<int>(x), static_cast<int>(y));
        auto closure_key = [&](const std::vector<int>& gens) -> std::string {
          std::vector<char> in(ord, 0);
          std::vector<int> elems{g->identity_id()};
          in[static_cast<std::size_t>(elems[0])] = 1;
          for (std::size_t i = 0; i < elems.size(); ++i)
            for (int x : gens) {
              int y = mt[static_cast<std::size_t>(elems[i])]
                        [static_cast<std::size_t>(x)];
              if (!in[static_cast<std::size_t>(y)]) {
                in[static_cast<std::size_t>(y)] = 1;
                elems.push_back(y);
              }
            }
          std::sort(elems.begin(), elems.end());
          return std::string(reinterpret_cast<const char*>(elems.data()),
                             elems.size() * sizeof(int));
        };
        std::set<std::string> all_subs;
        std::vector<std::vector<int>> queue{{}};
        all_subs.insert(closure_key({}));
        while (!queue.empty()) {
          std::vector<int> gens = queue.back();
          queue.pop_back();
          gens.push_back(0);
          for (std::size_t x = 0; x < ord; ++x) {
            gens.back() = static_cast<int>(x);
            if (all_subs.insert(closure_key(gens)).second) queue.push_back(gens);
          }
        }
        for (const std::string& key : all_subs) {
          std::size_t n = key.size() / sizeof(int);
          while (n % static_cast<std::size_t>(p) == 0) n /= static_cast<std::size_t>(p);
          if (n == 1) oracle.insert(key);
        }
      }
      std::vector<Subgroup> subs = all_p_subgroups(g, p, 100000);
      bool same = subs.size() == oracle.size();
      for (const Subgroup& s : subs) same = same && oracle.count(s.key()) == 1;
      if (!same) {
        ok = false;
        note << spec << " p=" << p << " enumeration; ";
        continue;
      }

      // (b) Hall's formula equals the recursive poset Moebius function.
      // The Frattini subgroup is computed once per upper subgroup; mu_hall
      // would redo it for each of the (many) comparable pairs.
      {
        std::size_t n = subs.size();
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) leq[a][b] = subs[b].contains_all(subs[a]);
        auto mu = mobius_matrix(FinitePoset(leq));
        for (std::size_t b = 0; b < n && ok; ++b) {
          Subgroup phi = frattini(subs[b], p);
          for (std::size_t a = 0; a < n; ++a) {
            if (!leq[a][b]) continue;
            Int expect = 0;  // Hall: 0 unless H contains the Frattini subgroup
            if (subs[a].contains_all(phi)) {
              std::size_t index = subs[b].order() / subs[a].order();
              unsigned long m = 0;
              while (index > 1) {
                index /= static_cast<std::size_t>(p);
                ++m;
              }
              expect = int_pow(static_cast<unsigned long>(p), m * (m - 1) / 2);
              if (m % 2 == 1) expect = -expect;
            }
            if (mu[a][b] != expect) {
              ok = false;
              note << spec << " p=" << p << " Moebius; ";
              break;
            }
          }
        }
      }

      // (c) element-level zeta equations hold for the class-level weights:
      // sum_b zeta(a,b) k^b = 1 at every class representative a over all
      // nonidentity b, and the coweighting duals, for every kind. One
      // transporter set per pair serves all five kinds.
      ClassTable t(g, p);
      std::vector<int> sel = t.select(Scope::NonIdentity);
      if (sel.empty()) continue;
      std::vector<Subgroup> nonid;
      for (const Subgroup& s : subs)
        if (s.order() > 1) nonid.push_back(s);
      const std::vector<Kind> kinds = {Kind::T, Kind::L, Kind::F, Kind::O,
                                       Kind::Ftilde};
      std::map<int, std::size_t> pos;
      for (std::size_t i = 0; i < sel.size(); ++i) pos[sel[i]] = i;
      std::map<Kind, WeightVector> w, cw;
      for (Kind k : kinds) {
        ZetaMatrix zm = zeta_matrix(t, k, Scope::NonIdentity);
        w[k] = solve_weighting(t, zm);
        cw[k] = solve_coweighting(t, zm);
      }
      // explicit Rat return: gmpxx expression templates must not escape
      auto element_weight = [&](const WeightVector& v, const Subgroup& s) -> Rat {
        std::size_t i = pos.at(t.class_of(s));
        return v.values[i] /
               Rat(t.classes()[static_cast<std::size_t>(v.sel[i])].class_size);
      };
      // conjugation table and inverses: element arithmetic goes through a
      // hash on permutation images, far too slow for the loops below
      std::vector<std::vector<int>> ct(ord, std::vector<int>(ord));
      std::vector<int> invs(ord);
      for (std::size_t x = 0; x < ord; ++x) {
        invs[x] = g->inv(static_cast<int>(x));
        for (std::size_t n = 0; n < ord; ++n)
          ct[x][n] = g->conj(static_cast<int>(x), static_cast<int>(n));
      }
      // membership bitvectors per target subgroup
      std::map<std::string, std::vector<char>> memb_cache;
      auto membership = [&](const Subgroup& s) -> const std::vector<char>& {
        auto it = memb_cache.find(s.key());
        if (it == memb_cache.end()) {
          std::vector<char> m(ord, 0);
          for (int id : s.ids()) m[static_cast<std::size_t>(id)] = 1;
          it = memb_cache.emplace(s.key(), std::move(m)).first;
        }
        return it->second;
      };
      // per-subgroup data, computed once: |C_G(a)|, |O^p(C_G(a))|, and a
      // membership table for C_G(a) over group-element ids
      struct SourceData {
        unsigned long cent;
        unsigned long opc;
        std::vector<char> in_cent;
      };
      std::map<std::string, SourceData> src_cache;
      auto source_data = [&](const Subgroup& a) -> const SourceData& {
        auto it = src_cache.find(a.key());
        if (it == src_cache.end()) {
          Subgroup c = centralizer(*g, a);
          SourceData d{c.order(), p_residual(c, p).order(),
                       std::vector<char>(g->order(), 0)};
          for (int id : c.ids()) d.in_cent[static_cast<std::size_t>(id)] = 1;
          it = src_cache.emplace(a.key(), std::move(d)).first;
        }
        return it->second;
      };
      // per-pair per-kind zeta values from one transporter set; the exterior
      // quotient uses x in C_b(a^n) <=> n x n^-1 in C_G(a) (a^n = n^-1 a n)
      auto zeta_row = [&](const Subgroup& a, const Subgroup& b,
                          const SourceData& d) -> std::array<Rat, 5> {
        const std::vector<char>& in_b = membership(b);
        const std::vector<int>& agens = a.generators();
        unsigned long tc = 0;
        unsigned long burnside = 0;
        if (a.order() <= b.order())
          for (std::size_t n = 0; n < ord; ++n) {
            bool carries = true;
            for (int x : agens)
              if (!in_b[static_cast<std::size_t>(
                      ct[static_cast<std::size_t>(x)][n])]) {
                carries = false;
                break;
              }
            if (!carries) continue;
            ++tc;
            const std::size_t ninv = static_cast<std::size_t>(invs[n]);
            for (int x : b.ids())
              burnside += static_cast<unsigned long>(
                  d.in_cent[static_cast<std::size_t>(
                      ct[static_cast<std::size_t>(x)][ninv])]);
          }
        return {Rat(tc), make_rat(tc, d.opc), make_rat(tc, d.cent),
                make_rat(tc, b.order()),
                make_rat(burnside, Int(d.cent) * Int(b.order()))};
      };
      std::map<Kind, bool> kind_ok;
      for (Kind k : kinds) kind_ok[k] = true;
      auto check = [&](const std::array<Rat, 5>& total) {
        for (std::size_t i = 0; i < kinds.size(); ++i)
          kind_ok[kinds[i]] = kind_ok[kinds[i]] && total[i] == 1;
      };
      for (int idx : sel) {  // weighting equations at each representative
        const Subgroup& a = t.classes()[static_cast<std::size_t>(idx)].rep;
        const SourceData& d = source_data(a);
        std::array<Rat, 5> total;
        for (const Subgroup& b : nonid) {
          auto z = zeta_row(a, b, d);
          for (std::size_t i = 0; i < kinds.size(); ++i)
            total[i] += z[i] * element_weight(w[kinds[i]], b);
        }
        check(total);
      }
      for (int idx : sel) {  // coweighting equations at each representative
        const Subgroup& b = t.classes()[static_cast<std::size_t>(idx)].rep;
        std::array<Rat, 5> total;
        for (const Subgroup& a : nonid) {
          auto z = zeta_row(a, b, source_data(a));
          for (std::size_t i = 0; i < kinds.size(); ++i)
            total[i] += element_weight(cw[kinds[i]], a) * z[i];
        }
        check(total);
      }
      for (Kind k : kinds)
        if (!kind_ok[k]) {
          ok = false;
          note << spec << " p=" << p << " kind " << kind_name(k) << "; ";
        }
    }
  }
  line(6, "oracle equivalence on catalog groups of order <= 200: enumeration, "
          "Moebius closed form, element-level zeta equations",
       ok, note.str());
}

// criterion 7: counting identities, product formulas, the power-sum lemma,
// and the integrality results gathered during the catalog pass
void criterion7() {
  bool ok = g_pending7_integrality;
  std::ostringstream note;
  note << g_pending7_note;
  for (const std::string& spec : catalog_groups_up_to(300)) {
    GroupPtr g = build_group(spec);
    for (int p : {2, 3}) {
      if (!verify_combinatorial_identities(g, p).ok()) {
        ok = false;
        note << spec << " p=" << p << " identities; ";
      }
    }
  }
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"S3", "S3"}, {"A4", "C2"}, {"S3", "A4"}}) {
    if (!verify_products(a, b, 2).ok()) {
      ok = false;
      note << a << "x" << b << " product; ";
    }
  }
  for (int p : {2, 3, 5}) {
    if (alternating_power_sum(1, p) != p - 1) ok = false;
    for (int n = 2; n <= 8; ++n)
      if (alternating_power_sum(n, p) != 0) ok = false;
  }
  line(7, "counting identities (catalog <= 300), product formulas, power-sum "
          "lemma, integrality over the catalog <= 2500",
       ok, note.str());
}

// criterion 9: conjecture scans over the catalog up to order 760 at p=2
void criterion9() {
  auto specs = catalog_groups_up_to(760);
  ScanReport q = scan_quillen(specs, 2);
  ScanReport f = scan_fradical_support(specs, 2);
  bool ok = !q.counterexample() && !f.counterexample();
  std::ostringstream note;
  if (q.counterexample()) note << "p-core/contractibility scan found a counterexample; ";
  if (f.counterexample()) note << "f-radical support scan found a counterexample; ";
  line(9, "conjecture scans clean over the catalog up to order 760 at p=2", ok,
       note.str());
}

}  // namespace

int main() {
  // CHI_ACCEPT_ONLY="6 9" runs a subset (debugging aid)
  std::set<int> only;
  if (const char* sel = std::getenv("CHI_ACCEPT_ONLY")) {
    std::istringstream in(sel);
    int n;
    while (in >> n) only.insert(n);
  }
  auto want = [&](int n) { return only.empty() || only.count(n) > 0; };
  try {
    if (want(1)) criterion1();
    if (want(2)) criterion2();
    if (want(3)) criterion3();
    if (want(4)) criterion4();
    if (want(5) || want(7) || want(8)) criteria578();
    if (want(6)) criterion6();
    if (want(7)) criterion7();
    if (want(9)) criterion9();
  } catch (const std::exception& e) {
    std::cout << "FAIL  unexpected exception: " << e.what() << std::endl;
    return 1;
  }
  return g_all_ok ? 0 : 1;
}
