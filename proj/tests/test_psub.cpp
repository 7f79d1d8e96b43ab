#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pchi/catalog.hpp"
#include "pchi/psub.hpp"
#include "pchi/rational.hpp"

using namespace pchi;

// Exhaustive subgroup enumeration by subset closure (oracle, tiny groups only).
static std::set<std::string> oracle_p_subgroup_keys(GroupPtr g, int p) {
  std::set<std::string> seen;
  std::vector<Subgroup> queue;
  Subgroup triv = trivial_subgroup(g);
  seen.insert(triv.key());
  queue.push_back(triv);
  while (!queue.empty()) {
    Subgroup a = queue.back();
    queue.pop_back();
    for (std::size_t x = 0; x < g->order(); ++x) {
      std::vector<int> gens = a.generators();
      gens.push_back(static_cast<int>(x));
      Subgroup b = generated_subgroup(g, gens);
      if (seen.insert(b.key()).second) queue.push_back(b);
    }
  }
  std::set<std::string> out;
  for (const std::string& key : seen) {
    std::size_t n = key.size() / sizeof(int);
    bool ppower = true;
    while (n % static_cast<std::size_t>(p) == 0) n /= static_cast<std::size_t>(p);
    ppower = (n == 1);
    if (ppower) out.insert(key);
  }
  return out;
}

TEST_CASE("class tables of S3 and A4 at p=2") {
  auto s3 = build_group("S3");
  ClassTable t3(s3, 2);
  auto sel = t3.select(Scope::NonIdentity);
  REQUIRE(sel.size() == 1);
  CHECK(t3.classes()[sel[0]].order() == 2);
  CHECK(t3.classes()[sel[0]].class_size == 3);

  auto a4 = build_group("A4");
  ClassTable t4(a4, 2);
  auto sel4 = t4.select(Scope::NonIdentity);
  REQUIRE(sel4.size() == 2);
  const SubgroupClass& c2 = t4.classes()[sel4[0]];
  const SubgroupClass& v4 = t4.classes()[sel4[1]];
  CHECK(c2.order() == 2);
  CHECK(c2.class_size == 3);
  CHECK(v4.order() == 4);
  CHECK(v4.class_size == 1);
  CHECK(v4.flags.elementary_abelian);
  CHECK(v4.flags.p_radical);  // N/H = C3 has trivial 2-core
  CHECK(!c2.flags.p_radical);
  CHECK(c2.flags.cyclic);
}

TEST_CASE("empty table when p does not divide the order") {
  auto c7 = build_group("C7");
  ClassTable t(c7, 2);
  CHECK(t.select(Scope::NonIdentity).empty());
  CHECK(t.select(Scope::All).size() == 1);  // just the trivial class
}

TEST_CASE("ordering is subconjugation-compatible and subs are complete") {
  for (const char* spec : {"S4", "SL2:3", "Dih:12", "A5"}) {
    auto g = build_group(spec);
    ClassTable t(g, 2);
    const auto& cls = t.classes();
    for (std::size_t i = 0; i + 1 < cls.size(); ++i)
      CHECK(cls[i].order() <= cls[i + 1].order());
    for (std::size_t j = 0; j < cls.size(); ++j) {
      unsigned long count = 0;
      for (const RepSubgroup& rs : cls[j].subs) {
        // a subgroup's class never comes later than its overgroup's class
        CHECK(rs.class_id <= static_cast<int>(j));
        CHECK(rs.sub.order() * rs.centralizer_in_rep >= rs.sub.order());  // sanity
        if (rs.sub.order() == cls[j].order()) ++count;
      }
      CHECK(count == 1);  // the representative itself, exactly once
    }
  }
}

TEST_CASE("completeness against the subset-closure oracle") {
  for (const char* spec : {"S3", "A4", "Dih:6", "SL2:3", "Q8", "C12"}) {
    auto g = build_group(spec);
    for (int p : {2, 3}) {
      auto oracle = oracle_p_subgroup_keys(g, p);
      // oracle vs bottom-up Sylow enumeration
      auto listed = all_p_subgroups(g, p);
      CHECK(listed.size() == oracle.size());
      for (const Subgroup& s : listed) CHECK(oracle.count(s.key()) == 1);
      // oracle vs class table total count
      ClassTable t(g, p);
      unsigned long total = 0;
      for (const SubgroupClass& c : t.classes()) total += c.class_size;
      CHECK(total == oracle.size());
    }
  }
}

TEST_CASE("all_p_subgroups matches known counts") {
  CHECK(all_p_subgroups(build_group("S3"), 2).size() == 4);
  CHECK(all_p_subgroups(build_group("C4"), 2).size() == 3);
  CHECK(all_p_subgroups(build_group("A4"), 2).size() == 5);
}

TEST_CASE("classification flags") {
  // Dih:12 has order 24; its 2-core is cyclic of order 4 and is
  // p-selfcentralizing and p-radical but not F-radical.
  auto g = build_group("Dih:12");
  Subgroup h = p_core(g, 2);
  REQUIRE(h.order() == 4);
  REQUIRE(h.is_cyclic());
  ClassFlags f = classify(g, 2, h);
  CHECK(f.cyclic);
  CHECK(f.p_selfcentralizing);
  CHECK(f.p_radical);
  CHECK(!f.f_radical);

  // proper subgroups of an abelian p-group: F-radical but never p-radical
  auto e8 = build_group("EA:2:3");
  ClassTable t(e8, 2);
  for (int i : t.select(Scope::NonIdentity)) {
    const SubgroupClass& c = t.classes()[static_cast<std::size_t>(i)];
    if (c.order() < 8) {
      CHECK(c.flags.f_radical);
      CHECK(!c.flags.p_radical);
    } else {
      CHECK(c.flags.p_radical);
    }
  }

  CHECK_THROWS_AS(classify(g, 2, trivial_subgroup(g)), input_error);
}

TEST_CASE("centric flag is upward closed and matches the Sylow criterion") {
  for (const char* spec : {"S4", "A5", "Dih:12", "G288"}) {
    auto g = build_group(spec);
    ClassTable t(g, 2);
    Subgroup syl = sylow(g, 2);
    for (int j : t.select(Scope::NonIdentity)) {
      const SubgroupClass& k = t.classes()[static_cast<std::size_t>(j)];
      // upward closure: a centric subgroup below forces the overgroup centric
      for (const RepSubgroup& rs : k.subs) {
        if (rs.sub.order() == 1) continue;
        if (t.classes()[static_cast<std::size_t>(rs.class_id)].flags.p_selfcentralizing)
          CHECK(k.flags.p_selfcentralizing);
      }
      // C_P(H^g) <= H^g over the transporter into the Sylow
      bool crit = true;
      for (int gid : transporter(*g, k.rep, syl)) {
        Subgroup conj = conjugate_subgroup(k.rep, gid);
        Subgroup cps = centralizer_in(syl, conj);
        if (!conj.contains_all(cps)) {
          crit = false;
          break;
        }
      }
      CHECK(k.flags.p_selfcentralizing == crit);
    }
  }
}

TEST_CASE("scope selections") {
  auto g = build_group("A4");
  ClassTable t(g, 2);
  CHECK(t.select(Scope::All).size() == 3);
  CHECK(t.select(Scope::NonIdentity).size() == 2);
  CHECK(t.select(Scope::ElemAbelian).size() == 2);
  CHECK(t.select(Scope::Radical).size() == 1);   // only V4
  CHECK(t.select(Scope::Centric).size() == 1);   // C_{A4}(C2) = V4, so only V4 is centric
  CHECK(parse_scope("centric") == Scope::Centric);
  CHECK(scope_name(Scope::ElemAbelian) == "elementary-abelian");
  CHECK_THROWS_AS(parse_scope("bogus"), input_error);
}
