#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pchi/catalog.hpp"
#include "pchi/verify.hpp"

using namespace pchi;

TEST_CASE("combinatorial identities have zero residuals") {
  for (const char* spec : {"S3", "A4", "S4", "A5", "SL2:3", "Dih:12", "C2cubeByC3"}) {
    auto r = verify_combinatorial_identities(build_group(spec), 2);
    CAPTURE(spec);
    CHECK(r.poset == 0);
    CHECK(r.frobenius == 0);
    CHECK(r.orbit == 0);
  }
  // p not dividing the order: empty sums
  auto r = verify_combinatorial_identities(build_group("C7"), 2);
  CHECK(r.ok());
}

TEST_CASE("product formulas have zero residuals") {
  CHECK(verify_products("S3", "S3", 2).ok());
  CHECK(verify_products("A4", "C2", 2).ok());
  CHECK(verify_products("S3", "A4", 2).ok());
  CHECK(verify_products("S3", "C1", 2).ok());  // trivial factor
  // chi(S*_{S3 x S3}) = -3 since 1 - chi = (1 - 3)^2
  CHECK(chi_poset(build_group("S3xS3"), 2) == make_rat(-3, 1));
}

TEST_CASE("integrality of scaled Euler characteristics") {
  for (const char* spec : {"A4", "S4", "A5", "SL2:3", "G288", "Q8", "Dih:6"}) {
    auto g = build_group(spec);
    for (int p : {2, 3}) {
      ClassTable t(g, p);
      auto r = verify_integrality(t);
      CAPTURE(spec);
      CHECK(r.ok());
    }
  }
  // A5 at p=2: |G|_{2'} = 15, chi(F*) = 1/3, 15 * 1/3 = 5
  ClassTable t(build_group("A5"), 2);
  auto r = verify_integrality(t);
  CHECK(r.chi_f == make_rat(1, 3));
  CHECK(is_integer(Rat(15) * r.chi_f));
}

TEST_CASE("support theorems hold") {
  for (const char* spec :
       {"A4", "S4", "A5", "SL2:3", "Dih:12", "C2cubeByC3", "G288", "S3xS3"}) {
    auto g = build_group(spec);
    for (int p : {2, 3}) {
      ClassTable t(g, p);
      auto r = verify_support(t);
      CAPTURE(spec);
      CAPTURE(p);
      for (const auto& v : r.violations) CAPTURE(v);
      CHECK(r.ok());
    }
  }
}

TEST_CASE("Frobenius weighting of a split extension with central fixed points") {
  // G = C2^3 : C3 at p=2: weighting 2/3 at the central C2, 1/3 at the Sylow
  auto g = build_group("C2cubeByC3");
  ClassTable t(g, 2);
  WeightVector w = solve_weighting(t, zeta_matrix(t, Kind::F, Scope::NonIdentity));
  Rat at_center(0), at_sylow(0), elsewhere(0);
  for (std::size_t i = 0; i < w.sel.size(); ++i) {
    const SubgroupClass& c = t.classes()[static_cast<std::size_t>(w.sel[i])];
    if (c.order() == 2 && c.class_size == 1)
      at_center += w.values[i];
    else if (c.order() == 8)
      at_sylow += w.values[i];
    else
      elsewhere += w.values[i] == 0 ? Rat(0) : Rat(1);
  }
  CHECK(at_center == make_rat(2, 3));
  CHECK(at_sylow == make_rat(1, 3));
  CHECK(elsewhere == 0);
  CHECK(chi_matrix(t, Kind::F, Scope::NonIdentity) == Rat(1));
}

TEST_CASE("quillen scan is consistent on known groups") {
  auto report = scan_quillen({"C2", "A4", "A5", "S4", "S6", "Dih:12"}, 2);
  CHECK(report.conjecture == "quillen");
  CHECK(!report.counterexample());
  CHECK(report.entries.size() == 6);
  for (const auto& e : report.entries) {
    CAPTURE(e.spec);
    CAPTURE(e.detail);
    CHECK(e.consistent);
  }
  CHECK(report.has_chi_f);
  CHECK(!report.header.empty());
}

TEST_CASE("f-radical support scan is consistent on known groups") {
  auto report = scan_fradical_support({"Q8", "A4", "S4", "Dih:12", "SL2:3"}, 2);
  CHECK(report.conjecture == "fradical");
  CHECK(!report.counterexample());
  for (const auto& e : report.entries) {
    CAPTURE(e.spec);
    CAPTURE(e.detail);
    CHECK(e.consistent);
  }
}

TEST_CASE("catalog listing respects the order bound") {
  auto specs = catalog_groups_up_to(100);
  CHECK(std::find(specs.begin(), specs.end(), "A4") != specs.end());
  CHECK(std::find(specs.begin(), specs.end(), "S3xS3") != specs.end());
  CHECK(std::find(specs.begin(), specs.end(), "S5") == specs.end());
  CHECK(std::find(specs.begin(), specs.end(), "A5xA5") == specs.end());
  for (const auto& s : specs) CHECK(build_group(s)->order() <= 100);
  // no duplicates
  auto copy = specs;
  std::sort(copy.begin(), copy.end());
  CHECK(std::adjacent_find(copy.begin(), copy.end()) == copy.end());
  CHECK(catalog_groups_up_to(760).size() > specs.size());
}
