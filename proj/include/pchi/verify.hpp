#pragma once

#include <string>
#include <vector>

#include "pchi/eulercat.hpp"

namespace pchi {

// Residuals of the three counting identities tying the local weightings to
// the Moebius coweightings; each is a theorem, so every residual must be 0.
struct IdentityResiduals {
  Rat poset, frobenius, orbit;
  bool ok() const { return poset == 0 && frobenius == 0 && orbit == 0; }
};

IdentityResiduals verify_combinatorial_identities(GroupPtr g, int p);

// Residuals of the direct-product formulas
//   1 - chi(S*_{G1 x G2}) = (1 - chi(S*_{G1})) (1 - chi(S*_{G2}))
// and the same with F* in place of S*; both sides computed independently.
struct ProductResiduals {
  Rat poset, frobenius;
  bool ok() const { return poset == 0 && frobenius == 0; }
};

ProductResiduals verify_products(const std::string& spec1, const std::string& spec2,
                                 int p);

// |G|_{p'} chi(F*) and |G|_{p'} chi(O*) are integers, and the denominator of
// chi(F*) is coprime to p.
struct IntegralityReport {
  Rat chi_f, chi_o;
  bool f_integral = false, o_integral = false, f_denominator_coprime = false;
  bool ok() const { return f_integral && o_integral && f_denominator_coprime; }
};

IntegralityReport verify_integrality(const ClassTable& table);

// Support theorems: the S/T/O weightings vanish off p-radical classes, the
// S/T/L/F coweightings vanish off elementary abelian classes, the
// elementary-abelian scope reproduces the nonidentity chi for S/T/L/F, the
// radical scope reproduces it for S/T/O, and with a normal Sylow subgroup P
// the Frobenius weighting is the distribution of the subgroups C_P(x).
struct SupportReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

SupportReport verify_support(const ClassTable& table);

// One scanned group; detail is a short human-readable witness line.
struct ScanEntry {
  std::string spec;
  unsigned long order = 0;
  bool consistent = true;
  std::string detail;
};

struct ScanReport {
  std::string conjecture;
  int prime = 0;
  std::string header;  // coverage disclaimer
  std::vector<ScanEntry> entries;
  // extremes of chi(F*) over the scanned groups with p dividing the order
  bool has_chi_f = false;
  Rat min_chi_f, max_chi_f;
  bool counterexample() const {
    for (const ScanEntry& e : entries)
      if (!e.consistent) return true;
    return false;
  }
};

// For each group: chi(S*) != 1 exactly when O_p(G) = 1.
ScanReport scan_quillen(const std::vector<std::string>& specs, int p);

// For each centric class: the exterior-quotient weighting is nonzero exactly
// on the f-radical classes.
ScanReport scan_fradical_support(const std::vector<std::string>& specs, int p);

// Every spec the builtin catalog scan enumerates, restricted to groups of
// order <= max_order. This is a documented generated list (seed families plus
// products of two seeds), not all isomorphism types of those orders.
std::vector<std::string> catalog_groups_up_to(unsigned long max_order);

}  // namespace pchi
