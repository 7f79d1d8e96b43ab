#pragma once

#include <map>
#include <string>
#include <vector>

#include "pchi/moebius.hpp"
#include "pchi/psub.hpp"

namespace pchi {

// The six p-subgroup categories: poset (S), transporter (T), linking (L),
// Frobenius (F), orbit (O), and the exterior quotient of F (Ftilde).
enum class Kind { S, T, L, F, O, Ftilde };

Kind parse_kind(const std::string& name);
std::string kind_name(Kind k);
const std::vector<Kind>& all_kinds();

// Morphism count between two concrete p-subgroups (element-level; used as
// the oracle and for small-group cross-checks).
Int morphism_count(Kind kind, const Subgroup& h, const Subgroup& k, int p);

// Class-level zeta matrix: entry(i,j) = morphism count from the class-i
// representative to the class-j representative. Upper triangular in table
// order with positive diagonal. Kind S has no class-constant zeta (its
// entries depend on representatives); requesting it is an input error.
struct ZetaMatrix {
  Kind kind;
  Scope scope;
  std::vector<int> sel;  // master class indices
  std::vector<std::vector<Rat>> entries;
};

ZetaMatrix zeta_matrix(const ClassTable& table, Kind kind, Scope scope);

// Class-level weights: values[i] is k^{[a_i]} (or k_{[a_i]}), the sum of the
// element-level weights over the class.
struct WeightVector {
  bool weighting = true;
  std::vector<int> sel;
  std::vector<Rat> values;
  Rat sum() const;
};

WeightVector solve_weighting(const ClassTable& table, const ZetaMatrix& zm);
WeightVector solve_coweighting(const ClassTable& table, const ZetaMatrix& zm);

// Euler characteristic via the triangular solves (kind S is handled through
// |G| * chi(T) on the same scope, the homotopy-orbit relation).
Rat chi_matrix(const ClassTable& table, Kind kind, Scope scope);

// Closed forms over class Moebius data; defined for scope nonidentity and
// centric only.
Rat chi_closed(const ClassTable& table, Kind kind, Scope scope);

// chi(O*) = chi(T*) + ((p-1)/p) sum over nonidentity cyclic classes of
// |C| / |N_G(C)|.
Rat chi_orbit_cyclic(const ClassTable& table);

// Closed forms for the categories over all p-subgroups, identity included.
Rat chi_full_closed(const ClassTable& table, Kind kind);

// chi of the poset of nonidentity p-subgroups of g, via elementary abelian
// enumeration; memoized on small groups.
Rat chi_poset(GroupPtr g, int p);

// Every elementary abelian p-subgroup of g, the trivial one included.
std::vector<Subgroup> elementary_abelian_subgroups(GroupPtr g, int p);

// chi(F*) = |G|^-1 sum over x in G of chi of the nonidentity p-subgroup
// poset of C_G(x).
Rat chi_F_via_centralizers(GroupPtr g, int p);

// chi(F*) when the Sylow p-subgroup P is normal: |{x : C_P(x) > 1}| / |G|,
// with the weighting supported on the subgroups C_P(x). Optionally reports
// that weighting on the nonidentity class list.
Rat chi_F_normal_sylow(const ClassTable& table, WeightVector* support = nullptr);

// chi(F*) when the Sylow p-subgroup P is abelian: the fraction of
// F_G(P) = N_G(P)/C_G(P) acting on P with nontrivial fixed points.
Rat chi_F_abelian_sylow(GroupPtr g, int p);

// chi(F*) summed over the nonidentity subgroups of one fixed Sylow:
// sum of -mu(K) |C_G(K)| / |N_G(K,P)|.
Rat chi_sylow_restricted_F(const ClassTable& table);

// Weightings computed from local data (normalizer quotients), per kind:
// S/T/O: (1 - chi of the poset of N_G(H)/H), scaled by 1, 1/|G|, |H|/|G:H|^-1;
// F: the centralizer-element sum; Ftilde (centric scope only): the
// Hall-weighted p'-centralizer sum. Kinds/scopes without a local form are
// input errors.
WeightVector local_weighting(const ClassTable& table, Kind kind, Scope scope);

struct KindResult {
  Rat chi;
  std::map<std::string, Rat> routes;  // every independent route, all equal chi
  WeightVector weighting, coweighting;
};

struct ChiReport {
  std::string group_text;
  unsigned long order = 0;
  int prime = 0;
  Scope scope = Scope::NonIdentity;
  std::vector<std::pair<Kind, KindResult>> results;
};

// Computes every kind over the scope with all applicable routes; any route
// disagreement throws (the identities are theorems).
ChiReport make_chi_report(const ClassTable& table, Scope scope,
                          const std::vector<Kind>& kinds,
                          const std::string& group_text);

}  // namespace pchi
