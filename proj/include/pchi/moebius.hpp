#pragma once

#include <vector>

#include "pchi/psub.hpp"
#include "pchi/rational.hpp"

namespace pchi {

// An explicit finite poset given by its order relation; validated on
// construction (reflexive, antisymmetric, transitive).
class FinitePoset {
 public:
  explicit FinitePoset(std::vector<std::vector<bool>> leq);
  int size() const { return static_cast<int>(leq_.size()); }
  bool leq(int a, int b) const {
    return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

 private:
  std::vector<std::vector<bool>> leq_;
};

// Full Moebius matrix by recursion: mu(a,a)=1, sum_{a<=c<=b} mu(a,c) = 0.
std::vector<std::vector<Int>> mobius_matrix(const FinitePoset& p);

// Single value; input error when a is not below b.
Int mu_poset_oracle(const FinitePoset& p, int a, int b);

// Hall's closed form for p-subgroups H <= K:
// (-1)^n p^C(n,2) when Phi(K) <= H, |K:H| = p^n; otherwise 0.
Int mu_hall(const Subgroup& h, const Subgroup& k, int p);

// mu(K) = mu(1,K): nonzero only for elementary abelian K.
Int mu_hall_bottom(const Subgroup& k, int p);

// Number of d-dimensional subspaces of F_p^n (product formula).
Int gauss_binom(int n, int d, int p);

// Sum_{d=0}^n (-1)^d gauss_binom(n,d,p) p^C(d,2) p^{n-d};
// equals p-1 for n=1 and 0 for n>1.
Int alternating_power_sum(int n, int p);

// Class-level Moebius function on a class selection (nonidentity or centric):
// entry(i,j) = (-1)^n p^C(n,2) |N^mu_G(H,K)| / (|N_G(H)| |N_G(K)|) where
// N^mu_G(H,K) = {g : Phi(K) <= H^g <= K} and |K| = p^n |H|.
// Cross-checked against triangular inversion of the transporter-count
// matrix; any disagreement aborts.
std::vector<std::vector<Rat>> class_mobius(const ClassTable& table,
                                           const std::vector<int>& sel);

}  // namespace pchi
