#include "pchi/moebius.hpp"

#include <algorithm>

namespace pchi {

FinitePoset::FinitePoset(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
  std::size_t n = leq_.size();
  for (const auto& row : leq_)
    if (row.size() != n) throw input_error("poset relation must be square");
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw input_error("poset relation is not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a])
        throw input_error("poset relation is not antisymmetric");
      if (!leq_[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (leq_[b][c] && !leq_[a][c]) throw input_error("poset relation is not transitive");
    }
  }
}

std::vector<std::vector<Int>> mobius_matrix(const FinitePoset& p) {
  int n = p.size();
  std::vector<std::vector<Int>> mu(static_cast<std::size_t>(n),
                                   std::vector<Int>(static_cast<std::size_t>(n), 0));
  // process b in an order where everything below b comes first
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int ca = 0, cb = 0;
    for (int c = 0; c < n; ++c) {
      if (p.leq(c, a)) ++ca;
      if (p.leq(c, b)) ++cb;
    }
    if (ca != cb) return ca < cb;
    return a < b;
  });
  for (int b : order) {
    auto bb = static_cast<std::size_t>(b);
    for (int a = 0; a < n; ++a) {
      if (!p.leq(a, b)) continue;
      auto aa = static_cast<std::size_t>(a);
      if (a == b) {
        mu[aa][bb] = 1;
        continue;
      }
      Int s = 0;  // mu(a,b) = -sum_{a<=c<b} mu(a,c)
      for (int c = 0; c < n; ++c)
        if (p.leq(a, c) && p.leq(c, b) && c != b) s += mu[aa][static_cast<std::size_t>(c)];
      mu[aa][bb] = -s;
    }
  }
  return mu;
}

Int mu_poset_oracle(const FinitePoset& p, int a, int b) {
  if (a < 0 || b < 0 || a >= p.size() || b >= p.size() || !p.leq(a, b))
    throw input_error("mu_poset_oracle: a is not below b");
  return mobius_matrix(p)[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

namespace {

Int signed_p_power(int n, int p) {
  // (-1)^n p^C(n,2)
  Int v = int_pow(static_cast<unsigned long>(p),
                  static_cast<unsigned long>(n) * static_cast<unsigned long>(n - 1) / 2);
  return (n % 2 == 0) ? v : -v;
}

}  // namespace

Int mu_hall(const Subgroup& h, const Subgroup& k, int p) {
  if (!k.contains_all(h)) throw input_error("mu_hall: H is not a subgroup of K");
  Subgroup phi = frattini(k, p);
  if (!h.contains_all(phi)) return 0;
  std::size_t index = k.order() / h.order();
  int n = 0;
  while (index > 1) {
    if (index % static_cast<std::size_t>(p) != 0)
      throw input_error("mu_hall: |K:H| is not a power of p");
    index /= static_cast<std::size_t>(p);
    ++n;
  }
  return signed_p_power(n, p);
}

Int mu_hall_bottom(const Subgroup& k, int p) {
  if (!k.is_elementary_abelian(p) && k.order() > 1) return 0;
  std::size_t order = k.order();
  int n = 0;
  while (order > 1) {
    order /= static_cast<std::size_t>(p);
    ++n;
  }
  return signed_p_power(n, p);
}

Int gauss_binom(int n, int d, int p) {
  if (d < 0 || d > n) throw input_error("gauss_binom: need 0 <= d <= n");
  Int num = 1, den = 1;
  for (int j = 1; j <= d; ++j) {
    num *= int_pow(static_cast<unsigned long>(p), static_cast<unsigned long>(n + 1 - j)) - 1;
    den *= int_pow(static_cast<unsigned long>(p), static_cast<unsigned long>(j)) - 1;
  }
  if (num % den != 0) throw invariant_error("gauss_binom product is not integral");
  return num / den;
}

Int alternating_power_sum(int n, int p) {
  if (n < 1) throw input_error("alternating_power_sum: need n >= 1");
  Int s = 0;
  for (int d = 0; d <= n; ++d) {
    Int term = gauss_binom(n, d, p) *
               int_pow(static_cast<unsigned long>(p),
                       static_cast<unsigned long>(d) * static_cast<unsigned long>(d - 1) / 2) *
               int_pow(static_cast<unsigned long>(p), static_cast<unsigned long>(n - d));
    s += (d % 2 == 0) ? term : -term;
  }
  return s;
}

std::vector<std::vector<Rat>> class_mobius(const ClassTable& table,
                                           const std::vector<int>& sel) {
  const auto& classes = table.classes();
  int p = table.prime();
  std::size_t n = sel.size();
  std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
  std::vector<std::vector<Rat>> zeta(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t j = 0; j < n; ++j) {
    const SubgroupClass& kc = classes[static_cast<std::size_t>(sel[j])];
    // per-row counts of subgroups of the representative of [K] by class
    for (std::size_t i = 0; i <= j; ++i) {
      const SubgroupClass& hc = classes[static_cast<std::size_t>(sel[i])];
      unsigned long members = 0, mu_members = 0;
      for (const RepSubgroup& rs : kc.subs)
        if (rs.class_id == sel[i]) {
          ++members;
          if (rs.frattini_below) ++mu_members;
        }
      // zeta(i,j) = |N_G(H,K)| = |N_G(H)| * #{L in [H] : L <= K}
      zeta[i][j] = make_rat(Int(hc.normalizer_order()) * Int(members), 1);
      if (mu_members != 0) {
        int e = 0;
        std::size_t index = kc.order() / hc.order();
        while (index > 1) {
          index /= static_cast<std::size_t>(p);
          ++e;
        }
        // |N^mu_G(H,K)| = |N_G(H)| * mu_members
        mu[i][j] = make_rat(signed_p_power(e, p) * Int(mu_members),
                            Int(kc.normalizer_order()));
      }
    }
  }
  // independent route: triangular inversion of the transporter-count matrix
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      // solve (inv * zeta) = I column by column: row i of inv at column j
      Rat acc = (i == j) ? Rat(1) : Rat(0);
      for (std::size_t k = i; k < j; ++k) acc -= mu[i][k] * zeta[k][j];
      Rat val = acc / zeta[j][j];
      if (i == j) {
        if (val != mu[i][j]) throw invariant_error("class Moebius diagonal mismatch");
      } else if (val != mu[i][j]) {
        throw invariant_error("class Moebius disagrees with zeta inversion");
      }
    }
  }
  // and the other order: zeta * mu = I
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rat acc(0);
      for (std::size_t k = i; k <= j; ++k) acc += zeta[i][k] * mu[k][j];
      if (acc != ((i == j) ? Rat(1) : Rat(0)))
        throw invariant_error("class Moebius is not a right inverse of zeta");
    }
  return mu;
}

}  // namespace pchi
