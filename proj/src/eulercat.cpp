#include "pchi/eulercat.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace pchi {

Kind parse_kind(const std::string& name) {
  if (name == "S") return Kind::S;
  if (name == "T") return Kind::T;
  if (name == "L") return Kind::L;
  if (name == "F") return Kind::F;
  if (name == "O") return Kind::O;
  if (name == "Ftilde") return Kind::Ftilde;
  throw input_error("unknown category kind '" + name + "'");
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::S: return "S";
    case Kind::T: return "T";
    case Kind::L: return "L";
    case Kind::F: return "F";
    case Kind::O: return "O";
    case Kind::Ftilde: return "Ftilde";
  }
  throw invariant_error("bad kind value");
}

const std::vector<Kind>& all_kinds() {
  static const std::vector<Kind> kinds = {Kind::S,  Kind::T, Kind::L,
                                          Kind::F,  Kind::O, Kind::Ftilde};
  return kinds;
}

namespace {

Rat exact_div(const Int& num, const Int& den, const char* what) {
  Rat r = make_rat(num, den);
  if (!is_integer(r)) throw invariant_error(std::string(what) + " is not integral");
  return r;
}

unsigned long centralizer_order_in(const Subgroup& k, const Subgroup& h) {
  const PermGroup& g = k.parent();
  unsigned long out = 0;
  const std::vector<int>& hgens = h.generators();
  for (int x : k.ids()) {
    bool commutes = true;
    for (int y : hgens)
      if (g.mult(x, y) != g.mult(y, x)) {
        commutes = false;
        break;
      }
    if (commutes) ++out;
  }
  return out;
}

}  // namespace

Int morphism_count(Kind kind, const Subgroup& h, const Subgroup& k, int p) {
  if (h.parent_ptr() != k.parent_ptr())
    throw input_error("morphism_count: subgroups of different groups");
  const PermGroup& g = h.parent();
  if (kind == Kind::S) return k.contains_all(h) ? 1 : 0;
  std::vector<int> trans = transporter(g, h, k);
  Int t(static_cast<unsigned long>(trans.size()));
  switch (kind) {
    case Kind::T:
      return t;
    case Kind::L: {
      Subgroup res = p_residual(centralizer(g, h), p);
      return exact_div(t, Int(res.order()), "linking morphism count").get_num();
    }
    case Kind::F:
      return exact_div(t, Int(centralizer(g, h).order()), "Frobenius morphism count")
          .get_num();
    case Kind::O:
      return exact_div(t, Int(k.order()), "orbit morphism count").get_num();
    case Kind::Ftilde: {
      Int burnside(0);
      for (int n : trans) burnside += centralizer_order_in(k, conjugate_subgroup(h, n));
      Int den = Int(centralizer(g, h).order()) * Int(k.order());
      return exact_div(burnside, den, "exterior-quotient morphism count").get_num();
    }
    default:
      break;
  }
  throw invariant_error("bad kind in morphism_count");
}

ZetaMatrix zeta_matrix(const ClassTable& table, Kind kind, Scope scope) {
  if (kind == Kind::S)
    throw input_error("the inclusion poset has no class-constant zeta matrix");
  ZetaMatrix zm{kind, scope, table.select(scope), {}};
  const auto& classes = table.classes();
  std::size_t n = zm.sel.size();
  zm.entries.assign(n, std::vector<Rat>(n, Rat(0)));
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[zm.sel[i]] = i;
  for (std::size_t j = 0; j < n; ++j) {
    const SubgroupClass& kc = classes[static_cast<std::size_t>(zm.sel[j])];
    // members[c] = #{L <= K in class c}; cents[c] = sum of |C_K(L)| over them
    std::map<int, std::pair<Int, Int>> acc;
    for (const RepSubgroup& rs : kc.subs) {
      auto& pr = acc[rs.class_id];
      pr.first += 1;
      pr.second += rs.centralizer_in_rep;
    }
    for (const auto& [cid, pr] : acc) {
      auto it = pos.find(cid);
      if (it == pos.end()) continue;
      std::size_t i = it->second;
      if (i > j) throw invariant_error("zeta matrix is not upper triangular");
      const SubgroupClass& hc = classes[static_cast<std::size_t>(cid)];
      Int t = Int(hc.normalizer_order()) * pr.first;  // |N_G(H,K)|
      switch (kind) {
        case Kind::T:
          zm.entries[i][j] = Rat(t);
          break;
        case Kind::L:
          zm.entries[i][j] =
              exact_div(t, Int(hc.p_residual_centralizer_order), "linking zeta entry");
          break;
        case Kind::F:
          zm.entries[i][j] = exact_div(t, Int(hc.centralizer_order()), "Frobenius zeta entry");
          break;
        case Kind::O:
          zm.entries[i][j] = exact_div(t, Int(kc.order()), "orbit zeta entry");
          break;
        case Kind::Ftilde: {
          Int burnside = Int(hc.normalizer_order()) * pr.second;
          zm.entries[i][j] = exact_div(burnside, Int(hc.centralizer_order()) * Int(kc.order()),
                                       "exterior-quotient zeta entry");
          break;
        }
        default:
          throw invariant_error("bad kind in zeta_matrix");
      }
    }
    if (zm.entries[j][j] <= 0) throw invariant_error("zeta diagonal entry is not positive");
  }
  return zm;
}

Rat WeightVector::sum() const {
  Rat s(0);
  for (const Rat& v : values) s += v;
  return s;
}

WeightVector solve_weighting(const ClassTable& table, const ZetaMatrix& zm) {
  (void)table;
  std::size_t n = zm.sel.size();
  WeightVector out{true, zm.sel, std::vector<Rat>(n, Rat(0))};
  for (std::size_t ii = n; ii-- > 0;) {
    Rat acc(1);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= zm.entries[ii][j] * out.values[j];
    out.values[ii] = acc / zm.entries[ii][ii];
  }
  return out;
}

WeightVector solve_coweighting(const ClassTable& table, const ZetaMatrix& zm) {
  (void)table;
  std::size_t n = zm.sel.size();
  WeightVector out{false, zm.sel, std::vector<Rat>(n, Rat(0))};
  for (std::size_t j = 0; j < n; ++j) {
    Rat acc(1);
    for (std::size_t i = 0; i < j; ++i) acc -= out.values[i] * zm.entries[i][j];
    out.values[j] = acc / zm.entries[j][j];
  }
  return out;
}

Rat chi_matrix(const ClassTable& table, Kind kind, Scope scope) {
  if (kind == Kind::S)
    return Rat(table.group()->order()) * chi_matrix(table, Kind::T, scope);
  ZetaMatrix zm = zeta_matrix(table, kind, scope);
  if (zm.sel.empty()) return Rat(0);
  Rat w = solve_weighting(table, zm).sum();
  Rat cw = solve_coweighting(table, zm).sum();
  if (w != cw) throw invariant_error("weighting and coweighting sums differ");
  return w;
}

std::vector<Subgroup> elementary_abelian_subgroups(GroupPtr g, int p) {
  std::vector<Subgroup> out;
  std::set<std::string> seen;
  Subgroup triv = trivial_subgroup(g);
  seen.insert(triv.key());
  out.push_back(triv);
  std::vector<Subgroup> level{triv};
  while (!level.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& e : level) {
      Subgroup cent = centralizer(*g, e);
      for (int x : cent.ids()) {
        if (e.contains(x)) continue;
        if (g->elem(x).order() != p) continue;
        std::vector<int> gens = e.generators();
        gens.push_back(x);
        Subgroup bigger = generated_subgroup(g, gens);
        if (bigger.order() != e.order() * static_cast<std::size_t>(p))
          throw invariant_error("elementary abelian extension has wrong order");
        if (seen.insert(bigger.key()).second) {
          next.push_back(bigger);
          out.push_back(next.back());
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

namespace {

std::map<std::string, Rat>& chi_poset_cache() {
  static std::map<std::string, Rat> cache;
  return cache;
}

std::string group_cache_key(const PermGroup& g, int p) {
  std::string key;
  key.reserve(g.order() * static_cast<std::size_t>(g.degree()) + 16);
  key += std::to_string(g.degree());
  key += ':';
  key += std::to_string(p);
  key += ':';
  for (const Perm& e : g.elements())
    for (int v : e.images()) key.append(reinterpret_cast<const char*>(&v), sizeof(v));
  return key;
}

}  // namespace

Rat chi_poset(GroupPtr g, int p) {
  bool use_cache = g->order() <= 256;
  std::string key;
  if (use_cache) {
    key = group_cache_key(*g, p);
    auto it = chi_poset_cache().find(key);
    if (it != chi_poset_cache().end()) return it->second;
  }
  Rat chi(0);
  for (const Subgroup& e : elementary_abelian_subgroups(g, p))
    if (e.order() > 1) chi -= Rat(mu_hall_bottom(e, p));
  if (use_cache) chi_poset_cache().emplace(std::move(key), chi);
  return chi;
}

Rat chi_F_via_centralizers(GroupPtr g, int p) {
  std::vector<int> everyone(g->order());
  for (std::size_t i = 0; i < g->order(); ++i) everyone[i] = static_cast<int>(i);
  Rat acc(0);
  Subgroup whole = whole_group(g);
  for (auto [rep, size] : conjugation_orbits(*g, everyone, g->generator_ids())) {
    Subgroup c = centralizer_of_element(whole, rep);
    acc += Rat(size) * chi_poset(group_of(c), p);
  }
  return acc / Rat(g->order());
}

Rat chi_F_normal_sylow(const ClassTable& table, WeightVector* support) {
  const GroupPtr& g = table.group();
  int p = table.prime();
  unsigned long ppart = p_part(g->order(), static_cast<unsigned long>(p));
  std::vector<int> nonid = table.select(Scope::NonIdentity);
  if (support) *support = WeightVector{true, nonid, std::vector<Rat>(nonid.size(), Rat(0))};
  if (ppart == 1) return Rat(0);
  const SubgroupClass& pc = table.classes().back();
  if (pc.order() != ppart) throw invariant_error("last class is not the Sylow class");
  if (pc.class_size != 1)
    throw input_error("chi_F_normal_sylow: Sylow p-subgroup is not normal");
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < nonid.size(); ++i) pos[nonid[i]] = i;
  Rat chi(0);
  for (std::size_t x = 0; x < g->order(); ++x) {
    std::vector<int> fixed;
    for (int u : pc.rep.ids())
      if (g->mult(static_cast<int>(x), u) == g->mult(u, static_cast<int>(x))) fixed.push_back(u);
    if (fixed.size() <= 1) continue;
    chi += make_rat(1, Int(g->order()));
    if (support) {
      int cid = table.class_of(Subgroup(g, std::move(fixed)));
      if (cid < 0) throw invariant_error("C_P(x) has no class");
      support->values[pos.at(cid)] += make_rat(1, Int(g->order()));
    }
  }
  return chi;
}

Rat chi_F_abelian_sylow(GroupPtr g, int p) {
  Subgroup syl = sylow(g, p);
  if (!syl.is_abelian()) throw input_error("chi_F_abelian_sylow: Sylow is not abelian");
  if (syl.order() == 1) return Rat(0);
  Subgroup n = normalizer(*g, syl);
  unsigned long good = 0;  // elements of N whose conjugation fixes >1 point of P
  for (int x : n.ids()) {
    unsigned long fix = 0;
    for (int u : syl.ids())
      if (g->conj(u, x) == u) ++fix;
    if (fix > 1) ++good;
  }
  return make_rat(Int(good), Int(n.order()));
}

Rat chi_sylow_restricted_F(const ClassTable& table) {
  const GroupPtr& g = table.group();
  int p = table.prime();
  const SubgroupClass& pc = table.classes().back();
  if (pc.order() != p_part(g->order(), static_cast<unsigned long>(p)))
    throw invariant_error("last class is not the Sylow class");
  Rat chi(0);
  for (const RepSubgroup& rs : pc.subs) {
    if (rs.sub.order() == 1) continue;
    Int mu = mu_hall_bottom(rs.sub, p);
    if (mu == 0) continue;
    Int t(static_cast<unsigned long>(transporter(*g, rs.sub, pc.rep).size()));
    Int c(centralizer(*g, rs.sub).order());
    // -mu(K) / |F_G(K,P)| with |F_G(K,P)| = |N_G(K,P)| / |C_G(K)|
    chi += make_rat(-mu * c, t);
  }
  return chi;
}

namespace {

Rat cyclic_class_sum(const ClassTable& table) {
  Rat s(0);
  for (int i : table.select(Scope::NonIdentity)) {
    const SubgroupClass& c = table.classes()[static_cast<std::size_t>(i)];
    if (c.flags.cyclic) s += make_rat(Int(c.order()), Int(c.normalizer_order()));
  }
  return s;
}

// |C_G(K)|_{p'}, asserting that the p-part is |Z(K)| (valid for centric K)
Rat p_prime_centralizer(const SubgroupClass& c, int p) {
  unsigned long cent = c.centralizer_order();
  unsigned long zpart = c.rep.center_ids().size();
  if (p_part(cent, static_cast<unsigned long>(p)) != zpart)
    throw invariant_error("p-part of centralizer is not the center order");
  return Rat(cent / zpart);
}

}  // namespace

Rat chi_closed(const ClassTable& table, Kind kind, Scope scope) {
  int p = table.prime();
  const auto& classes = table.classes();
  if (scope == Scope::NonIdentity) {
    std::vector<int> sel = table.select(Scope::NonIdentity);
    switch (kind) {
      case Kind::Ftilde:
        return chi_closed(table, Kind::F, scope);
      case Kind::O: {
        auto mu = class_mobius(table, sel);
        Rat s(0);
        for (std::size_t i = 0; i < sel.size(); ++i)
          for (std::size_t j = i; j < sel.size(); ++j)
            s += Rat(classes[static_cast<std::size_t>(sel[i])].order()) * mu[i][j];
        return s;
      }
      default: {
        Rat s(0);
        for (int idx : sel) {
          const SubgroupClass& c = classes[static_cast<std::size_t>(idx)];
          Int mu = mu_hall_bottom(c.rep, p);
          if (mu == 0) continue;
          switch (kind) {
            case Kind::S:
              s += Rat(-mu) * Rat(c.class_size);
              break;
            case Kind::T:
              s += make_rat(-mu, Int(c.normalizer_order()));
              break;
            case Kind::L:
              s += make_rat(-mu * Int(c.p_residual_centralizer_order),
                            Int(c.normalizer_order()));
              break;
            case Kind::F:
              s += make_rat(-mu * Int(c.centralizer_order()), Int(c.normalizer_order()));
              break;
            default:
              throw invariant_error("bad kind in chi_closed");
          }
        }
        return s;
      }
    }
  }
  if (scope == Scope::Centric) {
    std::vector<int> sel = table.select(Scope::Centric);
    if (kind == Kind::S) return Rat(table.group()->order()) * chi_closed(table, Kind::T, scope);
    auto mu = class_mobius(table, sel);
    Rat s(0);
    for (std::size_t i = 0; i < sel.size(); ++i) {
      const SubgroupClass& hc = classes[static_cast<std::size_t>(sel[i])];
      for (std::size_t j = i; j < sel.size(); ++j) {
        const SubgroupClass& kc = classes[static_cast<std::size_t>(sel[j])];
        if (mu[i][j] == 0) continue;
        switch (kind) {
          case Kind::T:
            s += mu[i][j];
            break;
          case Kind::L:
            s += mu[i][j] * p_prime_centralizer(kc, p);
            break;
          case Kind::F:
            s += mu[i][j] * Rat(kc.centralizer_order());
            break;
          case Kind::O:
            s += Rat(hc.order()) * mu[i][j];
            break;
          case Kind::Ftilde:
            s += Rat(hc.order()) * mu[i][j] * p_prime_centralizer(kc, p);
            break;
          default:
            throw invariant_error("bad kind in centric chi_closed");
        }
      }
    }
    return s;
  }
  throw input_error("closed forms exist for the nonidentity and centric scopes only");
}

Rat chi_orbit_cyclic(const ClassTable& table) {
  int p = table.prime();
  return chi_closed(table, Kind::T, Scope::NonIdentity) +
         make_rat(p - 1, p) * cyclic_class_sum(table);
}

Rat chi_full_closed(const ClassTable& table, Kind kind) {
  const GroupPtr& g = table.group();
  int p = table.prime();
  switch (kind) {
    case Kind::S:
    case Kind::F:
    case Kind::Ftilde:
      return Rat(1);  // these categories have an initial object
    case Kind::T:
      return make_rat(1, Int(g->order()));
    case Kind::L: {
      Subgroup res = p_residual(whole_group(g), p);
      return make_rat(Int(res.order()), Int(g->order()));
    }
    case Kind::O:
      return make_rat(1, Int(g->order())) + make_rat(p - 1, p) * cyclic_class_sum(table);
  }
  throw invariant_error("bad kind in chi_full_closed");
}

WeightVector local_weighting(const ClassTable& table, Kind kind, Scope scope) {
  if (scope != Scope::NonIdentity && scope != Scope::Centric)
    throw input_error("local weightings exist for the nonidentity and centric scopes only");
  if (kind == Kind::Ftilde && scope != Scope::Centric)
    throw input_error("the exterior quotient has a local weighting on the centric scope only");
  if (kind == Kind::L)
    throw input_error("the linking category has no local weighting route");
  const GroupPtr& g = table.group();
  int p = table.prime();
  std::vector<int> sel = table.select(scope);
  WeightVector out{true, sel, std::vector<Rat>(sel.size(), Rat(0))};
  for (std::size_t i = 0; i < sel.size(); ++i) {
    const SubgroupClass& c = table.classes()[static_cast<std::size_t>(sel[i])];
    Rat k_rep(0);
    switch (kind) {
      case Kind::S:
      case Kind::T:
      case Kind::O: {
        Quotient q(c.normalizer, c.rep);
        Rat one_minus = Rat(1) - chi_poset(q.group(), p);
        if (kind == Kind::S)
          k_rep = one_minus;
        else if (kind == Kind::T)
          k_rep = one_minus / Rat(g->order());
        else
          k_rep = one_minus * make_rat(Int(c.order()), Int(g->order()));
        break;
      }
      case Kind::F: {
        Quotient q(c.normalizer, c.rep);
        Rat acc(0);
        for (auto [rep, size] :
             conjugation_orbits(*g, c.centralizer.ids(), c.normalizer.generators())) {
          Subgroup cx = centralizer_of_element(c.normalizer, rep);
          Rat chi1 = chi_poset(group_of(q.image(cx)), p);
          acc += Rat(size) * (Rat(1) - chi1);
        }
        k_rep = acc / Rat(g->order());
        break;
      }
      case Kind::Ftilde: {
        // k^H = |G|^-1 |H| sum over H <= K <= N_G(H) with K/H elementary
        // abelian of mu(H,K) |C_G(K)|_{p'}
        Quotient q(c.normalizer, c.rep);
        Rat acc(0);
        for (const Subgroup& ebar : elementary_abelian_subgroups(q.group(), p)) {
          Subgroup k = q.preimage(ebar);
          Int mu = mu_hall_bottom(ebar, p);
          unsigned long cent = centralizer(*g, k).order();
          unsigned long cpp = cent / p_part(cent, static_cast<unsigned long>(p));
          acc += Rat(mu) * Rat(cpp);
        }
        k_rep = acc * make_rat(Int(c.order()), Int(g->order()));
        break;
      }
      default:
        throw invariant_error("bad kind in local_weighting");
    }
    out.values[i] = Rat(c.class_size) * k_rep;
  }
  return out;
}

ChiReport make_chi_report(const ClassTable& table, Scope scope,
                          const std::vector<Kind>& kinds, const std::string& group_text) {
  const GroupPtr& g = table.group();
  ChiReport report;
  report.group_text = group_text;
  report.order = g->order();
  report.prime = table.prime();
  report.scope = scope;
  std::vector<int> sel = table.select(scope);
  for (Kind kind : kinds) {
    KindResult res;
    if (kind == Kind::S) {
      res.chi = chi_matrix(table, Kind::S, scope);
      res.routes["homotopy-orbit"] = res.chi;
      switch (scope) {
        case Scope::All:
          res.routes["initial-object"] = chi_full_closed(table, Kind::S);
          break;
        case Scope::NonIdentity:
          res.routes["closed-form"] = chi_closed(table, Kind::S, Scope::NonIdentity);
          res.weighting = local_weighting(table, Kind::S, scope);
          res.routes["local-sum"] = res.weighting.sum();
          break;
        case Scope::Centric:
          res.routes["closed-form"] = chi_closed(table, Kind::S, Scope::Centric);
          break;
        case Scope::ElemAbelian:
        case Scope::Radical:
          res.routes["nonidentity-closed"] = chi_closed(table, Kind::S, Scope::NonIdentity);
          break;
      }
      if (scope == Scope::NonIdentity || scope == Scope::ElemAbelian) {
        // the coweighting -mu(K), summed over each class
        res.coweighting = WeightVector{false, sel, {}};
        for (int idx : sel) {
          const SubgroupClass& c = table.classes()[static_cast<std::size_t>(idx)];
          res.coweighting.values.push_back(Rat(-mu_hall_bottom(c.rep, table.prime())) *
                                           Rat(c.class_size));
        }
        res.routes["coweighting-sum"] = res.coweighting.sum();
      }
    } else {
      ZetaMatrix zm = zeta_matrix(table, kind, scope);
      res.weighting = solve_weighting(table, zm);
      res.coweighting = solve_coweighting(table, zm);
      res.chi = res.weighting.sum();
      res.routes["weighting-sum"] = res.chi;
      res.routes["coweighting-sum"] = res.coweighting.sum();
      switch (scope) {
        case Scope::All:
          res.routes["full-closed"] = chi_full_closed(table, kind);
          break;
        case Scope::NonIdentity:
          res.routes["closed-form"] = chi_closed(table, kind, scope);
          if (kind == Kind::O) res.routes["cyclic-form"] = chi_orbit_cyclic(table);
          if (kind == Kind::T || kind == Kind::O || kind == Kind::F)
            res.routes["local-sum"] = local_weighting(table, kind, scope).sum();
          break;
        case Scope::Centric:
          res.routes["closed-form"] = chi_closed(table, kind, scope);
          if (kind == Kind::T || kind == Kind::O || kind == Kind::F ||
              kind == Kind::Ftilde)
            res.routes["local-sum"] = local_weighting(table, kind, scope).sum();
          break;
        case Scope::ElemAbelian:
          if (kind == Kind::T || kind == Kind::L || kind == Kind::F)
            res.routes["nonidentity-closed"] = chi_closed(table, kind, Scope::NonIdentity);
          break;
        case Scope::Radical:
          if (kind == Kind::T || kind == Kind::O)
            res.routes["nonidentity-closed"] = chi_closed(table, kind, Scope::NonIdentity);
          break;
      }
    }
    for (const auto& [name, value] : res.routes)
      if (value != res.chi)
        throw theorem_error("route disagreement for " + group_text + " kind " +
                            kind_name(kind) + " scope " + scope_name(scope) + ": " + name +
                            " gives " + rat_str(value) + " but chi is " + rat_str(res.chi));
    report.results.emplace_back(kind, std::move(res));
  }
  return report;
}

}  // namespace pchi
