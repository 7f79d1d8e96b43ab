#include "pchi/psub.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pchi/rational.hpp"

namespace pchi {

Scope parse_scope(const std::string& name) {
  if (name == "all") return Scope::All;
  if (name == "nonidentity") return Scope::NonIdentity;
  if (name == "centric") return Scope::Centric;
  if (name == "elementary-abelian") return Scope::ElemAbelian;
  if (name == "radical") return Scope::Radical;
  throw input_error("unknown scope '" + name + "'");
}

std::string scope_name(Scope s) {
  switch (s) {
    case Scope::All: return "all";
    case Scope::NonIdentity: return "nonidentity";
    case Scope::Centric: return "centric";
    case Scope::ElemAbelian: return "elementary-abelian";
    case Scope::Radical: return "radical";
  }
  throw invariant_error("bad scope value");
}

namespace {

// x^p as an element id
int power_id(const PermGroup& g, int x, int p) {
  int out = g.identity_id();
  for (int i = 0; i < p; ++i) out = g.mult(out, x);
  return out;
}

ClassFlags classify_with(int p, const Subgroup& h, const Subgroup& normalizer,
                         const Subgroup& centralizer) {
  ClassFlags f;
  f.elementary_abelian = h.is_elementary_abelian(p);
  f.cyclic = h.is_cyclic();
  f.p_selfcentralizing =
      p_part(centralizer.order(), static_cast<unsigned long>(p)) == h.center_ids().size();
  {
    Quotient q(normalizer, h);
    f.p_radical = p_core(q.group(), p).order() == 1;
  }
  {
    Quotient q(normalizer, join(centralizer, h));
    f.f_radical = p_core(q.group(), p).order() == 1;
  }
  return f;
}

}  // namespace

ClassFlags classify(GroupPtr g, int p, const Subgroup& h) {
  if (h.order() == 1) throw input_error("classify: identity subgroup");
  Subgroup n = normalizer(*g, h);
  Subgroup c = centralizer(*g, h);
  return classify_with(p, h, n, c);
}

std::vector<Subgroup> subgroups_of_p_group(const Subgroup& k, int p) {
  const GroupPtr& parent = k.parent_ptr();
  std::vector<Subgroup> all;
  std::set<std::string> seen;
  std::vector<Subgroup> level;
  level.push_back(Subgroup(parent, {parent->identity_id()}));
  seen.insert(level.front().key());
  all.push_back(level.front());
  while (!level.empty() && level.front().order() < k.order()) {
    std::vector<Subgroup> next;
    for (const Subgroup& a : level) {
      Subgroup n = normalizer_in(k, a);
      for (int x : n.ids()) {
        if (a.contains(x)) continue;
        if (!a.contains(power_id(*parent, x, p))) continue;
        std::vector<int> gens = a.generators();
        gens.push_back(x);
        Subgroup b = generated_subgroup(parent, gens);
        if (b.order() != a.order() * static_cast<std::size_t>(p))
          throw invariant_error("p-group step did not have index p");
        if (seen.insert(b.key()).second) {
          next.push_back(b);
          all.push_back(next.back());
        }
      }
    }
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.ids() < b.ids();
  });
  return all;
}

std::vector<Subgroup> all_p_subgroups(GroupPtr g, int p, std::size_t order_cap) {
  if (g->order() > order_cap)
    throw resource_error("all_p_subgroups: group order " + std::to_string(g->order()) +
                         " exceeds cap " + std::to_string(order_cap));
  Subgroup syl = sylow(g, p);
  std::vector<Subgroup> out;
  std::set<std::string> seen;
  for (const Subgroup& s : subgroups_of_p_group(syl, p)) {
    // spread each subgroup of the Sylow over its full conjugacy class
    std::deque<Subgroup> queue;
    if (seen.insert(s.key()).second) {
      out.push_back(s);
      queue.push_back(s);
    }
    while (!queue.empty()) {
      Subgroup cur = queue.front();
      queue.pop_front();
      for (int gid : g->generator_ids()) {
        Subgroup conj = conjugate_subgroup(cur, gid);
        if (seen.insert(conj.key()).second) {
          out.push_back(conj);
          queue.push_back(conj);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.ids() < b.ids();
  });
  return out;
}

ClassTable::ClassTable(GroupPtr g, int p, std::size_t subgroup_cap)
    : group_(std::move(g)), p_(p) {
  if (p < 2) throw input_error("prime must be >= 2");
  {
    int m = p;
    for (int d = 2; d * d <= m; ++d)
      if (m % d == 0) throw input_error(std::to_string(p) + " is not prime");
  }
  Subgroup syl = sylow(group_, p_);

  // fuse the subgroups of one Sylow into G-conjugacy classes
  struct Orbit {
    Subgroup rep;  // lexicographically smallest conjugate
    unsigned long size;
  };
  std::vector<Orbit> orbits;
  std::map<std::string, int> orbit_of;
  std::size_t total = 0;
  for (const Subgroup& s : subgroups_of_p_group(syl, p_)) {
    if (orbit_of.count(s.key())) continue;
    std::deque<Subgroup> queue{s};
    Subgroup rep = s;
    int idx = static_cast<int>(orbits.size());
    orbit_of[s.key()] = idx;
    unsigned long size = 1;
    while (!queue.empty()) {
      Subgroup cur = queue.front();
      queue.pop_front();
      for (int gid : group_->generator_ids()) {
        Subgroup conj = conjugate_subgroup(cur, gid);
        auto [it, inserted] = orbit_of.emplace(conj.key(), idx);
        (void)it;
        if (inserted) {
          ++size;
          if (conj.ids() < rep.ids()) rep = conj;
          queue.push_back(std::move(conj));
        }
      }
    }
    if ((total += size) > subgroup_cap)
      throw resource_error("p-subgroup count exceeds cap " + std::to_string(subgroup_cap) +
                           " (reached " + std::to_string(total) + ")");
    orbits.push_back({std::move(rep), size});
  }

  // table order: subgroup order ascending, then canonical key of the
  // smallest conjugate (equal-order distinct classes are never related
  // by subconjugation, so this total order is subconjugation-compatible)
  std::vector<int> order(orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Orbit &oa = orbits[static_cast<std::size_t>(a)], &ob = orbits[static_cast<std::size_t>(b)];
    if (oa.rep.order() != ob.rep.order()) return oa.rep.order() < ob.rep.order();
    return oa.rep.ids() < ob.rep.ids();
  });
  std::vector<int> new_index(orbits.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    new_index[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  for (auto& [key, idx] : orbit_of) idx = new_index[static_cast<std::size_t>(idx)];
  class_of_ = std::move(orbit_of);

  classes_.reserve(orbits.size());
  for (int oi : order) {
    const Orbit& o = orbits[static_cast<std::size_t>(oi)];
    SubgroupClass c{o.rep,
                    o.size,
                    normalizer(*group_, o.rep),
                    centralizer(*group_, o.rep),
                    0,
                    {},
                    {}};
    c.p_residual_centralizer_order = p_residual(c.centralizer, p_).order();
    if (c.rep.order() > 1) c.flags = classify_with(p_, c.rep, c.normalizer, c.centralizer);
    if (group_->order() != c.class_size * c.normalizer_order())
      throw invariant_error("class size does not match normalizer index");
    Subgroup phi = frattini(c.rep, p_);
    for (Subgroup& l : subgroups_of_p_group(c.rep, p_)) {
      int cid = class_of_key(l.key());
      if (cid < 0) throw invariant_error("subgroup of a representative has no class");
      unsigned long cent = 0;
      const std::vector<int>& lgens = l.generators();
      for (int x : c.rep.ids()) {
        bool commutes = true;
        for (int y : lgens)
          if (group_->mult(x, y) != group_->mult(y, x)) {
            commutes = false;
            break;
          }
        if (commutes) ++cent;
      }
      bool below = l.contains_all(phi);
      c.subs.push_back(RepSubgroup{std::move(l), cid, cent, below});
    }
    classes_.push_back(std::move(c));
  }
}

int ClassTable::class_of(const Subgroup& h) const { return class_of_key(h.key()); }

int ClassTable::class_of_key(const std::string& key) const {
  auto it = class_of_.find(key);
  return it == class_of_.end() ? -1 : it->second;
}

std::vector<int> ClassTable::select(Scope s) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const SubgroupClass& c = classes_[i];
    bool keep = false;
    switch (s) {
      case Scope::All: keep = true; break;
      case Scope::NonIdentity: keep = c.order() > 1; break;
      case Scope::Centric: keep = c.order() > 1 && c.flags.p_selfcentralizing; break;
      case Scope::ElemAbelian: keep = c.order() > 1 && c.flags.elementary_abelian; break;
      case Scope::Radical: keep = c.order() > 1 && c.flags.p_radical; break;
    }
    if (keep) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace pchi
