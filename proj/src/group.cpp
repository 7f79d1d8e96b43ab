#include "pchi/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "pchi/rational.hpp"

namespace pchi {

std::size_t max_elements_cap() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("CHI_MAX_ELEMENTS")) {
      long v = std::atol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(1000000);
  }();
  return cap;
}

std::vector<Perm> closure(int degree, const std::vector<Perm>& gens, std::size_t cap) {
  for (const Perm& g : gens)
    if (g.degree() != degree) throw input_error("generator degree mismatch");
  std::set<Perm> seen;
  seen.insert(Perm::identity(degree));
  std::deque<Perm> frontier(seen.begin(), seen.end());
  for (const Perm& g : gens)
    if (seen.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    Perm cur = std::move(frontier.front());
    frontier.pop_front();
    for (const Perm& g : gens) {
      Perm next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw resource_error("element cap exceeded at " + std::to_string(seen.size()) +
                               " (raise CHI_MAX_ELEMENTS)");
        frontier.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::size_t cap)
    : degree_(degree), gens_(std::move(generators)) {
  elems_ = closure(degree_, gens_, cap);
  id_id_ = index_of(Perm::identity(degree_));
}

int PermGroup::index_of(const Perm& g) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), g);
  if (it == elems_.end() || !(*it == g)) return -1;
  return static_cast<int>(it - elems_.begin());
}

std::vector<int> PermGroup::generator_ids() const {
  std::vector<int> out;
  out.reserve(gens_.size());
  for (const Perm& g : gens_) out.push_back(index_of(g));
  return out;
}

int PermGroup::mult(int a, int b) const { return index_of(elem(a) * elem(b)); }

int PermGroup::inv(int a) const { return index_of(elem(a).inverse()); }

int PermGroup::conj(int a, int g) const {
  const Perm& pg = elem(g);
  return index_of(pg.inverse() * elem(a) * pg);
}

GroupPtr make_group(int degree, std::vector<Perm> generators, std::size_t cap) {
  return std::make_shared<PermGroup>(degree, std::move(generators), cap);
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> ids)
    : parent_(std::move(parent)), ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool Subgroup::contains(int id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool Subgroup::contains_all(const Subgroup& other) const {
  return std::includes(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end());
}

std::string Subgroup::key() const {
  return std::string(reinterpret_cast<const char*>(ids_.data()), ids_.size() * sizeof(int));
}

const std::vector<int>& Subgroup::generators() const {
  if (gens_ready_) return gens_;
  std::vector<char> have(parent_->order(), 0);
  std::vector<int> closed = {parent_->identity_id()};
  have[static_cast<std::size_t>(closed[0])] = 1;
  for (int id : ids_) {
    if (have[static_cast<std::size_t>(id)]) continue;
    gens_.push_back(id);
    // re-close with the new generator
    std::deque<int> frontier(closed.begin(), closed.end());
    while (!frontier.empty()) {
      int cur = frontier.front();
      frontier.pop_front();
      for (int g : gens_) {
        int nxt = parent_->mult(cur, g);
        if (!have[static_cast<std::size_t>(nxt)]) {
          have[static_cast<std::size_t>(nxt)] = 1;
          closed.push_back(nxt);
          frontier.push_back(nxt);
        }
      }
    }
    if (closed.size() == ids_.size()) break;
  }
  gens_ready_ = true;
  return gens_;
}

bool Subgroup::is_abelian() const {
  const auto& g = generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (parent_->mult(g[i], g[j]) != parent_->mult(g[j], g[i])) return false;
  return true;
}

bool Subgroup::is_cyclic() const {
  for (int id : ids_)
    if (static_cast<std::size_t>(parent_->elem(id).order()) == ids_.size()) return true;
  return false;
}

bool Subgroup::is_elementary_abelian(int p) const {
  if (!is_abelian()) return false;
  for (int id : ids_) {
    int ord = parent_->elem(id).order();
    if (ord != 1 && ord != p) return false;
  }
  return true;
}

std::vector<int> Subgroup::center_ids() const {
  const auto& g = generators();
  std::vector<int> out;
  for (int id : ids_) {
    bool central = true;
    for (int h : g)
      if (parent_->mult(id, h) != parent_->mult(h, id)) {
        central = false;
        break;
      }
    if (central) out.push_back(id);
  }
  return out;
}

Subgroup whole_group(GroupPtr g) {
  std::vector<int> ids(g->order());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  return Subgroup(std::move(g), std::move(ids));
}

Subgroup trivial_subgroup(GroupPtr g) {
  int id = g->identity_id();
  return Subgroup(std::move(g), {id});
}

Subgroup subgroup_from_ids(GroupPtr g, std::vector<int> ids) {
  Subgroup h(g, std::move(ids));
  for (int a : h.ids())
    for (int b : h.ids())
      if (!h.contains(g->mult(a, b))) throw input_error("element set is not closed");
  if (g->order() % h.order() != 0) throw invariant_error("Lagrange violation");
  return h;
}

Subgroup generated_subgroup(GroupPtr g, const std::vector<int>& gen_ids) {
  std::vector<char> have(g->order(), 0);
  std::vector<int> closed = {g->identity_id()};
  have[static_cast<std::size_t>(closed[0])] = 1;
  std::deque<int> frontier(closed.begin(), closed.end());
  for (int id : gen_ids)
    if (!have[static_cast<std::size_t>(id)]) {
      have[static_cast<std::size_t>(id)] = 1;
      closed.push_back(id);
      frontier.push_back(id);
    }
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    for (int gen : gen_ids) {
      int nxt = g->mult(cur, gen);
      if (!have[static_cast<std::size_t>(nxt)]) {
        have[static_cast<std::size_t>(nxt)] = 1;
        closed.push_back(nxt);
        frontier.push_back(nxt);
      }
    }
  }
  return Subgroup(std::move(g), std::move(closed));
}

Subgroup conjugate_subgroup(const Subgroup& h, int g_id) {
  const PermGroup& g = h.parent();
  const Perm& pg = g.elem(g_id);
  Perm pginv = pg.inverse();
  std::vector<int> ids;
  ids.reserve(h.order());
  for (int id : h.ids()) ids.push_back(g.index_of(pginv * g.elem(id) * pg));
  return Subgroup(h.parent_ptr(), std::move(ids));
}

GroupPtr group_of(const Subgroup& s) {
  std::vector<Perm> gens;
  for (int id : s.generators()) gens.push_back(s.parent().elem(id));
  if (gens.empty()) gens.push_back(Perm::identity(s.parent().degree()));
  return make_group(s.parent().degree(), std::move(gens));
}

std::vector<std::pair<int, unsigned long>> conjugation_orbits(
    const PermGroup& g, const std::vector<int>& ids, const std::vector<int>& by_gens) {
  std::set<int> pending(ids.begin(), ids.end());
  std::vector<std::pair<int, unsigned long>> orbits;
  while (!pending.empty()) {
    int rep = *pending.begin();
    std::deque<int> queue{rep};
    pending.erase(pending.begin());
    unsigned long size = 1;
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      for (int gid : by_gens) {
        int conj = g.conj(cur, gid);
        auto it = pending.find(conj);
        if (it != pending.end()) {
          pending.erase(it);
          ++size;
          queue.push_back(conj);
        }
      }
    }
    orbits.emplace_back(rep, size);
  }
  return orbits;
}

namespace {

void check_subgroup_of(const PermGroup& g, const Subgroup& h) {
  if (&h.parent() != &g) throw input_error("subgroup does not belong to this group");
}

}  // namespace

Subgroup centralizer(const PermGroup& g, const Subgroup& h) {
  check_subgroup_of(g, h);
  return centralizer_in(whole_group(h.parent_ptr()), h);
}

Subgroup centralizer_in(const Subgroup& ambient, const Subgroup& h) {
  const PermGroup& g = ambient.parent();
  const auto& hg = h.generators();
  std::vector<int> out;
  for (int a : ambient.ids()) {
    bool ok = true;
    for (int x : hg)
      if (g.mult(a, x) != g.mult(x, a)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(a);
  }
  return Subgroup(ambient.parent_ptr(), std::move(out));
}

Subgroup centralizer_of_element(const Subgroup& ambient, int x_id) {
  const PermGroup& g = ambient.parent();
  std::vector<int> out;
  for (int a : ambient.ids())
    if (g.mult(a, x_id) == g.mult(x_id, a)) out.push_back(a);
  return Subgroup(ambient.parent_ptr(), std::move(out));
}

Subgroup normalizer(const PermGroup& g, const Subgroup& h) {
  check_subgroup_of(g, h);
  return normalizer_in(whole_group(h.parent_ptr()), h);
}

Subgroup normalizer_in(const Subgroup& ambient, const Subgroup& h) {
  const PermGroup& g = ambient.parent();
  const auto& hg = h.generators();
  std::vector<int> out;
  for (int a : ambient.ids()) {
    bool ok = true;
    for (int x : hg)
      if (!h.contains(g.conj(x, a))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(a);
  }
  return Subgroup(ambient.parent_ptr(), std::move(out));
}

std::vector<int> transporter(const PermGroup& g, const Subgroup& h, const Subgroup& k) {
  check_subgroup_of(g, h);
  check_subgroup_of(g, k);
  const auto& hg = h.generators();
  std::vector<int> out;
  if (h.order() > k.order()) return out;
  for (std::size_t a = 0; a < g.order(); ++a) {
    int ai = static_cast<int>(a);
    bool ok = true;
    for (int x : hg)
      if (!k.contains(g.conj(x, ai))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(ai);
  }
  return out;
}

Subgroup frattini(const Subgroup& k, int p) {
  const PermGroup& g = k.parent();
  unsigned long pp = p_part(k.order(), static_cast<unsigned long>(p));
  if (pp != k.order()) throw input_error("frattini: subgroup is not a p-group");
  std::vector<int> gens;
  for (int a : k.ids()) {
    // p-th power
    int pw = g.identity_id();
    for (int i = 0; i < p; ++i) pw = g.mult(pw, a);
    gens.push_back(pw);
    for (int b : k.ids()) {
      // commutator [a,b] = a^-1 b^-1 a b
      int c = g.mult(g.mult(g.inv(a), g.inv(b)), g.mult(a, b));
      gens.push_back(c);
    }
  }
  return generated_subgroup(k.parent_ptr(), gens);
}

Subgroup sylow_in(const Subgroup& ambient, int p) {
  const PermGroup& g = ambient.parent();
  unsigned long target = p_part(ambient.order(), static_cast<unsigned long>(p));
  Subgroup s = Subgroup(ambient.parent_ptr(), {g.identity_id()});
  while (s.order() < target) {
    Subgroup n = normalizer_in(ambient, s);
    int chosen = -1;
    for (int a : n.ids()) {
      if (s.contains(a)) continue;
      int ord = g.elem(a).order();
      if (p_part(static_cast<unsigned long>(ord), static_cast<unsigned long>(p)) ==
          static_cast<unsigned long>(ord)) {
        chosen = a;
        break;  // ids are in canonical order: first hit is the smallest
      }
    }
    if (chosen < 0) throw invariant_error("sylow: no p-element in normalizer");
    std::vector<int> gens = s.generators();
    gens.push_back(chosen);
    s = generated_subgroup(ambient.parent_ptr(), gens);
  }
  return s;
}

Subgroup sylow(GroupPtr g, int p) { return sylow_in(whole_group(std::move(g)), p); }

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<int> ids;
  std::set_intersection(a.ids().begin(), a.ids().end(), b.ids().begin(), b.ids().end(),
                        std::back_inserter(ids));
  return Subgroup(a.parent_ptr(), std::move(ids));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<int> gens = a.generators();
  for (int id : b.generators()) gens.push_back(id);
  return generated_subgroup(a.parent_ptr(), gens);
}

Subgroup p_core_in(const Subgroup& ambient, int p) {
  Subgroup s = sylow_in(ambient, p);
  Subgroup core = s;
  for (int a : ambient.ids()) {
    if (core.order() == 1) break;
    core = intersect(core, conjugate_subgroup(s, a));
  }
  return core;
}

Subgroup p_core(GroupPtr g, int p) { return p_core_in(whole_group(std::move(g)), p); }

Subgroup p_residual(const Subgroup& c, int p) {
  const PermGroup& g = c.parent();
  std::vector<int> gens;
  for (int a : c.ids()) {
    int ord = g.elem(a).order();
    if (ord % p != 0) gens.push_back(a);
  }
  return generated_subgroup(c.parent_ptr(), gens);
}

Quotient::Quotient(Subgroup n, Subgroup m) : n_(std::move(n)), m_(std::move(m)) {
  const PermGroup& g = n_.parent();
  if (&m_.parent() != &g) throw input_error("quotient: mismatched parents");
  if (!n_.contains_all(m_)) throw input_error("quotient: M is not contained in N");
  // normality check on generators
  for (int a : n_.generators())
    for (int x : m_.generators())
      if (!m_.contains(g.conj(x, a))) throw input_error("quotient: M is not normal in N");

  coset_of_.assign(g.order(), -1);
  for (int a : n_.ids()) {
    if (coset_of_[static_cast<std::size_t>(a)] >= 0) continue;
    int c = static_cast<int>(coset_rep_.size());
    coset_rep_.push_back(a);  // a is minimal in its coset: ids scanned in order
    for (int x : m_.ids()) coset_of_[static_cast<std::size_t>(g.mult(x, a))] = c;
  }
  std::vector<Perm> gens;
  for (int a : n_.generators()) gens.push_back(project(a));
  group_ = make_group(static_cast<int>(coset_rep_.size()), std::move(gens));
  if (group_->order() * m_.order() != n_.order())
    throw invariant_error("quotient: order mismatch");
}

Perm Quotient::project(int parent_elem_id) const {
  const PermGroup& g = n_.parent();
  std::vector<int> img(coset_rep_.size());
  for (std::size_t c = 0; c < coset_rep_.size(); ++c)
    img[c] = coset_of_[static_cast<std::size_t>(g.mult(coset_rep_[c], parent_elem_id))];
  return Perm(std::move(img));
}

Subgroup Quotient::image(const Subgroup& x) const {
  std::vector<int> ids;
  ids.reserve(x.order());
  for (int a : x.ids()) ids.push_back(group_->index_of(project(a)));
  return Subgroup(group_, std::move(ids));
}

Subgroup Quotient::preimage(const Subgroup& xbar) const {
  std::vector<int> ids;
  for (int a : n_.ids())
    if (xbar.contains(group_->index_of(project(a)))) ids.push_back(a);
  return Subgroup(n_.parent_ptr(), std::move(ids));
}

}  // namespace pchi
