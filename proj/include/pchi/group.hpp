#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pchi/perm.hpp"

namespace pchi {

std::size_t max_elements_cap();  // CHI_MAX_ELEMENTS overrides the default 10^6

// A finite permutation group with its full element set materialized at
// construction, sorted in canonical (lexicographic image array) order.
// Elements are referred to by their index into this sorted list.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators,
            std::size_t cap = max_elements_cap());

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elems_; }
  std::size_t order() const { return elems_.size(); }

  const Perm& elem(int id) const { return elems_[static_cast<std::size_t>(id)]; }
  int index_of(const Perm& g) const;  // -1 if absent
  bool contains(const Perm& g) const { return index_of(g) >= 0; }
  int identity_id() const { return id_id_; }
  std::vector<int> generator_ids() const;

  int mult(int a, int b) const;  // id of elem(a)*elem(b)
  int inv(int a) const;
  int conj(int a, int g) const;  // id of g^-1 * a * g

 private:
  int degree_;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
  int id_id_ = 0;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

GroupPtr make_group(int degree, std::vector<Perm> generators,
                    std::size_t cap = max_elements_cap());

// Closure of a generator list under composition and inverse (plus identity).
std::vector<Perm> closure(int degree, const std::vector<Perm>& gens,
                          std::size_t cap = max_elements_cap());

// A subgroup of a fixed parent group, identified by its sorted element-id set.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<int> ids);

  const PermGroup& parent() const { return *parent_; }
  const GroupPtr& parent_ptr() const { return parent_; }
  const std::vector<int>& ids() const { return ids_; }
  std::size_t order() const { return ids_.size(); }
  bool contains(int id) const;
  bool contains_all(const Subgroup& other) const;

  // The canonical key: the sorted id list rendered as a byte string.
  std::string key() const;

  // A small generating set (greedy over canonical element order).
  const std::vector<int>& generators() const;

  bool is_abelian() const;
  bool is_cyclic() const;
  bool is_elementary_abelian(int p) const;
  std::vector<int> center_ids() const;  // Z(H) as ids in parent

 private:
  GroupPtr parent_;
  std::vector<int> ids_;
  mutable std::vector<int> gens_;  // lazy; single-threaded use
  mutable bool gens_ready_ = false;
};

Subgroup whole_group(GroupPtr g);
Subgroup trivial_subgroup(GroupPtr g);
Subgroup subgroup_from_ids(GroupPtr g, std::vector<int> ids);  // validates closure
Subgroup generated_subgroup(GroupPtr g, const std::vector<int>& gen_ids);

Subgroup conjugate_subgroup(const Subgroup& h, int g_id);

// The subgroup as a group in its own right (same degree, its generators).
GroupPtr group_of(const Subgroup& s);

// Orbits (representative, size) of the given element ids under conjugation
// by the elements with ids by_gens; the id set must be invariant.
std::vector<std::pair<int, unsigned long>> conjugation_orbits(
    const PermGroup& g, const std::vector<int>& ids, const std::vector<int>& by_gens);

Subgroup centralizer(const PermGroup& g, const Subgroup& h);
Subgroup normalizer(const PermGroup& g, const Subgroup& h);
// Centralizer/normalizer taken inside an ambient subgroup A <= parent.
Subgroup centralizer_in(const Subgroup& ambient, const Subgroup& h);
Subgroup normalizer_in(const Subgroup& ambient, const Subgroup& h);
Subgroup centralizer_of_element(const Subgroup& ambient, int x_id);

// N_G(H,K) = {g in G : H^g <= K}, as element ids of G.
std::vector<int> transporter(const PermGroup& g, const Subgroup& h, const Subgroup& k);

Subgroup frattini(const Subgroup& k, int p);            // [K,K] K^p, K a p-group
Subgroup p_core(GroupPtr g, int p);                     // O_p(G)
Subgroup p_core_in(const Subgroup& ambient, int p);     // O_p of a subgroup
Subgroup p_residual(const Subgroup& c, int p);          // O^p(C)
Subgroup sylow(GroupPtr g, int p);                      // deterministic greedy
Subgroup sylow_in(const Subgroup& ambient, int p);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);    // <A, B>

// The action of N on the right coset space M\N, M normal in N.
class Quotient {
 public:
  Quotient(Subgroup n, Subgroup m);

  const GroupPtr& group() const { return group_; }
  const Subgroup& numerator() const { return n_; }
  const Subgroup& kernel() const { return m_; }

  Perm project(int parent_elem_id) const;
  Subgroup image(const Subgroup& x) const;     // X <= N
  Subgroup preimage(const Subgroup& xbar) const;

 private:
  Subgroup n_, m_;
  GroupPtr group_;
  std::vector<int> coset_of_;  // parent id -> coset index (-1 off N)
  std::vector<int> coset_rep_;
};

}  // namespace pchi
