#pragma once

#include <map>
#include <string>
#include <vector>

#include "pchi/group.hpp"

namespace pchi {

// Which part of the p-subgroup class list a computation runs over.
enum class Scope { All, NonIdentity, Centric, ElemAbelian, Radical };

Scope parse_scope(const std::string& name);
std::string scope_name(Scope s);

struct ClassFlags {
  bool elementary_abelian = false;
  bool cyclic = false;
  bool p_selfcentralizing = false;
  bool p_radical = false;
  bool f_radical = false;
};

// One subgroup L of a class representative K, with the data the
// class-level matrix entries are assembled from.
struct RepSubgroup {
  Subgroup sub;
  int class_id;                        // index into ClassTable::classes()
  unsigned long centralizer_in_rep;    // |C_K(L)|
  bool frattini_below;                 // Phi(K) <= L
};

struct SubgroupClass {
  Subgroup rep;
  unsigned long class_size = 0;
  Subgroup normalizer;    // N_G(rep)
  Subgroup centralizer;   // C_G(rep)
  unsigned long p_residual_centralizer_order = 0;  // |O^p C_G(rep)|
  ClassFlags flags;
  std::vector<RepSubgroup> subs;  // every subgroup of rep, trivial and rep included

  unsigned long order() const { return rep.order(); }
  unsigned long normalizer_order() const { return normalizer.order(); }
  unsigned long centralizer_order() const { return centralizer.order(); }
};

// All conjugacy classes of p-subgroups of G, ordered so that the class of a
// proper subconjugate always precedes (subgroup order ascending, canonical
// key of the lexicographically smallest conjugate as tie-break).
// Index 0 is always the class of the trivial subgroup.
class ClassTable {
 public:
  ClassTable(GroupPtr g, int p, std::size_t subgroup_cap = 200000);

  const GroupPtr& group() const { return group_; }
  int prime() const { return p_; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }

  // Class index of any p-subgroup of G (by canonical key); -1 if unknown.
  int class_of(const Subgroup& h) const;
  int class_of_key(const std::string& key) const;

  // Indices of the classes a scope ranges over, in table order.
  std::vector<int> select(Scope s) const;

 private:
  GroupPtr group_;
  int p_;
  std::vector<SubgroupClass> classes_;
  std::map<std::string, int> class_of_;
};

// Conjugation-invariant classification of a nonidentity p-subgroup.
ClassFlags classify(GroupPtr g, int p, const Subgroup& h);

// Every subgroup of the p-group K (trivial and K included), built level by
// level: each subgroup of order p^{i+1} arises from an index-p subgroup A by
// adjoining some x in N_K(A) \ A with x^p in A.
std::vector<Subgroup> subgroups_of_p_group(const Subgroup& k, int p);

// Every p-subgroup of G (element-level oracle; small groups only).
std::vector<Subgroup> all_p_subgroups(GroupPtr g, int p,
                                      std::size_t order_cap = 2000);

}  // namespace pchi
