#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pchi/group.hpp"

namespace pchi {

// Expression tree over the group constructors. Grammar:
//   Sn | An | Cn | Dih:m | EA:p:k | Q8 | SL2:q | G288 | C2cubeByC3
//   | <spec>x<spec> | perm:[(0 1 2),(0 1)(2 3)]
struct GroupSpec {
  enum class Op { Sym, Alt, Cyc, Dih, ElemAb, Q8, SL2, G288, C2cubeByC3, Product, Raw };
  Op op;
  int a = 0, b = 0;                       // numeric parameters
  std::vector<GroupSpec> factors;         // for Product
  std::vector<Perm> raw_gens;             // for Raw
  std::string text;                       // the normalized spec string
};

GroupSpec parse_spec(const std::string& text);
GroupPtr build(const GroupSpec& spec);
inline GroupPtr build_group(const std::string& text) { return build(parse_spec(text)); }

}  // namespace pchi
