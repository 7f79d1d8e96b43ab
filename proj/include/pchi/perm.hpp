#pragma once

#include <compare>
#include <string>
#include <vector>

namespace pchi {

// A permutation of {0..degree-1}, stored as its image array.
// Permutations act on the right: x^g = g.image(x), and (g*h)(x) = h(g(x)).
class Perm {
 public:
  explicit Perm(std::vector<int> images);
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  Perm operator*(const Perm& rhs) const;  // this, then rhs
  Perm inverse() const;
  bool is_identity() const;
  int order() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.img_ <=> b.img_; }

  // Cycle notation on 0-based points, e.g. "(0 1 2)(3 4)"; "()" for identity.
  std::string cycle_str() const;

 private:
  std::vector<int> img_;
};

// Parses one product of cycles, e.g. "(0 1 2)(3 4)". Degree is the smallest
// value covering every point, or at least min_degree.
Perm parse_cycles(const std::string& text, int min_degree = 0);

}  // namespace pchi
