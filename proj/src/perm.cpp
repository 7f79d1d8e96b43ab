#include "pchi/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pchi/rational.hpp"

namespace pchi {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      throw input_error("permutation image array is not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw input_error("degree mismatch in composition");
  std::vector<int> img(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x)
    img[x] = rhs.img_[static_cast<std::size_t>(img_[x])];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x)
    img[static_cast<std::size_t>(img_[x])] = static_cast<int>(x);
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != static_cast<int>(x)) return false;
  return true;
}

int Perm::order() const {
  // lcm of cycle lengths
  std::vector<char> seen(img_.size(), 0);
  long ord = 1;
  for (std::size_t s = 0; s < img_.size(); ++s) {
    if (seen[s]) continue;
    long len = 0;
    std::size_t x = s;
    do {
      seen[x] = 1;
      x = static_cast<std::size_t>(img_[x]);
      ++len;
    } while (x != s);
    ord = std::lcm(ord, len);
  }
  return static_cast<int>(ord);
}

std::string Perm::cycle_str() const {
  std::ostringstream out;
  std::vector<char> seen(img_.size(), 0);
  bool any = false;
  for (std::size_t s = 0; s < img_.size(); ++s) {
    if (seen[s] || img_[s] == static_cast<int>(s)) continue;
    any = true;
    out << '(';
    std::size_t x = s;
    bool first = true;
    do {
      seen[x] = 1;
      if (!first) out << ' ';
      out << x;
      first = false;
      x = static_cast<std::size_t>(img_[x]);
    } while (x != s);
    out << ')';
  }
  return any ? out.str() : "()";
}

Perm parse_cycles(const std::string& text, int min_degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int max_pt = min_degree - 1;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw input_error("expected '(' in cycle notation at position " + std::to_string(i));
    ++i;
    std::vector<int> cyc;
    while (i < text.size() && text[i] != ')') {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw input_error("expected point in cycle at position " + std::to_string(i));
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      cyc.push_back(v);
      max_pt = std::max(max_pt, v);
    }
    if (i >= text.size()) throw input_error("unterminated cycle");
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  int deg = max_pt + 1;
  std::vector<int> img(static_cast<std::size_t>(deg));
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : cycles) {
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      int from = cyc[j];
      int to = cyc[(j + 1) % cyc.size()];
      if (img[static_cast<std::size_t>(from)] != from)
        throw input_error("point repeated across cycles: " + std::to_string(from));
      img[static_cast<std::size_t>(from)] = to;
    }
  }
  return Perm(std::move(img));
}

}  // namespace pchi
