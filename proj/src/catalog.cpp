#include "pchi/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "pchi/rational.hpp"

namespace pchi {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// q = p^k with p prime; returns {p, k} or {0, 0}.
std::pair<int, int> prime_power(int q) {
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p)) continue;
    int k = 0, m = q;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (m == 1 && k >= 1) return {p, k};
    if (q % p == 0) return {0, 0};
  }
  return {0, 0};
}

long parse_int(const std::string& s, std::size_t& i) {
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw input_error("expected integer at position " + std::to_string(i) + " in '" + s + "'");
  long v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + (s[i] - '0');
    ++i;
    if (v > 1000000000L) throw input_error("integer too large in group spec");
  }
  return v;
}

GroupSpec parse_atom(const std::string& s) {
  GroupSpec out;
  out.text = s;
  if (s == "Q8") {
    out.op = GroupSpec::Op::Q8;
    return out;
  }
  if (s == "G288") {
    out.op = GroupSpec::Op::G288;
    return out;
  }
  if (s == "C2cubeByC3") {
    out.op = GroupSpec::Op::C2cubeByC3;
    return out;
  }
  if (s.rfind("perm:[", 0) == 0) {
    if (s.back() != ']') throw input_error("perm spec must end with ']'");
    out.op = GroupSpec::Op::Raw;
    std::string body = s.substr(6, s.size() - 7);
    // split on top-level commas (commas only separate whole permutations)
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : body) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) parts.push_back(cur);
    int deg = 1;
    std::vector<Perm> gens;
    for (const auto& part : parts) {
      Perm g = parse_cycles(part);
      deg = std::max(deg, g.degree());
      gens.push_back(std::move(g));
    }
    for (Perm& g : gens)
      if (g.degree() < deg) {
        std::vector<int> img(static_cast<std::size_t>(deg));
        std::iota(img.begin(), img.end(), 0);
        for (int x = 0; x < g.degree(); ++x) img[static_cast<std::size_t>(x)] = g(x);
        g = Perm(std::move(img));
      }
    out.raw_gens = std::move(gens);
    return out;
  }
  if (s.rfind("Dih:", 0) == 0) {
    std::size_t i = 4;
    out.op = GroupSpec::Op::Dih;
    out.a = static_cast<int>(parse_int(s, i));
    if (i != s.size()) throw input_error("trailing text in spec '" + s + "'");
    if (out.a < 3) throw input_error("Dih:m requires m >= 3");
    return out;
  }
  if (s.rfind("EA:", 0) == 0) {
    std::size_t i = 3;
    out.op = GroupSpec::Op::ElemAb;
    out.a = static_cast<int>(parse_int(s, i));
    if (i >= s.size() || s[i] != ':') throw input_error("EA spec is EA:p:k");
    ++i;
    out.b = static_cast<int>(parse_int(s, i));
    if (i != s.size()) throw input_error("trailing text in spec '" + s + "'");
    if (!is_prime(out.a)) throw input_error("EA:p:k requires p prime");
    if (out.b < 1) throw input_error("EA:p:k requires k >= 1");
    return out;
  }
  if (s.rfind("SL2:", 0) == 0) {
    std::size_t i = 4;
    out.op = GroupSpec::Op::SL2;
    out.a = static_cast<int>(parse_int(s, i));
    if (i != s.size()) throw input_error("trailing text in spec '" + s + "'");
    if (prime_power(out.a).first == 0)
      throw input_error("SL2:q requires q a prime power, got " + std::to_string(out.a));
    return out;
  }
  if (!s.empty() && (s[0] == 'S' || s[0] == 'A' || s[0] == 'C')) {
    std::size_t i = 1;
    long n = parse_int(s, i);
    if (i != s.size()) throw input_error("trailing text in spec '" + s + "'");
    out.a = static_cast<int>(n);
    switch (s[0]) {
      case 'S':
        out.op = GroupSpec::Op::Sym;
        if (n < 1) throw input_error("Sn requires n >= 1");
        break;
      case 'A':
        out.op = GroupSpec::Op::Alt;
        if (n < 3) throw input_error("An requires n >= 3");
        break;
      default:
        out.op = GroupSpec::Op::Cyc;
        if (n < 1) throw input_error("Cn requires n >= 1");
        break;
    }
    return out;
  }
  throw input_error("unknown group constructor '" + s + "'");
}

}  // namespace

GroupSpec parse_spec(const std::string& text) {
  if (text.empty()) throw input_error("empty group spec");
  // split on top-level 'x' (outside perm:[...] brackets)
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == 'x' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1) return parse_atom(parts[0]);
  GroupSpec out;
  out.op = GroupSpec::Op::Product;
  out.text = text;
  for (const auto& part : parts) {
    if (part.empty()) throw input_error("empty factor in product spec '" + text + "'");
    out.factors.push_back(parse_atom(part));
  }
  return out;
}

namespace {

std::vector<Perm> sym_gens(int n) {
  if (n == 1) return {Perm::identity(1)};
  std::vector<Perm> gens;
  gens.push_back(parse_cycles("(0 1)", n));
  if (n > 2) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % n;
    gens.emplace_back(std::move(img));
  }
  return gens;
}

std::vector<Perm> alt_gens(int n) {
  std::vector<Perm> gens;
  for (int i = 0; i + 2 < n; ++i)
    gens.push_back(parse_cycles("(" + std::to_string(i) + " " + std::to_string(i + 1) + " " +
                                    std::to_string(i + 2) + ")",
                                n));
  return gens;
}

std::vector<Perm> cyc_gens(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % n;
  return {Perm(std::move(img))};
}

std::vector<Perm> dih_gens(int m) {
  std::vector<int> rot(static_cast<std::size_t>(m)), refl(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % m;
    refl[static_cast<std::size_t>(i)] = (m - i) % m;
  }
  return {Perm(std::move(rot)), Perm(std::move(refl))};
}

std::vector<Perm> elemab_gens(int p, int k) {
  std::vector<Perm> gens;
  int deg = p * k;
  for (int j = 0; j < k; ++j) {
    std::vector<int> img(static_cast<std::size_t>(deg));
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < p; ++i) img[static_cast<std::size_t>(j * p + i)] = j * p + (i + 1) % p;
    gens.emplace_back(std::move(img));
  }
  return gens;
}

std::vector<Perm> q8_gens() {
  // elements 1,-1,i,-i,j,-j,k,-k indexed 0..7; right multiplication by i and j
  static const int table_i[8] = {2, 3, 1, 0, 7, 6, 4, 5};  // x -> x*i
  static const int table_j[8] = {4, 5, 6, 7, 1, 0, 3, 2};  // x -> x*j
  return {Perm(std::vector<int>(table_i, table_i + 8)),
          Perm(std::vector<int>(table_j, table_j + 8))};
}

// Finite field F_{p^k} with elements encoded 0..q-1 in base p over a
// deterministically chosen irreducible polynomial.
struct GaloisField {
  int p, k, q;
  std::vector<int> irred;  // monic, coefficients of degree 0..k (irred[k] = 1)

  explicit GaloisField(int p_, int k_) : p(p_), k(k_) {
    q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (k == 1) {
      irred = {0, 1};
      return;
    }
    // smallest monic irreducible of degree k, by coefficient encoding
    for (int low = 0; low < q; ++low) {
      std::vector<int> cand(static_cast<std::size_t>(k + 1));
      int v = low;
      for (int i = 0; i < k; ++i) {
        cand[static_cast<std::size_t>(i)] = v % p;
        v /= p;
      }
      cand[static_cast<std::size_t>(k)] = 1;
      if (irreducible(cand)) {
        irred = cand;
        return;
      }
    }
    throw invariant_error("no irreducible polynomial found");
  }

  std::vector<int> decode(int a) const {
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      c[static_cast<std::size_t>(i)] = a % p;
      a /= p;
    }
    return c;
  }
  int encode(const std::vector<int>& c) const {
    int a = 0;
    for (int i = k - 1; i >= 0; --i) a = a * p + c[static_cast<std::size_t>(i)];
    return a;
  }

  int add(int a, int b) const {
    auto ca = decode(a), cb = decode(b);
    for (int i = 0; i < k; ++i)
      ca[static_cast<std::size_t>(i)] = (ca[static_cast<std::size_t>(i)] + cb[static_cast<std::size_t>(i)]) % p;
    return encode(ca);
  }

  int mul(int a, int b) const {
    auto ca = decode(a), cb = decode(b);
    std::vector<int> prod(static_cast<std::size_t>(2 * k - 1), 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        prod[static_cast<std::size_t>(i + j)] =
            (prod[static_cast<std::size_t>(i + j)] +
             ca[static_cast<std::size_t>(i)] * cb[static_cast<std::size_t>(j)]) %
            p;
    // reduce modulo irred
    for (int d = 2 * k - 2; d >= k; --d) {
      int c = prod[static_cast<std::size_t>(d)];
      if (c == 0) continue;
      for (int i = 0; i <= k; ++i) {
        int& slot = prod[static_cast<std::size_t>(d - k + i)];
        slot = ((slot - c * irred[static_cast<std::size_t>(i)]) % p + p) % p;
      }
    }
    prod.resize(static_cast<std::size_t>(k));
    return encode(prod);
  }

 private:
  bool irreducible(const std::vector<int>& poly) const {
    // trial division by all monic polynomials of degree 1..k/2
    int deg = static_cast<int>(poly.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
      int count = 1;
      for (int i = 0; i < d; ++i) count *= p;
      for (int low = 0; low < count; ++low) {
        std::vector<int> div(static_cast<std::size_t>(d + 1));
        int v = low;
        for (int i = 0; i < d; ++i) {
          div[static_cast<std::size_t>(i)] = v % p;
          v /= p;
        }
        div[static_cast<std::size_t>(d)] = 1;
        if (divides(div, poly)) return false;
      }
    }
    return true;
  }

  bool divides(const std::vector<int>& div, std::vector<int> rem) const {
    int dd = static_cast<int>(div.size()) - 1;
    for (int d = static_cast<int>(rem.size()) - 1; d >= dd; --d) {
      int c = rem[static_cast<std::size_t>(d)];
      if (c == 0) continue;
      for (int i = 0; i <= dd; ++i) {
        int& slot = rem[static_cast<std::size_t>(d - dd + i)];
        slot = ((slot - c * div[static_cast<std::size_t>(i)]) % p + p) % p;
      }
    }
    for (int c : rem)
      if (c != 0) return false;
    return true;
  }
};

std::vector<Perm> sl2_gens(int q) {
  auto [p, k] = prime_power(q);
  GaloisField f(p, k);
  // points: nonzero column vectors (a, b), a, b in F_q, index = a*q + b - 1
  auto point = [q](int a, int b) { return a * q + b - 1; };
  int npts = q * q - 1;
  auto matrix_perm = [&](int m00, int m01, int m10, int m11) {
    std::vector<int> img(static_cast<std::size_t>(npts));
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        if (a == 0 && b == 0) continue;
        int na = f.add(f.mul(m00, a), f.mul(m10, b));
        int nb = f.add(f.mul(m01, a), f.mul(m11, b));
        img[static_cast<std::size_t>(point(a, b))] = point(na, nb);
      }
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  gens.push_back(matrix_perm(1, 1, 0, 1));
  gens.push_back(matrix_perm(1, 0, 1, 1));
  if (k > 1) {
    int g = p;  // the class of x, a generator of F_q over F_p
    gens.push_back(matrix_perm(1, g, 0, 1));
    gens.push_back(matrix_perm(1, 0, g, 1));
  }
  return gens;
}

std::vector<Perm> shift_gens(const std::vector<Perm>& gens, int offset, int deg) {
  std::vector<Perm> out;
  for (const Perm& g : gens) {
    std::vector<int> img(static_cast<std::size_t>(deg));
    std::iota(img.begin(), img.end(), 0);
    for (int x = 0; x < g.degree(); ++x) img[static_cast<std::size_t>(x + offset)] = g(x) + offset;
    out.emplace_back(std::move(img));
  }
  return out;
}

std::vector<Perm> g288_gens() {
  // A4 wr C2 on 8 points: two A4 blocks plus the block swap
  std::vector<Perm> gens = shift_gens(alt_gens(4), 0, 8);
  for (Perm& g : shift_gens(alt_gens(4), 4, 8)) gens.push_back(std::move(g));
  gens.push_back(parse_cycles("(0 4)(1 5)(2 6)(3 7)", 8));
  return gens;
}

std::vector<Perm> c2cube_by_c3_gens() {
  return {parse_cycles("(0 1)", 6), parse_cycles("(2 3)", 6), parse_cycles("(4 5)", 6),
          parse_cycles("(0 2 4)(1 3 5)", 6)};
}

std::pair<int, std::vector<Perm>> atom_gens(const GroupSpec& spec) {
  switch (spec.op) {
    case GroupSpec::Op::Sym:
      return {spec.a, sym_gens(spec.a)};
    case GroupSpec::Op::Alt:
      return {spec.a, alt_gens(spec.a)};
    case GroupSpec::Op::Cyc:
      return {spec.a, cyc_gens(spec.a)};
    case GroupSpec::Op::Dih:
      return {spec.a, dih_gens(spec.a)};
    case GroupSpec::Op::ElemAb:
      return {spec.a * spec.b, elemab_gens(spec.a, spec.b)};
    case GroupSpec::Op::Q8:
      return {8, q8_gens()};
    case GroupSpec::Op::SL2:
      return {spec.a * spec.a - 1, sl2_gens(spec.a)};
    case GroupSpec::Op::G288:
      return {8, g288_gens()};
    case GroupSpec::Op::C2cubeByC3:
      return {6, c2cube_by_c3_gens()};
    case GroupSpec::Op::Raw:
      return {spec.raw_gens.empty() ? 1 : spec.raw_gens[0].degree(), spec.raw_gens};
    case GroupSpec::Op::Product:
      break;
  }
  throw invariant_error("atom_gens on product node");
}

}  // namespace

GroupPtr build(const GroupSpec& spec) {
  if (spec.op != GroupSpec::Op::Product) {
    auto [deg, gens] = atom_gens(spec);
    if (gens.empty()) gens.push_back(Perm::identity(deg));
    return make_group(deg, std::move(gens));
  }
  // products act on disjoint point sets
  int deg = 0;
  std::vector<std::pair<int, std::vector<Perm>>> parts;
  for (const auto& f : spec.factors) {
    parts.push_back(atom_gens(f));
    deg += parts.back().first;
  }
  std::vector<Perm> gens;
  int offset = 0;
  for (auto& [d, pgens] : parts) {
    for (Perm& g : shift_gens(pgens, offset, deg)) gens.push_back(std::move(g));
    offset += d;
  }
  if (gens.empty()) gens.push_back(Perm::identity(deg));
  return make_group(deg, std::move(gens));
}

}  // namespace pchi
