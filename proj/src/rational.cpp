#include "pchi/rational.hpp"

namespace pchi {

Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw input_error("malformed rational: " + s);
  r.canonicalize();
  return r;
}

unsigned long p_part(unsigned long n, unsigned long p) {
  if (n == 0) throw input_error("p_part of zero");
  unsigned long out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

Int int_pow(unsigned long base, unsigned long exp) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

}  // namespace pchi
