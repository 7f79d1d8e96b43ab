#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pchi {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// mpq_class keeps fractions reduced with positive denominator, which is
// exactly the canonical form we serialize.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// "num/den", denominator omitted when 1.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

Rat parse_rat(const std::string& s);

// p-part / p'-part of a positive integer.
unsigned long p_part(unsigned long n, unsigned long p);

inline unsigned long p_prime_part(unsigned long n, unsigned long p) {
  return n / p_part(n, p);
}

Int int_pow(unsigned long base, unsigned long exp);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Error taxonomy shared across the engine; the CLI maps these to exit codes.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct theorem_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// A proven identity came out false: always an implementation bug.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace pchi
