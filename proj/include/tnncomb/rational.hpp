#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tnn {

// Exact rational scalar used everywhere. mpq_class keeps values canonical
// (lowest terms, positive denominator) after arithmetic.
using Rat = mpq_class;
using Int = mpz_class;

// error thrown when a configurable enumeration/size cap is exceeded
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q" (q != 0).
inline Rat parse_rat(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational: '" + text + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

// "p" or "p/q", lowest terms
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return out;
}

}  // namespace tnn
