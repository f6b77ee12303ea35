#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gvc {

// Arbitrary-precision integers and exact rationals. Everything in this
// project is exact; no floating point is used in any computation.
using Int = mpz_class;
using Rat = mpq_class;

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline Int int_pow(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline Rat rat_pow(const Rat& base, unsigned long exp) {
  Rat out(1);
  Rat b = base;
  while (exp) {
    if (exp & 1) out *= b;
    b *= b;
    exp >>= 1;
  }
  return out;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const Int& v) { return v.get_str(); }

// Rationals print as "p" when integral, "p/q" otherwise.
inline std::string to_string(const Rat& v) {
  if (is_integer(v)) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline bool fits_ulong(const Int& n) { return n.fits_ulong_p(); }

}  // namespace gvc
