#pragma once

#include "gvc/numeric.hpp"

namespace gvc {

// F_p for p <= 101, residues as machine words; arithmetic exact mod p.
class PrimeField {
 public:
  explicit PrimeField(unsigned p) : p_(p) {
    if (p < 2 || p > 101) throw Error("BadField", "prime field size must be a prime <= 101");
    for (unsigned d = 2; d * d <= p; ++d)
      if (p % d == 0) throw Error("BadField", std::to_string(p) + " is not prime");
  }

  unsigned p() const { return p_; }
  unsigned add(unsigned a, unsigned b) const { return (a + b) % p_; }
  unsigned sub(unsigned a, unsigned b) const { return (a + p_ - b % p_) % p_; }
  unsigned mul(unsigned a, unsigned b) const { return (a * b) % p_; }
  unsigned neg(unsigned a) const { return (p_ - a % p_) % p_; }

  unsigned pow(unsigned a, unsigned e) const {
    unsigned acc = 1, base = a % p_;
    while (e) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  unsigned inv(unsigned a) const {
    if (a % p_ == 0) throw Error("DivisionByZero", "inverse of 0 in F_p");
    return pow(a, p_ - 2);
  }

  // Euler criterion; 0 counts as a square.
  bool is_square(unsigned a) const {
    a %= p_;
    if (a == 0) return true;
    if (p_ == 2) return true;
    return pow(a, (p_ - 1) / 2) == 1;
  }

 private:
  unsigned p_;
};

}  // namespace gvc
