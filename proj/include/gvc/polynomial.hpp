#pragma once

#include <string>
#include <vector>

#include "gvc/numeric.hpp"

namespace gvc {

// Dense integer polynomial in one variable t, coefficients ascending.
// Invariant: no trailing zero coefficient; the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);

  static IntPoly constant(Int c);
  // t^k
  static IntPoly monomial(unsigned k, Int c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Int& coeff(std::size_t k) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool is_monic() const;
  Int eval(const Int& x) const;
  Int eval_at_one() const;
  Int constant_term() const { return is_zero() ? Int(0) : coeffs_[0]; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

  // Canonical form, e.g. "t^2+3t+5", "-t^3+1", "0".
  std::string str() const;

 private:
  std::vector<Int> coeffs_;
};

// Truncated power series over Q with a fixed coefficient window [0, order].
class RatSeries {
 public:
  RatSeries() = default;
  RatSeries(std::size_t order, Rat constant = Rat(0));
  static RatSeries from_coeffs(std::vector<Rat> coeffs);

  std::size_t order() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const Rat& coeff(std::size_t k) const { return coeffs_.at(k); }
  Rat& coeff(std::size_t k) { return coeffs_.at(k); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  RatSeries operator+(const RatSeries& o) const;
  RatSeries operator-(const RatSeries& o) const;
  RatSeries operator*(const RatSeries& o) const;
  RatSeries& operator+=(const RatSeries& o);

  // Multiplicative inverse; requires a nonzero constant term.
  RatSeries inverse() const;
  // exp of a series with zero constant term.
  RatSeries exp() const;

  bool operator==(const RatSeries& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<Rat> coeffs_;  // always order+1 entries
};

RatSeries series_of(const IntPoly& p, std::size_t order);

}  // namespace gvc
