#include "gvc/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace gvc {

namespace {

void strip_trailing_zeros(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  strip_trailing_zeros(coeffs_);
}

IntPoly IntPoly::constant(Int c) { return IntPoly({std::move(c)}); }

IntPoly IntPoly::monomial(unsigned k, Int c) {
  std::vector<Int> v(k + 1, Int(0));
  v[k] = std::move(c);
  return IntPoly(std::move(v));
}

const Int& IntPoly::coeff(std::size_t k) const {
  static const Int zero(0);
  return k < coeffs_.size() ? coeffs_[k] : zero;
}

bool IntPoly::is_monic() const { return !is_zero() && coeffs_.back() == 1; }

Int IntPoly::eval(const Int& x) const {
  Int acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Int IntPoly::eval_at_one() const {
  Int acc(0);
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPoly(std::move(out));
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Int& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Int a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? "-" : "+");
    }
    if (k == 0 || a != 1) out << a.get_str();
    if (k >= 1) out << "t";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

RatSeries::RatSeries(std::size_t order, Rat constant) : coeffs_(order + 1, Rat(0)) {
  coeffs_[0] = std::move(constant);
}

RatSeries RatSeries::from_coeffs(std::vector<Rat> coeffs) {
  RatSeries s;
  s.coeffs_ = std::move(coeffs);
  if (s.coeffs_.empty()) s.coeffs_.push_back(Rat(0));
  return s;
}

RatSeries RatSeries::operator+(const RatSeries& o) const {
  RatSeries out(std::min(order(), o.order()));
  for (std::size_t k = 0; k <= out.order(); ++k) out.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
  return out;
}

RatSeries RatSeries::operator-(const RatSeries& o) const {
  RatSeries out(std::min(order(), o.order()));
  for (std::size_t k = 0; k <= out.order(); ++k) out.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
  return out;
}

RatSeries& RatSeries::operator+=(const RatSeries& o) {
  if (o.order() < order()) coeffs_.resize(o.order() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

RatSeries RatSeries::operator*(const RatSeries& o) const {
  RatSeries out(std::min(order(), o.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= out.order(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return out;
}

RatSeries RatSeries::inverse() const {
  if (coeffs_[0] == 0) throw Error("NotInvertible", "series has zero constant term");
  RatSeries out(order());
  Rat c0 = 1 / coeffs_[0];
  out.coeffs_[0] = c0;
  for (std::size_t k = 1; k <= order(); ++k) {
    Rat acc(0);
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * out.coeffs_[k - j];
    out.coeffs_[k] = -c0 * acc;
  }
  return out;
}

RatSeries RatSeries::exp() const {
  if (coeffs_[0] != 0) throw Error("BadSeries", "exp needs zero constant term");
  // e' = s' e  gives  k e_k = sum_{j=1..k} j s_j e_{k-j}
  RatSeries out(order());
  out.coeffs_[0] = 1;
  for (std::size_t k = 1; k <= order(); ++k) {
    Rat acc(0);
    for (std::size_t j = 1; j <= k; ++j)
      acc += Rat(static_cast<unsigned long>(j)) * coeffs_[j] * out.coeffs_[k - j];
    out.coeffs_[k] = acc / Rat(static_cast<unsigned long>(k));
  }
  return out;
}

RatSeries series_of(const IntPoly& p, std::size_t order) {
  RatSeries s(order);
  for (std::size_t k = 0; k <= order && static_cast<int>(k) <= p.degree(); ++k)
    s.coeff(k) = Rat(p.coeff(k));
  return s;
}

}  // namespace gvc
