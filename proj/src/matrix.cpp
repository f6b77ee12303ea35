#include "gvc/matrix.hpp"

#include <utility>

namespace gvc {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::companion(const IntPoly& p) {
  if (!p.is_monic()) throw Error("BadCharPoly", "companion matrix needs a monic polynomial");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  RatMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.at(i + 1, i) = 1;
  for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1) = -Rat(p.coeff(i));
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw Error("ShapeMismatch", "matrix product shape");
  RatMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rat& b = o.at(k, j);
        if (b != 0) out.at(i, j) += a * b;
      }
    }
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("ShapeMismatch", "matrix difference shape");
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

RatMatrix RatMatrix::pow(const Int& n) const {
  if (rows_ != cols_) throw Error("ShapeMismatch", "matrix power needs a square matrix");
  if (n < 0) throw Error("ShapeMismatch", "negative matrix power");
  RatMatrix base = *this;
  RatMatrix acc = identity(rows_);
  Int e = n;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

Rat RatMatrix::det() const {
  if (rows_ != cols_) throw Error("ShapeMismatch", "determinant of a non-square matrix");
  RatMatrix a = *this;
  Rat d(1);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t pivot = col;
    while (pivot < rows_ && a.at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) return Rat(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      d = -d;
    }
    const Rat p = a.at(col, col);
    d *= p;
    for (std::size_t i = col + 1; i < rows_; ++i) {
      if (a.at(i, col) == 0) continue;
      const Rat f = a.at(i, col) / p;
      for (std::size_t j = col; j < cols_; ++j) a.at(i, j) -= f * a.at(col, j);
    }
  }
  return d;
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<std::size_t> echelon(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(row, j));
    const Rat p = a.at(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) /= p;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col) == 0) continue;
      const Rat f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t RatMatrix::rank() const {
  RatMatrix a = *this;
  return echelon(a).size();
}

std::vector<std::vector<Rat>> RatMatrix::nullspace() const {
  RatMatrix a = *this;
  const auto pivots = echelon(a);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool RatMatrix::solve(const std::vector<Rat>& b, std::vector<Rat>& x) const {
  if (b.size() != rows_) throw Error("ShapeMismatch", "solve rhs size");
  RatMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  const auto pivots = echelon(aug);
  x.assign(cols_, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols_) return false;  // inconsistent row
    x[pivots[r]] = aug.at(r, cols_);
  }
  return true;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
  if (v.size() != cols_) throw Error("ShapeMismatch", "matrix apply size");
  std::vector<Rat> out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
  return out;
}

IntPoly det_identity_minus_t(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error("ShapeMismatch", "det(I - tM) of a non-square matrix");
  const std::size_t n = m.rows();
  // Power traces p_k = tr(M^k), then k*e_k = sum (-1)^{i-1} e_{k-i} p_i.
  std::vector<Rat> p(n + 1, Rat(0));
  RatMatrix mk = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = mk * m;
    Rat tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
    p[k] = tr;
  }
  std::vector<Rat> e(n + 1, Rat(0));
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rat acc(0);
    int sign = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      acc += Rat(sign) * e[k - i] * p[i];
      sign = -sign;
    }
    e[k] = acc / Rat(static_cast<unsigned long>(k));
  }
  // det(I - tM) = sum (-1)^k e_k t^k; integral whenever M is integral.
  std::vector<Int> coeffs(n + 1, Int(0));
  for (std::size_t k = 0; k <= n; ++k) {
    Rat c = (k % 2 == 0) ? e[k] : -e[k];
    if (!is_integer(c)) throw Error("NotIntegral", "det(I - tM) over a non-integral matrix");
    coeffs[k] = c.get_num();
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace gvc
