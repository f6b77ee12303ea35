#pragma once

#include <cstddef>
#include <vector>

#include "gvc/numeric.hpp"
#include "gvc/polynomial.hpp"

namespace gvc {

// Dense matrix over Q. All elimination is exact rational arithmetic.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static RatMatrix identity(std::size_t n);
  // Companion matrix of a monic polynomial; char poly of the result is p.
  static RatMatrix companion(const IntPoly& p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix pow(const Int& n) const;

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Rat det() const;
  std::size_t rank() const;

  // Basis of the right null space {x : Mx = 0}, as columns.
  std::vector<std::vector<Rat>> nullspace() const;

  // One solution of Mx = b, if any.
  bool solve(const std::vector<Rat>& b, std::vector<Rat>& x) const;

  std::vector<Rat> apply(const std::vector<Rat>& v) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

// Coefficients of det(I - t*M) via Newton's identities on power traces.
IntPoly det_identity_minus_t(const RatMatrix& m);

}  // namespace gvc
