#pragma once

#include <vector>

#include "gvc/dynkin.hpp"
#include "gvc/matrix.hpp"
#include "gvc/polynomial.hpp"

namespace gvc {

// Small dense integer matrix; entries stay exact machine integers.
struct IntMat {
  int n = 0;
  std::vector<int> a;  // row-major

  int& at(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
  int at(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }
  static IntMat identity(int n);
  IntMat operator*(const IntMat& o) const;
  bool operator==(const IntMat& o) const = default;
};

// Weyl group as an explicit matrix group: type A as permutation matrices
// on rank+1 coordinates, B/C as signed permutations, D as even-signed
// permutations, exceptional types from simple-reflection matrices in the
// root basis. Elements come from closure; the order is computed, never
// assumed.
struct WeylGroupRealization {
  DynkinType type;
  int matrix_dim = 0;
  std::vector<IntMat> elements;

  std::size_t order() const { return elements.size(); }
};

WeylGroupRealization realize_weyl_group(const DynkinType& type, std::size_t max_order = 20000);

// Molien series (1/|W|) sum_w 1/det(I - t w) to the given order. The
// default entry point parallelizes over group elements; the serial
// variant is the reference kept for testing.
RatSeries molien_series(const WeylGroupRealization& w, std::size_t order);
RatSeries molien_series_serial(const WeylGroupRealization& w, std::size_t order);

// Invariant degrees recovered by greedy factoring of the Molien series
// as prod 1/(1 - t^{d_i}); the factoring is certified by the degree
// product matching |W|. Type A discards the degree-1 trivial invariant.
std::vector<int> molien_degrees(const DynkinType& type, std::size_t max_order = 20000);

// Root count by reflection closure over exact integer root coordinates.
std::size_t enumerate_roots(const DynkinType& type);

}  // namespace gvc
