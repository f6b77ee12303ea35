#pragma once

#include "gvc/numeric.hpp"
#include "gvc/polynomial.hpp"

namespace gvc {

// Work cap for the exhaustive scans; GVC_ORACLE_BUDGET overrides.
struct EnumerationBudget {
  std::uint64_t max_points = 10'000'000;
};

EnumerationBudget budget_from_env();

// Exhaustive counts of invertible (resp. determinant-1) n x n matrices
// over F_p, n <= 3, by scanning all p^{n^2} matrices. The default entry
// points parallelize the scan; the _serial variants are the reference
// implementations kept for testing.
Int enumerate_gl(int n, unsigned p, const EnumerationBudget& budget = budget_from_env());
Int enumerate_gl_serial(int n, unsigned p, const EnumerationBudget& budget = budget_from_env());
Int enumerate_sl(int n, unsigned p, const EnumerationBudget& budget = budget_from_env());
Int enumerate_sl_serial(int n, unsigned p, const EnumerationBudget& budget = budget_from_env());

// Tuples in F_p^k with every coordinate nonzero, by full scan.
Int enumerate_torus_tuples(int k, unsigned p, const EnumerationBudget& budget = budget_from_env());

struct EllipticData {
  Int count;         // projective points of y^2 = x^3 + ax + b
  long trace;        // a_p = p + 1 - count, |a_p| <= 2 sqrt(p)
  IntPoly charpoly;  // t^2 - a_p t + p
};

// Point count of y^2 = x^3 + ax + b over F_p, p > 3, by scanning x and
// testing quadratic residues.
EllipticData enumerate_elliptic(long a, long b, unsigned p);

}  // namespace gvc
