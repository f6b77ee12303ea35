#include "gvc/enumeration.hpp"

#include <cstdlib>

#include "gvc/prime_field.hpp"

namespace gvc {

EnumerationBudget budget_from_env() {
  EnumerationBudget budget;
  if (const char* env = std::getenv("GVC_ORACLE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) budget.max_points = v;
  }
  return budget;
}

namespace {

std::uint64_t checked_point_total(unsigned p, unsigned cells, const EnumerationBudget& budget) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < cells; ++i) {
    if (total > budget.max_points / p)
      throw Error("TooLarge", "scan of p^" + std::to_string(cells) + " points for p = " +
                                  std::to_string(p) + " exceeds the oracle budget of " +
                                  std::to_string(budget.max_points));
    total *= p;
  }
  return total;
}

// Determinant mod p of the matrix encoded by the base-p digits of idx.
unsigned det_of_encoded(int n, unsigned p, std::uint64_t idx) {
  unsigned m[9];
  for (int k = 0; k < n * n; ++k) {
    m[k] = static_cast<unsigned>(idx % p);
    idx /= p;
  }
  auto sub = [p](unsigned a, unsigned b) { return (a + p - b % p) % p; };
  switch (n) {
    case 1:
      return m[0];
    case 2:
      return sub(m[0] * m[3] % p, m[1] * m[2] % p);
    default: {
      const unsigned pos =
          (m[0] * m[4] % p * m[8] + m[1] * m[5] % p * m[6] + m[2] * m[3] % p * m[7]) % p;
      const unsigned neg =
          (m[2] * m[4] % p * m[6] + m[0] * m[5] % p * m[7] + m[1] * m[3] % p * m[8]) % p;
      return sub(pos, neg);
    }
  }
}

enum class CountKind { Invertible, DetOne };

Int count_matrices_serial(int n, unsigned p, CountKind kind, const EnumerationBudget& budget) {
  if (n < 1 || n > 3) throw Error("TooLarge", "matrix enumeration supports n <= 3");
  PrimeField field(p);
  const std::uint64_t total = checked_point_total(p, static_cast<unsigned>(n * n), budget);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const unsigned det = det_of_encoded(n, p, idx);
    if (kind == CountKind::Invertible ? det != 0 : det == 1) ++count;
  }
  return Int(static_cast<unsigned long>(count));
}

Int count_matrices(int n, unsigned p, CountKind kind, const EnumerationBudget& budget) {
  if (n < 1 || n > 3) throw Error("TooLarge", "matrix enumeration supports n <= 3");
  PrimeField field(p);
  const std::uint64_t total = checked_point_total(p, static_cast<unsigned>(n * n), budget);
  std::uint64_t count = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : count)
#endif
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const unsigned det = det_of_encoded(n, p, idx);
    if (kind == CountKind::Invertible ? det != 0 : det == 1) ++count;
  }
  return Int(static_cast<unsigned long>(count));
}

}  // namespace

Int enumerate_gl(int n, unsigned p, const EnumerationBudget& budget) {
  return count_matrices(n, p, CountKind::Invertible, budget);
}

Int enumerate_gl_serial(int n, unsigned p, const EnumerationBudget& budget) {
  return count_matrices_serial(n, p, CountKind::Invertible, budget);
}

Int enumerate_sl(int n, unsigned p, const EnumerationBudget& budget) {
  return count_matrices(n, p, CountKind::DetOne, budget);
}

Int enumerate_sl_serial(int n, unsigned p, const EnumerationBudget& budget) {
  return count_matrices_serial(n, p, CountKind::DetOne, budget);
}

Int enumerate_torus_tuples(int k, unsigned p, const EnumerationBudget& budget) {
  if (k < 0) throw Error("TooLarge", "negative tuple length");
  PrimeField field(p);
  const std::uint64_t total = checked_point_total(p, static_cast<unsigned>(k), budget);
  std::uint64_t count = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : count)
#endif
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    bool all_nonzero = true;
    for (int i = 0; i < k && all_nonzero; ++i) {
      all_nonzero = (rest % p) != 0;
      rest /= p;
    }
    if (all_nonzero) ++count;
  }
  return Int(static_cast<unsigned long>(count));
}

EllipticData enumerate_elliptic(long a, long b, unsigned p) {
  if (p <= 3) throw Error("BadField", "elliptic enumeration needs p > 3");
  PrimeField field(p);
  const unsigned ar = static_cast<unsigned>(((a % p) + p) % p);
  const unsigned br = static_cast<unsigned>(((b % p) + p) % p);
  // 4a^3 + 27b^2 != 0 mod p
  const unsigned disc = field.add(field.mul(4, field.pow(ar, 3)), field.mul(27, field.mul(br, br)));
  if (disc == 0)
    throw Error("SingularCurve", "y^2 = x^3 + " + std::to_string(a) + "x + " + std::to_string(b) +
                                     " is singular mod " + std::to_string(p));
  unsigned long count = 1;  // point at infinity
  for (unsigned x = 0; x < p; ++x) {
    const unsigned rhs = field.add(field.mul(field.mul(x, x), x), field.add(field.mul(ar, x), br));
    if (rhs == 0)
      count += 1;
    else if (field.is_square(rhs))
      count += 2;
  }
  const long trace = static_cast<long>(p) + 1 - static_cast<long>(count);
  if (trace * trace > 4 * static_cast<long>(p))
    throw Error("HasseViolation", "trace " + std::to_string(trace) + " breaks the Hasse bound");
  IntPoly charpoly({Int(static_cast<unsigned long>(p)), Int(-trace), Int(1)});
  return {Int(count), trace, std::move(charpoly)};
}

}  // namespace gvc
