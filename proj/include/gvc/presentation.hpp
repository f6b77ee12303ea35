#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "gvc/group_expr.hpp"
#include "gvc/numeric.hpp"
#include "gvc/polynomial.hpp"

namespace gvc {

// Frobenius eigenvalue q^d on a linear-part generator of degree 2d - 1.
struct LinearWeight {
  int d = 1;
  bool operator==(const LinearWeight&) const = default;
};

// One of the 2g degree-1 slots of an abelian node; the block acts through
// the node's stored Frobenius charpoly.
struct AbelianSlot {
  std::shared_ptr<const IntPoly> charpoly;  // null when the node carries none
  int index = 0;                            // 0..2g-1 within the node
  std::string node_path;
};

struct UnspecifiedFrobenius {};

using FrobeniusAnnotation = std::variant<LinearWeight, AbelianSlot, UnspecifiedFrobenius>;

struct Generator {
  std::string label;  // dot-joined tree path + ordinal, diff-stable
  int degree = 1;     // always odd
  FrobeniusAnnotation frobenius;
};

// Multiset of odd-degree exterior generators, sorted by (degree, label).
struct CohomologyPresentation {
  std::vector<Generator> generators;

  std::size_t size() const { return generators.size(); }
  std::vector<int> degrees() const;
};

// Integer-coefficient polynomial of Betti numbers; coeff index = degree.
struct PoincarePolynomial {
  std::vector<Int> coeffs;  // coeffs[0] = 1 always

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const PoincarePolynomial& o) const { return coeffs == o.coeffs; }
  std::string str() const;
};

// Exterior-algebra generators of H*(expr) via the splitting of extensions
// into building blocks. Labels are assigned on the normalized tree, so
// isogeny legs and product flattening do not affect the result.
CohomologyPresentation presentation(const GroupExpr& expr);

// prod (1 + t^deg) over the generators.
PoincarePolynomial poincare(const CohomologyPresentation& pres);

Int betti(const CohomologyPresentation& pres, std::size_t r);

// 1 on the empty presentation, 0 otherwise (all generator degrees are odd).
Int euler_characteristic(const CohomologyPresentation& pres);

// Top nonvanishing degree: sum of all generator degrees.
std::int64_t cohomological_dimension(const CohomologyPresentation& pres);

std::string frobenius_to_string(const FrobeniusAnnotation& f);

}  // namespace gvc
