#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gvc/group_expr.hpp"
#include "gvc/matrix.hpp"
#include "gvc/numeric.hpp"
#include "gvc/polynomial.hpp"
#include "gvc/presentation.hpp"

namespace gvc {

// Per-degree-block action on primitive generators: either an explicit
// rational matrix or a monic integer charpoly acting by its companion.
struct EndoBlock {
  std::vector<std::string> labels;
  std::variant<RatMatrix, IntPoly> action;
};

struct EndomorphismAction {
  std::vector<EndoBlock> blocks;
};

// Blocks with charpolys expanded to matrices, validated against the
// presentation: the blocks partition the generators and each block lives
// in a single degree.
struct ResolvedAction {
  std::vector<std::vector<std::string>> block_labels;
  std::vector<RatMatrix> block_matrices;
};

ResolvedAction resolve_action(const CohomologyPresentation& pres, const EndomorphismAction& act);

// Alternating trace of the induced action on H*: prod over blocks of
// det(I - M). The exterior-algebra lift in exterior_lift.hpp is the
// brute-force cross-check of this formula.
Rat graded_trace(const CohomologyPresentation& pres, const EndomorphismAction& act);

// d_n = graded trace of the n-th iterate, exact companion powering.
std::vector<Rat> d_sequence(const CohomologyPresentation& pres, const EndomorphismAction& act,
                            unsigned n_max);

// Coefficients of exp(sum d_n t^n / n) up to t^order.
RatSeries zeta_series(const std::vector<Rat>& d_values, std::size_t order);

struct PointCount {
  Int value;
  std::vector<std::string> warnings;  // e.g. Weil functional-equation defects
};

// Number of q-rational points by multiplicativity over the tree.
PointCount lefschetz_point_count(const GroupExpr& expr, const Int& q);

// Standard Frobenius blocks: q^d on a weight-d linear generator, the
// stored charpoly on each abelian node.
EndomorphismAction frobenius_action(const CohomologyPresentation& pres, const Int& q);

// Block-diagonal matrix on the full ordered generator list.
RatMatrix full_action_matrix(const CohomologyPresentation& pres, const EndomorphismAction& act);

// Structural component of a generator: its label without the ordinal.
// Blocks may not span components (no non-split twists).
std::string label_component(const std::string& label);

}  // namespace gvc
