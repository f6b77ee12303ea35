#include "gvc/exterior_lift.hpp"

#include <bit>

namespace gvc {

Rat alternating_trace_via_exterior(const std::vector<int>& degrees, const RatMatrix& action,
                                   const HopfLimits& limits) {
  const std::size_t n = degrees.size();
  if (action.rows() != n || action.cols() != n)
    throw Error("ShapeMismatch", "action matrix must be square over the generators");
  const ExplicitHopfAlgebra h = exterior_hopf(degrees, limits);

  // column j of the action is the image of generator j
  std::vector<SparseVec> images(n);
  for (std::size_t j = 0; j < n; ++j) {
    SparseVec v;
    for (std::size_t i = 0; i < n; ++i)
      if (action.at(i, j) != 0) v.terms.push_back({BasisIndex{1} << i, action.at(i, j)});
    images[j] = v;
  }

  // phi(e_S) = prod of generator images, ascending; trace per degree
  Rat total(0);
  std::vector<SparseVec> lifted(h.dim());
  lifted[0] = SparseVec{{{h.unit, Rat(1)}}};
  for (std::uint32_t mask = 0; mask < h.dim(); ++mask) {
    if (mask) {
      const int low = std::countr_zero(mask);
      lifted[mask] = h.mul(images[static_cast<std::size_t>(low)], lifted[mask & (mask - 1)]);
    }
    Rat diag(0);
    for (const auto& [k, c] : lifted[mask].terms)
      if (k == mask) diag = c;
    total += (h.degree(mask) % 2) ? -diag : diag;
  }
  return total;
}

}  // namespace gvc
