#pragma once

#include <vector>

#include "gvc/hopf.hpp"
#include "gvc/matrix.hpp"

namespace gvc {

// Brute-force graded trace: lifts a generator action to the explicit
// exterior algebra and sums (-1)^r tr over each cohomological degree.
// Independent of the determinant route in the dynamics module.
Rat alternating_trace_via_exterior(const std::vector<int>& degrees, const RatMatrix& action,
                                   const HopfLimits& limits = {});

}  // namespace gvc
