#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gvc/numeric.hpp"

namespace gvc {

enum class DynkinFamily { A, B, C, D, E6, E7, E8, F4, G2 };

struct DynkinType {
  DynkinFamily family;
  int rank;  // classical families; fixed 6/7/8/4/2 for E6/E7/E8/F4/G2

  bool operator==(const DynkinType& o) const = default;
};

DynkinType make_dynkin(DynkinFamily family, int rank = 0);

// Admissibility under the canonical low-rank conventions: A >= 1, B >= 2,
// C >= 3, D >= 4. Low-rank coincidences are rejected with a hint.
std::optional<std::string> dynkin_rank_error(const DynkinType& t);

// Degrees of the fundamental Weyl invariants, sorted ascending.
std::vector<int> invariant_degrees(const DynkinType& t);

// dim of the simply connected simple group: sum of (2d - 1) over degrees.
std::int64_t dynkin_dimension(const DynkinType& t);

// Cartan matrix C[i][j] = 2(a_i, a_j)/(a_i, a_i) in Bourbaki numbering.
std::vector<std::vector<int>> cartan_matrix(const DynkinType& t);

std::string to_string(const DynkinType& t);
std::optional<DynkinType> dynkin_from_string(const std::string& s);

}  // namespace gvc
