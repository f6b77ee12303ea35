#include "gvc/dynkin.hpp"

#include <algorithm>

namespace gvc {

namespace {

bool is_exceptional(DynkinFamily f) {
  switch (f) {
    case DynkinFamily::E6:
    case DynkinFamily::E7:
    case DynkinFamily::E8:
    case DynkinFamily::F4:
    case DynkinFamily::G2:
      return true;
    default:
      return false;
  }
}

int fixed_rank(DynkinFamily f) {
  switch (f) {
    case DynkinFamily::E6: return 6;
    case DynkinFamily::E7: return 7;
    case DynkinFamily::E8: return 8;
    case DynkinFamily::F4: return 4;
    case DynkinFamily::G2: return 2;
    default: return 0;
  }
}

}  // namespace

DynkinType make_dynkin(DynkinFamily family, int rank) {
  if (is_exceptional(family)) return {family, fixed_rank(family)};
  return {family, rank};
}

std::optional<std::string> dynkin_rank_error(const DynkinType& t) {
  switch (t.family) {
    case DynkinFamily::A:
      if (t.rank < 1) return "A requires rank >= 1";
      return std::nullopt;
    case DynkinFamily::B:
      if (t.rank == 1) return "B_1 is not admissible (B_1 = A_1; use A1)";
      if (t.rank < 2) return "B requires rank >= 2";
      return std::nullopt;
    case DynkinFamily::C:
      if (t.rank == 2) return "C_2 is not admissible (C_2 = B_2; use B2)";
      if (t.rank == 1) return "C_1 is not admissible (C_1 = A_1; use A1)";
      if (t.rank < 3) return "C requires rank >= 3";
      return std::nullopt;
    case DynkinFamily::D:
      if (t.rank == 3) return "D_3 is not admissible (D_3 = A_3; use A3)";
      if (t.rank == 2) return "D_2 is not admissible (D_2 = A_1 x A_1; use prod)";
      if (t.rank < 4) return "D requires rank >= 4";
      return std::nullopt;
    default:
      if (t.rank != fixed_rank(t.family)) return "exceptional type carries a fixed rank";
      return std::nullopt;
  }
}

std::vector<int> invariant_degrees(const DynkinType& t) {
  if (dynkin_rank_error(t)) throw Error("RankOutOfRange", *dynkin_rank_error(t));
  std::vector<int> d;
  switch (t.family) {
    case DynkinFamily::A:
      for (int k = 2; k <= t.rank + 1; ++k) d.push_back(k);
      break;
    case DynkinFamily::B:
    case DynkinFamily::C:
      for (int k = 1; k <= t.rank; ++k) d.push_back(2 * k);
      break;
    case DynkinFamily::D:
      for (int k = 1; k <= t.rank - 1; ++k) d.push_back(2 * k);
      d.push_back(t.rank);
      break;
    case DynkinFamily::G2: d = {2, 6}; break;
    case DynkinFamily::F4: d = {2, 6, 8, 12}; break;
    case DynkinFamily::E6: d = {2, 5, 6, 8, 9, 12}; break;
    case DynkinFamily::E7: d = {2, 6, 8, 10, 12, 14, 18}; break;
    case DynkinFamily::E8: d = {2, 8, 12, 14, 18, 20, 24, 30}; break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::int64_t dynkin_dimension(const DynkinType& t) {
  std::int64_t dim = 0;
  for (int d : invariant_degrees(t)) dim += 2 * d - 1;
  return dim;
}

std::vector<std::vector<int>> cartan_matrix(const DynkinType& t) {
  if (dynkin_rank_error(t)) throw Error("RankOutOfRange", *dynkin_rank_error(t));
  const int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  };
  switch (t.family) {
    case DynkinFamily::A:
      chain(n);
      break;
    case DynkinFamily::B:
      // last simple root short: C[n-1][n-2] = -2
      chain(n);
      if (n >= 2) {
        c[n - 2][n - 1] = -1;
        c[n - 1][n - 2] = -2;
      }
      break;
    case DynkinFamily::C:
      // last simple root long: C[n-2][n-1] = -2
      chain(n);
      if (n >= 2) {
        c[n - 2][n - 1] = -2;
        c[n - 1][n - 2] = -1;
      }
      break;
    case DynkinFamily::D:
      chain(n - 1);
      c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
      break;
    case DynkinFamily::G2:
      c[0][1] = -1;
      c[1][0] = -3;
      break;
    case DynkinFamily::F4:
      chain(4);
      c[1][2] = -1;
      c[2][1] = -2;
      break;
    case DynkinFamily::E6:
    case DynkinFamily::E7:
    case DynkinFamily::E8: {
      // Bourbaki: chain 1-3-4-5-...-n, node 2 attached to node 4.
      std::vector<int> spine = {0};
      for (int k = 2; k < n; ++k) spine.push_back(k);
      for (std::size_t i = 0; i + 1 < spine.size(); ++i)
        c[spine[i]][spine[i + 1]] = c[spine[i + 1]][spine[i]] = -1;
      c[1][3] = c[3][1] = -1;
      break;
    }
  }
  return c;
}

std::string to_string(const DynkinType& t) {
  switch (t.family) {
    case DynkinFamily::A: return "A" + std::to_string(t.rank);
    case DynkinFamily::B: return "B" + std::to_string(t.rank);
    case DynkinFamily::C: return "C" + std::to_string(t.rank);
    case DynkinFamily::D: return "D" + std::to_string(t.rank);
    case DynkinFamily::E6: return "E6";
    case DynkinFamily::E7: return "E7";
    case DynkinFamily::E8: return "E8";
    case DynkinFamily::F4: return "F4";
    case DynkinFamily::G2: return "G2";
  }
  return "?";
}

std::optional<DynkinType> dynkin_from_string(const std::string& s) {
  if (s == "E6") return make_dynkin(DynkinFamily::E6);
  if (s == "E7") return make_dynkin(DynkinFamily::E7);
  if (s == "E8") return make_dynkin(DynkinFamily::E8);
  if (s == "F4") return make_dynkin(DynkinFamily::F4);
  if (s == "G2") return make_dynkin(DynkinFamily::G2);
  if (s.size() < 2) return std::nullopt;
  DynkinFamily f;
  switch (s[0]) {
    case 'A': f = DynkinFamily::A; break;
    case 'B': f = DynkinFamily::B; break;
    case 'C': f = DynkinFamily::C; break;
    case 'D': f = DynkinFamily::D; break;
    default: return std::nullopt;
  }
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    rank = rank * 10 + (s[i] - '0');
    if (rank > 1000) return std::nullopt;
  }
  return DynkinType{f, rank};
}

}  // namespace gvc
