#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gvc/endomorphism.hpp"
#include "gvc/enumeration.hpp"
#include "gvc/group_expr.hpp"
#include "gvc/hopf.hpp"

namespace gvc {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // witness on failure, summary on success
};

bool all_pass(const std::vector<CheckResult>& results);

// Structural tree with Extension/Product/Isogenous nodes over small
// building blocks; deterministic in the engine state.
GroupExpr random_extension_tree(std::mt19937_64& rng, int max_depth, std::size_t max_generators);

// Degree-homogeneous random block action on the presentation: small
// rational matrices and monic integer charpolys.
EndomorphismAction random_block_action(std::mt19937_64& rng, const CohomologyPresentation& pres);

// Re-labels every block of a per-leg action into the containing
// extension ("ext.n." or "ext.q." prefix).
EndomorphismAction prefix_action(const EndomorphismAction& act, const std::string& prefix);

// Poincare multiplicativity over every Extension node of random trees.
std::vector<CheckResult> check_poincare_multiplicativity(unsigned trials, std::uint64_t seed);

// Hopf axioms, primitives, the exterior-algebra isomorphism, Kunneth
// primitive additivity, exactness of split triples, and corrupted
// negative controls, on random degree lists.
std::vector<CheckResult> check_hopf_suite(unsigned trials, unsigned max_generators,
                                          std::uint64_t seed, const HopfLimits& limits = {});

// Determinant-formula traces against the exterior-algebra lift, and
// d_n multiplicativity across extensions, on random actions.
std::vector<CheckResult> check_trace_consistency(unsigned trials, unsigned n_max,
                                                 std::uint64_t seed);

// Molien-recovered degrees against the hard-coded table on the feasible
// types, and the degree-sum/root-count identity through rank 8.
std::vector<CheckResult> check_weyl_degree_table(std::size_t max_order = 20000);

// lefschetz_point_count against brute-force enumeration on the full
// feasible grid of matrix groups, tori, and elliptic curves.
std::vector<CheckResult> check_point_count_grid(
    const EnumerationBudget& budget = budget_from_env());

}  // namespace gvc
