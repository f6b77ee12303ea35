// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria run at fixed tolerances (all equalities are exact) and
// report wall-clock time against their budgets.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "gvc/endomorphism.hpp"
#include "gvc/parser.hpp"
#include "gvc/presentation.hpp"
#include "gvc/verification.hpp"

using namespace gvc;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_ms,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > budget_ms) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  std::printf("%s  criterion %d: %s (%.0f ms / %.0f ms)%s%s\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), elapsed, budget_ms, detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

bool remark24_witness(std::string& detail) {
  for (int n = 2; n <= 5; ++n) {
    if (betti(presentation(gl_group(n)), 1) != 1) {
      detail = "dim H^1(GL(" + std::to_string(n) + ")) != 1";
      return false;
    }
    if (betti(presentation(torus(n)), 1) != n) {
      detail = "dim H^1(torus(" + std::to_string(n) + ")) != n";
      return false;
    }
    if (poincare(presentation(gl_group(n))) ==
        poincare(presentation(torus(static_cast<std::int64_t>(n) * n)))) {
      detail = "poincare(GL(" + std::to_string(n) + ")) equals poincare(torus(n^2))";
      return false;
    }
  }
  return true;
}

bool semiabelian_dimensions(std::string& detail) {
  for (std::int64_t n = 0; n <= 5; ++n)
    for (std::int64_t g = 0; g <= 5; ++g) {
      const auto pres = presentation(extension(torus(n), abelian(g)));
      if (betti(pres, 1) != 2 * g + n || cohomological_dimension(pres) != 2 * g + n) {
        detail = "ext(torus(" + std::to_string(n) + "), abelian(" + std::to_string(g) + "))";
        return false;
      }
    }
  return true;
}

bool run_suite(const std::vector<CheckResult>& results, std::string& detail) {
  for (const auto& r : results)
    if (!r.pass) {
      detail = r.name + ": " + r.detail;
      return false;
    }
  return true;
}

bool euler_characteristic_traces(std::string& detail) {
  const std::vector<GroupExpr> with_generators = {
      torus(1),       torus(3),     gl_group(2),
      gl_group(4),    abelian(2),   extension(torus(2), abelian(1)),
      sl_group(3),    pgl_group(2), extension(unipotent(2), torus(1)),
      simple_group(make_dynkin(DynkinFamily::G2))};
  for (const auto& e : with_generators) {
    const auto pres = presentation(e);
    EndoSpec identity;
    identity.global_scalar = Rat(1);
    if (graded_trace(pres, resolve_endo(identity, pres)) != Rat(0)) {
      detail = "identity trace nonzero on " + pretty_print(e);
      return false;
    }
  }
  const std::vector<GroupExpr> acyclic = {trivial_group(), unipotent(1), unipotent(5),
                                          extension(unipotent(2), unipotent(3)),
                                          product({trivial_group(), unipotent(1)})};
  for (const auto& e : acyclic) {
    const auto pres = presentation(e);
    if (graded_trace(pres, EndomorphismAction{}) != Rat(1)) {
      detail = "identity trace not 1 on " + pretty_print(e);
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "remark-24 witness: GL(n) vs torus", 1000, remark24_witness);
  criterion(2, "semiabelian dim H^1 and cohomological dimension", 1000, semiabelian_dimensions);
  criterion(3, "poincare multiplicativity on 200 random trees", 5000, [](std::string& detail) {
    return run_suite(check_poincare_multiplicativity(200, 20220), detail);
  });
  criterion(4, "hopf suite on 50 random degree lists", 60000, [](std::string& detail) {
    return run_suite(check_hopf_suite(50, 6, 20221), detail);
  });
  criterion(5, "trace consistency on 100 random actions", 30000, [](std::string& detail) {
    return run_suite(check_trace_consistency(100, 8, 20222), detail);
  });
  criterion(6, "point-count equalities on the oracle grid", 60000, [](std::string& detail) {
    return run_suite(check_point_count_grid(), detail);
  });
  criterion(7, "weyl degree table and root-count identity", 120000, [](std::string& detail) {
    return run_suite(check_weyl_degree_table(20000), detail);
  });
  criterion(8, "euler characteristic via identity traces", 1000, euler_characteristic_traces);

  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all acceptance criteria passed\n");
  return failures;
}
