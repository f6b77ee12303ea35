#include "gvc/verification.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gvc/exterior_lift.hpp"
#include "gvc/presentation.hpp"
#include "gvc/weyl.hpp"

namespace gvc {

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

namespace {

std::uint64_t roll(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

GroupExpr random_leaf(std::mt19937_64& rng) {
  switch (roll(rng, 8)) {
    case 0: return trivial_group();
    case 1: return unipotent(static_cast<std::int64_t>(roll(rng, 3)));
    case 2: return torus(static_cast<std::int64_t>(roll(rng, 3)));
    case 3: return abelian(static_cast<std::int64_t>(roll(rng, 2)));
    case 4: return simple_group(make_dynkin(DynkinFamily::A, 1));
    case 5: return simple_group(make_dynkin(DynkinFamily::A, 2));
    case 6: return simple_group(make_dynkin(DynkinFamily::B, 2));
    default: return simple_group(make_dynkin(DynkinFamily::G2));
  }
}

GroupExpr random_tree(std::mt19937_64& rng, int depth) {
  if (depth <= 0 || roll(rng, 10) < 4) return random_leaf(rng);
  switch (roll(rng, 4)) {
    case 0:
    case 1:
      return extension(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 2: {
      std::vector<GroupExpr> factors;
      const std::size_t count = 2 + roll(rng, 2);
      for (std::size_t i = 0; i < count; ++i) factors.push_back(random_tree(rng, depth - 1));
      return product(std::move(factors));
    }
    default:
      return isogenous(random_tree(rng, depth - 1));
  }
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const long num = static_cast<long>(roll(rng, 7)) - 3;
      const unsigned long den = roll(rng, 4) == 0 ? 2 : 1;
      m.at(i, j) = Rat(num, den);
      m.at(i, j).canonicalize();
    }
  return m;
}

IntPoly random_monic(std::mt19937_64& rng, std::size_t degree) {
  std::vector<Int> coeffs(degree + 1, Int(0));
  for (std::size_t i = 0; i < degree; ++i) coeffs[i] = static_cast<long>(roll(rng, 11)) - 5;
  coeffs[degree] = 1;
  return IntPoly(std::move(coeffs));
}

}  // namespace

GroupExpr random_extension_tree(std::mt19937_64& rng, int max_depth, std::size_t max_generators) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    GroupExpr candidate = random_tree(rng, max_depth);
    if (presentation(candidate).size() <= max_generators) return candidate;
  }
  return torus(1);
}

EndomorphismAction random_block_action(std::mt19937_64& rng, const CohomologyPresentation& pres) {
  std::map<std::pair<std::string, int>, std::vector<std::string>> grouped;
  for (const auto& g : pres.generators)
    grouped[{label_component(g.label), g.degree}].push_back(g.label);
  EndomorphismAction act;
  for (auto& [key, labels] : grouped) {
    (void)key;
    // Fisher-Yates, then split into blocks of 1..3
    for (std::size_t i = labels.size(); i > 1; --i)
      std::swap(labels[i - 1], labels[roll(rng, i)]);
    std::size_t start = 0;
    while (start < labels.size()) {
      const std::size_t size = std::min<std::size_t>(1 + roll(rng, 3), labels.size() - start);
      std::vector<std::string> block_labels(labels.begin() + static_cast<std::ptrdiff_t>(start),
                                            labels.begin() + static_cast<std::ptrdiff_t>(start + size));
      EndoBlock block;
      block.labels = std::move(block_labels);
      if (roll(rng, 3) == 0)
        block.action = random_monic(rng, size);
      else
        block.action = random_matrix(rng, size);
      act.blocks.push_back(std::move(block));
      start += size;
    }
  }
  return act;
}

EndomorphismAction prefix_action(const EndomorphismAction& act, const std::string& prefix) {
  EndomorphismAction out = act;
  for (auto& block : out.blocks)
    for (auto& label : block.labels) label = prefix + label;
  return out;
}

namespace {

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

bool poincare_splits_everywhere(const GroupExpr& e, std::string& witness) {
  if (const auto* ext = e.as<Extension>()) {
    const auto whole = poincare(presentation(e));
    const auto left = poincare(presentation(*ext->normal));
    const auto right = poincare(presentation(*ext->quotient));
    if (whole.coeffs != poly_mul(left.coeffs, right.coeffs)) {
      witness = "poincare(" + pretty_print(e) + ") != poincare(N) * poincare(Q)";
      return false;
    }
    return poincare_splits_everywhere(*ext->normal, witness) &&
           poincare_splits_everywhere(*ext->quotient, witness);
  }
  return true;
}

}  // namespace

std::vector<CheckResult> check_poincare_multiplicativity(unsigned trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  unsigned failures = 0;
  std::string witness;
  for (unsigned t = 0; t < trials; ++t) {
    const GroupExpr tree = normalize(random_extension_tree(rng, 4, 10));
    std::string local;
    if (!poincare_splits_everywhere(tree, local)) {
      ++failures;
      if (witness.empty()) witness = local;
    }
  }
  out.push_back({"poincare multiplicativity on " + std::to_string(trials) + " random trees",
                 failures == 0,
                 failures == 0 ? "exact polynomial equality at every extension node"
                               : std::to_string(failures) + " failures; first: " + witness});
  return out;
}

namespace {

bool degrees_match(const PrimitiveBasis& prim, std::vector<int> expected) {
  std::vector<int> got = prim.degrees();
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  return got == expected;
}

CheckResult corrupted_coproduct_control(const HopfLimits& limits) {
  ExplicitHopfAlgebra h = exterior_hopf({1, 3}, limits);
  // declare the top wedge primitive: drop the interior terms of its coproduct
  const BasisIndex top = 3;
  h.coproduct[top] = SparsePairVec{
      {{pair_key(top, h.unit), Rat(1)}, {pair_key(h.unit, top), Rat(1)}}};
  const bool axioms_fail = !verify_axioms(h).ok;
  const bool theorem_fails = !verify_hopf_theorem(h, limits).iso;
  return {"corrupted coproduct is rejected", axioms_fail && theorem_fails,
          axioms_fail ? "axiom sweep and exterior comparison both report the defect"
                      : "corruption slipped through the axiom sweep"};
}

// Explicit algebras for the presentations of N, Q, and Extension{N, Q},
// with the canonical restriction/inflation maps on generators.
CheckResult presentation_exactness_bridge(std::mt19937_64& rng, unsigned trials,
                                          const HopfLimits& limits) {
  unsigned failures = 0, checked = 0;
  std::string witness;
  for (unsigned t = 0; t < trials; ++t) {
    const GroupExpr normal = random_extension_tree(rng, 2, 3);
    const GroupExpr quotient = random_extension_tree(rng, 2, 3);
    const GroupExpr whole = extension(normal, quotient);
    const auto pres_g = presentation(whole);
    if (pres_g.size() > 6) continue;
    ++checked;
    const auto pres_n = presentation(normal);
    const auto pres_q = presentation(quotient);

    const ExplicitHopfAlgebra hg = exterior_hopf(pres_g.degrees(), limits);
    const ExplicitHopfAlgebra hn = exterior_hopf(pres_n.degrees(), limits);
    const ExplicitHopfAlgebra hq = exterior_hopf(pres_q.degrees(), limits);

    std::map<std::string, std::size_t> index_n, index_g;
    for (std::size_t i = 0; i < pres_n.size(); ++i) index_n[pres_n.generators[i].label] = i;
    for (std::size_t i = 0; i < pres_g.size(); ++i) index_g[pres_g.generators[i].label] = i;

    // iota*: generators coming from the normal leg restrict, the rest die
    std::vector<SparseVec> iota_images;
    for (const auto& g : pres_g.generators) {
      if (g.label.rfind("ext.n.", 0) == 0) {
        const std::size_t k = index_n.at(g.label.substr(6));
        iota_images.push_back(SparseVec{{{BasisIndex{1} << k, Rat(1)}}});
      } else {
        iota_images.push_back(SparseVec{});
      }
    }
    // pi*: every quotient generator inflates to its copy in the whole
    std::vector<SparseVec> pi_images;
    for (const auto& g : pres_q.generators) {
      const std::size_t k = index_g.at("ext.q." + g.label);
      pi_images.push_back(SparseVec{{{BasisIndex{1} << k, Rat(1)}}});
    }

    const auto report = check_primitive_exactness(exterior_extend(hg, hn, iota_images),
                                                  exterior_extend(hq, hg, pi_images), limits);
    if (!report.exact || !report.iso_verified) {
      ++failures;
      if (witness.empty()) witness = pretty_print(whole) + ": " + report.failure;
    }
  }
  return {"presentation triples are primitively exact (" + std::to_string(checked) + " checked)",
          failures == 0,
          failures == 0 ? "canonical maps pass exactness and the induced isomorphism"
                        : std::to_string(failures) + " failures; first: " + witness};
}

CheckResult zero_pi_star_control(const HopfLimits& limits) {
  const ExplicitHopfAlgebra n = exterior_hopf({1}, limits);
  const ExplicitHopfAlgebra q = exterior_hopf({3}, limits);
  const ExplicitHopfAlgebra g = hopf_tensor(n, q, limits);
  const HopfMorphism iota = tensor_projection_first(g, n, q);
  // pi* killing the generator of Q is a Hopf morphism but not injective
  HopfMorphism pi = exterior_extend(q, g, {SparseVec{}});
  const ExactnessReport report = check_primitive_exactness(iota, pi, limits);
  return {"zero pi* fails injectivity", !report.exact && !report.iso_verified && !report.injective,
          report.failure};
}

}  // namespace

std::vector<CheckResult> check_hopf_suite(unsigned trials, unsigned max_generators,
                                          std::uint64_t seed, const HopfLimits& limits) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  unsigned failures = 0;
  std::string witness;

  for (unsigned t = 0; t < trials; ++t) {
    const std::size_t count = 1 + roll(rng, max_generators);
    std::vector<int> degrees;
    for (std::size_t i = 0; i < count; ++i) degrees.push_back(1 + 2 * static_cast<int>(roll(rng, 5)));

    auto fail = [&](const std::string& what) {
      ++failures;
      if (witness.empty()) {
        std::ostringstream os;
        os << what << " on degrees [";
        for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
        os << "]";
        witness = os.str();
      }
    };

    const ExplicitHopfAlgebra h = exterior_hopf(degrees, limits);
    const AxiomReport axioms = verify_axioms(h);
    if (!axioms.ok) {
      fail("axioms: " + axioms.failure);
      continue;
    }
    if (!degrees_match(primitives(h), degrees)) {
      fail("primitive basis differs from the generators");
      continue;
    }
    if (const auto theorem = verify_hopf_theorem(h, limits); !theorem.iso) {
      fail("exterior isomorphism: " + theorem.failure);
      continue;
    }

    // Kunneth split
    const std::size_t split = roll(rng, count + 1);
    const std::vector<int> left(degrees.begin(), degrees.begin() + static_cast<std::ptrdiff_t>(split));
    const std::vector<int> right(degrees.begin() + static_cast<std::ptrdiff_t>(split), degrees.end());
    const ExplicitHopfAlgebra a = exterior_hopf(left, limits);
    const ExplicitHopfAlgebra b = exterior_hopf(right, limits);
    const ExplicitHopfAlgebra tensor = hopf_tensor(a, b, limits);
    if (const auto taxioms = verify_axioms(tensor); !taxioms.ok) {
      fail("tensor axioms: " + taxioms.failure);
      continue;
    }
    if (!degrees_match(primitives(tensor), degrees)) {
      fail("tensor primitives are not additive");
      continue;
    }
    if (const auto theorem = verify_hopf_theorem(tensor, limits); !theorem.iso) {
      fail("tensor exterior isomorphism: " + theorem.failure);
      continue;
    }
    const ExactnessReport exact = check_primitive_exactness(
        tensor_projection_first(tensor, a, b), tensor_inclusion_second(tensor, a, b), limits);
    if (!exact.exact || !exact.iso_verified) {
      fail("split exactness: " + exact.failure);
      continue;
    }
  }

  out.push_back({"hopf suite on " + std::to_string(trials) + " random degree lists", failures == 0,
                 failures == 0 ? "axioms, primitives, isomorphism, Kunneth, exactness all exact"
                               : std::to_string(failures) + " failures; first: " + witness});
  out.push_back(corrupted_coproduct_control(limits));
  out.push_back(zero_pi_star_control(limits));
  return out;
}

std::vector<CheckResult> check_trace_consistency(unsigned trials, unsigned n_max,
                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  unsigned lift_failures = 0, mult_failures = 0;
  std::string witness;

  for (unsigned t = 0; t < trials; ++t) {
    const GroupExpr left = random_extension_tree(rng, 2, 3);
    const GroupExpr right = random_extension_tree(rng, 2, 2);
    const GroupExpr whole = extension(left, right);
    const CohomologyPresentation pres = presentation(whole);
    if (pres.size() > 5) continue;

    const EndomorphismAction act_left = random_block_action(rng, presentation(left));
    const EndomorphismAction act_right = random_block_action(rng, presentation(right));
    EndomorphismAction act = prefix_action(act_left, "ext.n.");
    for (auto& block : prefix_action(act_right, "ext.q.").blocks) act.blocks.push_back(block);

    const Rat direct = graded_trace(pres, act);
    const Rat lifted =
        alternating_trace_via_exterior(pres.degrees(), full_action_matrix(pres, act));
    if (direct != lifted) {
      ++lift_failures;
      if (witness.empty())
        witness = "trace " + to_string(direct) + " vs lift " + to_string(lifted) + " on " +
                  pretty_print(whole);
    }

    const auto d_whole = d_sequence(pres, act, n_max);
    const auto d_left = d_sequence(presentation(left), act_left, n_max);
    const auto d_right = d_sequence(presentation(right), act_right, n_max);
    for (unsigned n = 0; n < n_max; ++n)
      if (d_whole[n] != d_left[n] * d_right[n]) {
        ++mult_failures;
        if (witness.empty())
          witness = "d_" + std::to_string(n + 1) + " not multiplicative on " + pretty_print(whole);
        break;
      }
  }

  out.push_back({"graded trace vs exterior lift on " + std::to_string(trials) + " random actions",
                 lift_failures == 0,
                 lift_failures == 0 ? "det(I - M) matches the brute-force alternating trace"
                                    : std::to_string(lift_failures) + " failures; first: " + witness});
  out.push_back({"d_n multiplicativity over extensions (n <= " + std::to_string(n_max) + ")",
                 mult_failures == 0,
                 mult_failures == 0 ? "exact equality for every iterate"
                                    : std::to_string(mult_failures) + " failures; first: " + witness});
  return out;
}

std::vector<CheckResult> check_weyl_degree_table(std::size_t max_order) {
  std::vector<CheckResult> out;

  const std::vector<DynkinType> feasible = {
      make_dynkin(DynkinFamily::A, 1), make_dynkin(DynkinFamily::A, 2),
      make_dynkin(DynkinFamily::A, 3), make_dynkin(DynkinFamily::A, 4),
      make_dynkin(DynkinFamily::A, 5), make_dynkin(DynkinFamily::A, 6),
      make_dynkin(DynkinFamily::B, 2), make_dynkin(DynkinFamily::B, 3),
      make_dynkin(DynkinFamily::B, 4), make_dynkin(DynkinFamily::C, 3),
      make_dynkin(DynkinFamily::C, 4), make_dynkin(DynkinFamily::D, 4),
      make_dynkin(DynkinFamily::D, 5), make_dynkin(DynkinFamily::G2),
      make_dynkin(DynkinFamily::F4)};
  for (const auto& type : feasible) {
    const auto recovered = molien_degrees(type, max_order);
    const auto table = invariant_degrees(type);
    out.push_back({"molien degrees of " + to_string(type), recovered == table,
                   recovered == table ? "matches the hard-coded table"
                                      : "molien factoring disagrees with the table"});
  }

  std::vector<DynkinType> all;
  for (int n = 1; n <= 8; ++n) all.push_back(make_dynkin(DynkinFamily::A, n));
  for (int n = 2; n <= 8; ++n) all.push_back(make_dynkin(DynkinFamily::B, n));
  for (int n = 3; n <= 8; ++n) all.push_back(make_dynkin(DynkinFamily::C, n));
  for (int n = 4; n <= 8; ++n) all.push_back(make_dynkin(DynkinFamily::D, n));
  all.push_back(make_dynkin(DynkinFamily::G2));
  all.push_back(make_dynkin(DynkinFamily::F4));
  all.push_back(make_dynkin(DynkinFamily::E6));
  all.push_back(make_dynkin(DynkinFamily::E7));
  all.push_back(make_dynkin(DynkinFamily::E8));
  bool identity_holds = true;
  std::string witness;
  for (const auto& type : all) {
    std::int64_t degree_sum = 0;
    for (int d : invariant_degrees(type)) degree_sum += 2 * d - 1;
    const std::int64_t by_roots = type.rank + static_cast<std::int64_t>(enumerate_roots(type));
    if (degree_sum != by_roots) {
      identity_holds = false;
      witness = to_string(type) + ": degree sum " + std::to_string(degree_sum) +
                " vs rank + roots " + std::to_string(by_roots);
      break;
    }
  }
  out.push_back({"degree-sum vs root-count identity through rank 8", identity_holds,
                 identity_holds ? "rank + #roots = sum(2d - 1) for every type" : witness});
  return out;
}

std::vector<CheckResult> check_point_count_grid(const EnumerationBudget& budget) {
  std::vector<CheckResult> out;

  auto check_group = [&](const std::string& name, const GroupExpr& expr, unsigned p, const Int& oracle) {
    const Int formula = lefschetz_point_count(expr, Int(p)).value;
    out.push_back({name + " over F_" + std::to_string(p), formula == oracle,
                   formula == oracle ? formula.get_str() + " points both ways"
                                     : "formula " + formula.get_str() + " vs oracle " + oracle.get_str()});
  };

  for (unsigned p : {2u, 3u, 5u, 7u}) check_group("GL(2)", gl_group(2), p, enumerate_gl(2, p, budget));
  for (unsigned p : {2u, 3u}) check_group("GL(3)", gl_group(3), p, enumerate_gl(3, p, budget));
  for (unsigned p : {2u, 3u, 5u, 7u}) check_group("SL(2)", sl_group(2), p, enumerate_sl(2, p, budget));
  for (int k = 1; k <= 4; ++k)
    for (unsigned p : {3u, 5u})
      check_group("torus(" + std::to_string(k) + ")", torus(k), p,
                  enumerate_torus_tuples(k, p, budget));

  for (unsigned p : {5u, 7u, 11u, 13u}) {
    unsigned curves = 0;
    unsigned matched = 0;
    std::string witness;
    for (long a = 0; a <= 4 && curves < 5; ++a)
      for (long b = 1; b <= 4 && curves < 5; ++b) {
        EllipticData data;
        try {
          data = enumerate_elliptic(a, b, p);
        } catch (const Error& e) {
          if (e.code() == "SingularCurve") continue;
          throw;
        }
        ++curves;
        const GroupExpr curve = abelian(1, data.charpoly);
        const Int formula = lefschetz_point_count(curve, Int(p)).value;
        if (formula == data.count)
          ++matched;
        else if (witness.empty())
          witness = "y^2 = x^3 + " + std::to_string(a) + "x + " + std::to_string(b) + " mod " +
                    std::to_string(p) + ": " + formula.get_str() + " vs " + data.count.get_str();
      }
    out.push_back({"elliptic curves over F_" + std::to_string(p), curves >= 5 && matched == curves,
                   curves >= 5 && matched == curves
                       ? std::to_string(curves) + " curves, charpoly route matches the scan"
                       : witness.empty() ? "fewer than 5 nonsingular curves scanned" : witness});
  }
  return out;
}

}  // namespace gvc
