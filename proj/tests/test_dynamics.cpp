#include <doctest.h>

#include <random>

#include "gvc/endomorphism.hpp"
#include "gvc/exterior_lift.hpp"
#include "gvc/parser.hpp"
#include "gvc/verification.hpp"

using namespace gvc;

namespace {

EndomorphismAction identity_action(const CohomologyPresentation& pres) {
  EndoSpec spec;
  spec.global_scalar = Rat(1);
  return resolve_endo(spec, pres);
}

EndomorphismAction scalar_on(const CohomologyPresentation& pres, const Rat& value) {
  EndoSpec spec;
  spec.global_scalar = value;
  return resolve_endo(spec, pres);
}

}  // namespace

TEST_CASE("graded trace of the identity matches the euler characteristic") {
  for (const GroupExpr& e :
       {gl_group(2), gl_group(3), torus(3), abelian(2), extension(torus(1), abelian(1))}) {
    const auto pres = presentation(e);
    CHECK(graded_trace(pres, identity_action(pres)) == Rat(0));
    CHECK(euler_characteristic(pres) == 0);
  }
  for (const GroupExpr& e : {trivial_group(), unipotent(4), extension(unipotent(1), unipotent(2))}) {
    const auto pres = presentation(e);
    CHECK(graded_trace(pres, EndomorphismAction{}) == Rat(1));
    CHECK(euler_characteristic(pres) == 1);
  }
}

TEST_CASE("multiplication by m on the one-torus") {
  const auto pres = presentation(torus(1));
  for (long m : {0L, 2L, 3L, -1L, 7L}) {
    // brute force: H^0 contributes 1, H^1 contributes -m
    CHECK(graded_trace(pres, scalar_on(pres, Rat(m))) == Rat(1 - m));
  }
}

TEST_CASE("frobenius on an extension of an abelian variety by a torus") {
  const GroupExpr e = parse_expr("ext(torus(1), abelian(1; t^2+3t+5))");
  const auto pres = presentation(e);
  const auto frob = frobenius_action(pres, Int(5));
  // det(I - companion(t^2+3t+5)) = 9, torus block gives 1 - 5
  CHECK(graded_trace(pres, frob) == Rat(-36));
  // |d_1| equals the point count
  CHECK(lefschetz_point_count(e, Int(5)).value == 36);
}

TEST_CASE("d sequence of the doubling map on G_m") {
  const auto pres = presentation(torus(1));
  const auto d = d_sequence(pres, scalar_on(pres, Rat(2)), 8);
  REQUIRE(d.size() == 8);
  for (unsigned n = 1; n <= 8; ++n) CHECK(d[n - 1] == Rat(1) - rat_pow(Rat(2), n));
}

TEST_CASE("eigenvalue one forces vanishing d_n") {
  const auto pres = presentation(torus(2));
  EndomorphismAction act;
  RatMatrix m(2, 2);
  m.at(0, 0) = 1;  // eigenvalue 1
  m.at(1, 1) = 3;
  act.blocks.push_back({{pres.generators[0].label, pres.generators[1].label}, m});
  for (const Rat& d : d_sequence(pres, act, 5)) CHECK(d == Rat(0));
}

TEST_CASE("d_n splits across extensions") {
  const GroupExpr left = torus(1);
  const GroupExpr right = abelian(1, IntPoly({Int(5), Int(3), Int(1)}));
  const GroupExpr whole = extension(left, right);
  const auto pres_left = presentation(left);
  const auto pres_right = presentation(right);
  const auto pres = presentation(whole);

  const auto act_left = scalar_on(pres_left, Rat(5));
  const auto act_right = frobenius_action(pres_right, Int(5));
  EndomorphismAction act = prefix_action(act_left, "ext.n.");
  for (auto& block : prefix_action(act_right, "ext.q.").blocks) act.blocks.push_back(block);

  const auto d = d_sequence(pres, act, 6);
  const auto dl = d_sequence(pres_left, act_left, 6);
  const auto dr = d_sequence(pres_right, act_right, 6);
  for (unsigned n = 0; n < 6; ++n) CHECK(d[n] == dl[n] * dr[n]);
}

TEST_CASE("graded trace agrees with the exterior-algebra lift") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const GroupExpr e = random_extension_tree(rng, 3, 5);
    const auto pres = presentation(e);
    const auto act = random_block_action(rng, pres);
    const Rat direct = graded_trace(pres, act);
    const Rat lifted =
        alternating_trace_via_exterior(pres.degrees(), full_action_matrix(pres, act));
    CHECK(direct == lifted);
  }
}

TEST_CASE("zeta series") {
  // all-zero d gives the constant series 1
  const RatSeries flat = zeta_series(std::vector<Rat>(4, Rat(0)), 4);
  CHECK(flat.coeff(0) == 1);
  for (std::size_t k = 1; k <= 4; ++k) CHECK(flat.coeff(k) == 0);

  // order 1 with d_1 = 9
  const RatSeries linear = zeta_series({Rat(9)}, 1);
  CHECK(linear.coeff(0) == 1);
  CHECK(linear.coeff(1) == 9);

  // doubling on G_m: d_n = 1 - 2^n, and exp(sum d_n t^n / n) = (1-2t)/(1-t);
  // expand the rational function independently as the oracle
  const auto pres = presentation(torus(1));
  const auto d = d_sequence(pres, scalar_on(pres, Rat(2)), 8);
  const RatSeries zeta = zeta_series(d, 8);
  RatSeries denominator(8);
  denominator.coeff(0) = 1;
  denominator.coeff(1) = -1;  // 1 - t
  RatSeries numerator(8);
  numerator.coeff(0) = 1;
  numerator.coeff(1) = -2;  // 1 - 2t
  const RatSeries expected = numerator * denominator.inverse();
  CHECK(zeta == expected);

  CHECK_THROWS_AS(zeta_series({Rat(1)}, 2), Error);  // order beyond the sequence
}

TEST_CASE("lefschetz point counts on the building blocks") {
  CHECK(lefschetz_point_count(torus(1), Int(5)).value == 4);
  CHECK(lefschetz_point_count(trivial_group(), Int(7)).value == 1);
  CHECK(lefschetz_point_count(unipotent(3), Int(2)).value == 8);
  CHECK(lefschetz_point_count(gl_group(2), Int(3)).value == 48);
  CHECK(lefschetz_point_count(abelian(1, IntPoly({Int(5), Int(3), Int(1)})), Int(5)).value == 9);
  // isogenous groups have the same point count
  CHECK(lefschetz_point_count(pgl_group(2), Int(7)).value ==
        lefschetz_point_count(sl_group(2), Int(7)).value);
  // SL_2(F_q) has q^3 - q elements
  CHECK(lefschetz_point_count(sl_group(2), Int(7)).value == 336);
}

TEST_CASE("point count validation") {
  CHECK_THROWS_WITH_AS(lefschetz_point_count(abelian(1), Int(5)).value,
                       doctest::Contains("MissingCharPoly"), Error);
  // constant term must be q^g
  CHECK_THROWS_WITH_AS(
      lefschetz_point_count(abelian(1, IntPoly({Int(7), Int(3), Int(1)})), Int(5)).value,
      doctest::Contains("BadCharPolyConstantTerm"), Error);
  // composite field size
  CHECK_THROWS_AS(lefschetz_point_count(torus(1), Int(6)), Error);
  // Weil functional equation violations warn but do not fail
  const IntPoly off_symmetric({Int(25), Int(1), Int(1), Int(1), Int(1)});
  const auto result = lefschetz_point_count(abelian(2, off_symmetric), Int(5));
  CHECK(result.value == off_symmetric.eval_at_one());
  CHECK_FALSE(result.warnings.empty());
}

TEST_CASE("block resolution failures") {
  const auto pres = presentation(gl_group(2));  // degrees 1, 3
  // uncovered generator
  EndomorphismAction partial;
  RatMatrix one(1, 1);
  one.at(0, 0) = 2;
  partial.blocks.push_back({{pres.generators[0].label}, one});
  CHECK_THROWS_WITH_AS(graded_trace(pres, partial), doctest::Contains("not covered"), Error);
  // mixed degrees in one block
  EndomorphismAction mixed;
  RatMatrix two(2, 2);
  mixed.blocks.push_back({{pres.generators[0].label, pres.generators[1].label}, two});
  CHECK_THROWS_WITH_AS(graded_trace(pres, mixed), doctest::Contains("mixes degrees"), Error);
  // wrong matrix size
  EndomorphismAction wrong;
  wrong.blocks.push_back({{pres.generators[0].label}, two});
  CHECK_THROWS_AS(graded_trace(pres, wrong), Error);
  // unknown label
  EndomorphismAction unknown;
  unknown.blocks.push_back({{"nope"}, one});
  CHECK_THROWS_AS(graded_trace(pres, unknown), Error);
}

TEST_CASE("frobenius d_1 equals the point count on proper parts") {
  // abelian variety: d_1 of Frobenius = charpoly at 1 = #A(F_q)
  const IntPoly cp({Int(7), Int(-2), Int(1)});
  const GroupExpr a = abelian(1, cp);
  const auto pres = presentation(a);
  const auto frob = frobenius_action(pres, Int(7));
  CHECK(graded_trace(pres, frob) == Rat(lefschetz_point_count(a, Int(7)).value));

  // linear part: point count = q^dim * graded trace of the inverse-weight action
  const GroupExpr g = gl_group(2);
  const auto gpres = presentation(g);
  EndomorphismAction inverse_weights;
  for (const auto& gen : gpres.generators) {
    const int d = std::get<LinearWeight>(gen.frobenius).d;
    RatMatrix m(1, 1);
    m.at(0, 0) = Rat(1) / Rat(int_pow(Int(3), static_cast<unsigned long>(d)));
    inverse_weights.blocks.push_back({{gen.label}, m});
  }
  const Rat trace = graded_trace(gpres, inverse_weights);
  CHECK(Rat(int_pow(Int(3), 4)) * trace == Rat(lefschetz_point_count(g, Int(3)).value));
}
