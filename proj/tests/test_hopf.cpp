#include <doctest.h>

#include "gvc/hopf.hpp"
#include "gvc/verification.hpp"

using namespace gvc;

TEST_CASE("exterior algebra on one generator") {
  const auto h = exterior_hopf({1});
  CHECK(h.dim() == 2);
  CHECK(h.unit == 0);
  CHECK(h.degree(1) == 1);
  // Delta(x) = x (x) 1 + 1 (x) x
  const SparsePairVec expected{{{pair_key(0, 1), Rat(1)}, {pair_key(1, 0), Rat(1)}}};
  CHECK(h.coproduct[1] == expected);
  CHECK(verify_axioms_serial(h).ok);
}

TEST_CASE("coproduct of a wedge of two degree-1 generators") {
  const auto h = exterior_hopf({1, 1});
  // Delta(x^y) = x^y (x) 1 + x (x) y - y (x) x + 1 (x) x^y
  const SparsePairVec expected{{{pair_key(0, 3), Rat(1)},
                                {pair_key(1, 2), Rat(1)},
                                {pair_key(2, 1), Rat(-1)},
                                {pair_key(3, 0), Rat(1)}}};
  CHECK(h.coproduct[3] == expected);
  CHECK(verify_axioms(h).ok);
}

TEST_CASE("exterior algebra of GL(2) type") {
  const auto h = exterior_hopf({1, 3});
  CHECK(h.dim() == 4);
  // Betti numbers 1,1,0,1,1 by subset enumeration
  const auto groups = h.by_degree();
  CHECK(groups[0].size() == 1);
  CHECK(groups[1].size() == 1);
  CHECK(groups[2].size() == 0);
  CHECK(groups[3].size() == 1);
  CHECK(groups[4].size() == 1);
  CHECK(verify_axioms(h).ok);

  // wedge anticommutes in odd degrees
  CHECK(h.mul(1, 2) == SparseVec{{{3, Rat(1)}}});
  CHECK(h.mul(2, 1) == SparseVec{{{3, Rat(-1)}}});
  CHECK(h.mul(1, 1).is_zero());
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(exterior_hopf({2}), Error);                      // even degree
  CHECK_THROWS_AS(exterior_hopf({-1}), Error);                     // negative
  CHECK_THROWS_AS(exterior_hopf(std::vector<int>(13, 1)), Error);  // over the 2^12 cap
  HopfLimits tight{8};
  CHECK_THROWS_AS(exterior_hopf({1, 1, 1, 1}, tight), Error);
  CHECK_NOTHROW(exterior_hopf({1, 1, 1}, tight));
}

TEST_CASE("primitives of exterior algebras are the generators") {
  const auto h = exterior_hopf({1, 3});
  const auto prim = primitives(h);
  REQUIRE(prim.vectors.size() == 2);
  CHECK(prim.vectors[0].degree == 1);
  CHECK(prim.vectors[0].coords == SparseVec{{{1, Rat(1)}}});
  CHECK(prim.vectors[1].degree == 3);
  CHECK(prim.vectors[1].coords == SparseVec{{{2, Rat(1)}}});

  // trivial Hopf algebra has no primitives
  CHECK(primitives(exterior_hopf({})).vectors.empty());

  // tensor of two lines has both generators primitive
  const auto t = hopf_tensor(exterior_hopf({1}), exterior_hopf({1}));
  const auto tp = primitives(t);
  REQUIRE(tp.vectors.size() == 2);
  CHECK(tp.vectors[0].degree == 1);
  CHECK(tp.vectors[1].degree == 1);
}

TEST_CASE("tensor product of exterior algebras is the joint exterior algebra") {
  const auto a = exterior_hopf({1});
  const auto b = exterior_hopf({3});
  const auto t = hopf_tensor(a, b);
  const auto e = exterior_hopf({1, 3});
  REQUIRE(t.dim() == 4);
  CHECK(verify_axioms(t).ok);
  CHECK(t.dim() == a.dim() * b.dim());

  // basis bijection (i, j) -> mask i | (j << 1); structure constants match
  auto map = [&](BasisIndex idx) {
    const BasisIndex i = idx / 2, j = idx % 2;
    return static_cast<BasisIndex>(i | (j << 1));
  };
  for (BasisIndex x = 0; x < 4; ++x) {
    CHECK(t.degree(x) == e.degree(map(x)));
    for (BasisIndex y = 0; y < 4; ++y) {
      const SparseVec lhs = t.mul(x, y);
      const SparseVec rhs = e.mul(map(x), map(y));
      SparseVec mapped;
      for (const auto& [k, c] : lhs.terms) mapped.terms.push_back({map(k), c});
      std::sort(mapped.terms.begin(), mapped.terms.end(),
                [](const auto& p, const auto& q) { return p.first < q.first; });
      CHECK(mapped == rhs);
    }
    // coproducts match under the same bijection
    SparsePairVec mapped;
    for (const auto& [k, c] : t.coproduct[x].terms)
      mapped.terms.push_back(
          {pair_key(map(static_cast<BasisIndex>(k >> 32)), map(static_cast<BasisIndex>(k))), c});
    std::sort(mapped.terms.begin(), mapped.terms.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    CHECK(mapped == e.coproduct[map(x)]);
  }

  // A (x) trivial recovers A
  const auto at = hopf_tensor(a, exterior_hopf({}));
  CHECK(at.dim() == a.dim());
  CHECK(verify_axioms(at).ok);
}

TEST_CASE("hopf theorem verification") {
  CHECK(verify_hopf_theorem(exterior_hopf({1, 3})).iso);
  CHECK(verify_hopf_theorem(exterior_hopf({1, 1, 5})).iso);
  CHECK(verify_hopf_theorem(hopf_tensor(exterior_hopf({1, 3}), exterior_hopf({5}))).iso);
  CHECK(verify_hopf_theorem(exterior_hopf({})).iso);

  // corrupted coproduct: declaring the top wedge primitive breaks both the
  // axioms and the exterior comparison, with a degree witness
  auto h = exterior_hopf({1, 3});
  h.coproduct[3] =
      SparsePairVec{{{pair_key(0, 3), Rat(1)}, {pair_key(3, 0), Rat(1)}}};
  CHECK_FALSE(verify_axioms(h).ok);
  const auto report = verify_hopf_theorem(h);
  CHECK_FALSE(report.iso);
  CHECK(report.failure.find("degree") != std::string::npos);
}

TEST_CASE("hopf morphism checking") {
  const auto n = exterior_hopf({1});
  const auto g = exterior_hopf({1, 3});
  const auto q = exterior_hopf({3});

  // generator-matching maps: iota* sends x -> x, y -> 0; pi* sends z -> y
  const HopfMorphism iota =
      exterior_extend(g, n, {SparseVec{{{1, Rat(1)}}}, SparseVec{}});
  const HopfMorphism pi = exterior_extend(q, g, {SparseVec{{{2, Rat(1)}}}});
  CHECK_NOTHROW(check_hopf_morphism(iota));
  CHECK_NOTHROW(check_hopf_morphism(pi));

  // a grading-breaking map is rejected
  HopfMorphism bad;
  bad.domain = &q;
  bad.codomain = &g;
  bad.matrix = RatMatrix(4, 2);
  bad.matrix.at(0, 0) = 1;
  bad.matrix.at(1, 1) = 1;  // degree 3 generator sent to degree 1
  CHECK_THROWS_AS(check_hopf_morphism(bad), Error);

  // a unit-breaking map is rejected
  HopfMorphism bad_unit;
  bad_unit.domain = &q;
  bad_unit.codomain = &g;
  bad_unit.matrix = RatMatrix(4, 2);
  bad_unit.matrix.at(0, 0) = 2;
  bad_unit.matrix.at(2, 1) = 1;
  CHECK_THROWS_AS(check_hopf_morphism(bad_unit), Error);
}

TEST_CASE("primitive exactness on the generator-matching triple") {
  const auto n = exterior_hopf({1});
  const auto g = exterior_hopf({1, 3});
  const auto q = exterior_hopf({3});
  const HopfMorphism iota =
      exterior_extend(g, n, {SparseVec{{{1, Rat(1)}}}, SparseVec{}});
  const HopfMorphism pi = exterior_extend(q, g, {SparseVec{{{2, Rat(1)}}}});
  const auto report = check_primitive_exactness(iota, pi);
  CHECK(report.injective);
  CHECK(report.surjective);
  CHECK(report.middle_exact);
  CHECK(report.exact);
  CHECK(report.iso_verified);
}

TEST_CASE("primitive exactness on the canonical split triple") {
  const auto n = exterior_hopf({1, 1});
  const auto q = exterior_hopf({3});
  const auto g = hopf_tensor(n, q);
  const auto report = check_primitive_exactness(tensor_projection_first(g, n, q),
                                                tensor_inclusion_second(g, n, q));
  CHECK(report.exact);
  CHECK(report.iso_verified);
}

TEST_CASE("exactness negative control: pi* killing the generator") {
  const auto n = exterior_hopf({1});
  const auto q = exterior_hopf({3});
  const auto g = hopf_tensor(n, q);
  const HopfMorphism iota = tensor_projection_first(g, n, q);
  const HopfMorphism pi_zero = exterior_extend(q, g, {SparseVec{}});
  const auto report = check_primitive_exactness(iota, pi_zero);
  CHECK_FALSE(report.injective);
  CHECK_FALSE(report.exact);
  CHECK_FALSE(report.iso_verified);  // no isomorphism attempted
}

TEST_CASE("parallel axiom sweep agrees with the serial reference") {
  const auto h = hopf_tensor(exterior_hopf({1, 3, 5}), exterior_hopf({1, 7}));
  const auto serial = verify_axioms_serial(h);
  const auto parallel = verify_axioms(h);
  CHECK(serial.ok == parallel.ok);
  CHECK(serial.failure == parallel.failure);

  auto corrupted = exterior_hopf({1, 1, 3});
  corrupted.product[pair_key(1, 2)] = SparseVec{{{3, Rat(2)}}};  // breaks commutativity
  const auto serial_bad = verify_axioms_serial(corrupted);
  const auto parallel_bad = verify_axioms(corrupted);
  CHECK_FALSE(serial_bad.ok);
  CHECK_FALSE(parallel_bad.ok);
  CHECK(serial_bad.failure == parallel_bad.failure);
}

TEST_CASE("kunneth primitive additivity per degree") {
  const auto a = exterior_hopf({1, 3, 3});
  const auto b = exterior_hopf({1, 5});
  const auto t = hopf_tensor(a, b);
  auto count = [](const PrimitiveBasis& p, int d) {
    std::size_t c = 0;
    for (const auto& v : p.vectors) c += (v.degree == d);
    return c;
  };
  const auto pa = primitives(a), pb = primitives(b), pt = primitives(t);
  for (int d = 1; d <= 5; ++d) CHECK(count(pt, d) == count(pa, d) + count(pb, d));
}
