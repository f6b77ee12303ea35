#include <doctest.h>

#include <random>

#include "gvc/group_expr.hpp"
#include "gvc/verification.hpp"
#include "gvc/weyl.hpp"

using namespace gvc;

TEST_CASE("validation accepts and rejects the right structures") {
  CHECK(validate(torus(0)).empty());
  CHECK(validate(unipotent(0)).empty());
  CHECK(validate(abelian(1, IntPoly({Int(5), Int(3), Int(1)}))).empty());

  // C_2 is rejected with a hint towards B_2
  const auto c2 = validate(simple_group(make_dynkin(DynkinFamily::C, 2)));
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].code == "RankOutOfRange");
  CHECK(c2[0].message.find("B_2") != std::string::npos);

  // charpoly of wrong degree: t^3 + 1 on a 1-dimensional abelian variety
  const auto bad = validate(abelian(1, IntPoly({Int(1), Int(0), Int(0), Int(1)})));
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].code == "BadCharPolyDegree");

  // the error names the offending node path
  const auto nested = validate(extension(torus(1), simple_group(make_dynkin(DynkinFamily::D, 3))));
  REQUIRE(nested.size() == 1);
  CHECK(nested[0].path == "ext.q");

  CHECK(validate(simple_group(make_dynkin(DynkinFamily::B, 1))).size() == 1);
  CHECK(validate(simple_group(make_dynkin(DynkinFamily::D, 2))).size() == 1);
  CHECK(validate(product({})).size() == 1);
}

TEST_CASE("normalize strips isogenies and flattens products") {
  CHECK(structurally_equal(normalize(isogenous(torus(2))), torus(2)));
  CHECK(structurally_equal(normalize(product({torus(1), unipotent(1)})),
                           extension(torus(1), unipotent(1))));
  // recursive strip
  CHECK(structurally_equal(normalize(isogenous(extension(torus(1), isogenous(unipotent(2))))),
                           extension(torus(1), unipotent(2))));
  // left-associated flattening
  CHECK(structurally_equal(normalize(product({torus(1), torus(2), torus(3)})),
                           extension(extension(torus(1), torus(2)), torus(3))));
}

namespace {

bool has_isog_or_product(const GroupExpr& e) {
  return std::visit(
      [](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Product> || std::is_same_v<T, Isogenous>) {
          return true;
        } else if constexpr (std::is_same_v<T, Extension>) {
          return has_isog_or_product(*node.normal) || has_isog_or_product(*node.quotient);
        } else {
          return false;
        }
      },
      e.node());
}

}  // namespace

TEST_CASE("normalize is idempotent and preserves dimension") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const GroupExpr e = random_extension_tree(rng, 4, 12);
    const GroupExpr n = normalize(e);
    CHECK_FALSE(has_isog_or_product(n));
    CHECK(structurally_equal(normalize(n), n));
    CHECK(dim(n) == dim(e));
  }
}

TEST_CASE("dimension of the building blocks") {
  CHECK(dim(gl_group(3)) == 9);
  CHECK(dim(simple_group(make_dynkin(DynkinFamily::E8))) == 248);
  CHECK(dim(extension(unipotent(2), abelian(3))) == 5);
  CHECK(dim(trivial_group()) == 0);
  CHECK(dim(simple_group(make_dynkin(DynkinFamily::A, 1))) == 3);
  CHECK(dim(simple_group(make_dynkin(DynkinFamily::G2))) == 14);

  // additivity over extensions
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const GroupExpr a = random_extension_tree(rng, 3, 8);
    const GroupExpr b = random_extension_tree(rng, 3, 8);
    CHECK(dim(extension(a, b)) == dim(a) + dim(b));
  }
}

TEST_CASE("degree-sum identity against root enumeration") {
  // dim = sum(2d - 1) must equal rank + #roots, both computed independently
  for (const DynkinType type : {make_dynkin(DynkinFamily::A, 2), make_dynkin(DynkinFamily::B, 3),
                                make_dynkin(DynkinFamily::C, 3), make_dynkin(DynkinFamily::D, 4),
                                make_dynkin(DynkinFamily::G2), make_dynkin(DynkinFamily::F4)}) {
    CHECK(dynkin_dimension(type) ==
          type.rank + static_cast<std::int64_t>(enumerate_roots(type)));
  }
}

TEST_CASE("builtins expand per the structural conventions") {
  CHECK(structurally_equal(gl_group(1), torus(1)));
  CHECK(structurally_equal(sl_group(1), trivial_group()));
  CHECK(structurally_equal(gl_group(2),
                           extension(simple_group(make_dynkin(DynkinFamily::A, 1)), torus(1))));
  CHECK(structurally_equal(pgl_group(3),
                           isogenous(simple_group(make_dynkin(DynkinFamily::A, 2)))));
  CHECK_THROWS_AS(gl_group(0), Error);
}

TEST_CASE("pretty printing") {
  CHECK(pretty_print(extension(torus(2), abelian(1, IntPoly({Int(5), Int(3), Int(1)})))) ==
        "ext(torus(2), abelian(1; t^2+3t+5))");
  CHECK(pretty_print(product({trivial_group(), unipotent(3)})) == "prod(trivial, Ga(3))");
  CHECK(pretty_print(isogenous(simple_group(make_dynkin(DynkinFamily::E7)))) ==
        "isog(simple(E7))");
}
