#include <doctest.h>

#include "gvc/enumeration.hpp"
#include "gvc/prime_field.hpp"
#include "gvc/weyl.hpp"

using namespace gvc;

TEST_CASE("prime field arithmetic") {
  const PrimeField f5(5);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.inv(2) == 3);
  CHECK(f5.pow(2, 4) == 1);
  CHECK(f5.is_square(4));
  CHECK_FALSE(f5.is_square(2));
  CHECK(f5.is_square(0));
  CHECK_THROWS_AS(PrimeField(6), Error);
  CHECK_THROWS_AS(PrimeField(103), Error);
  CHECK_THROWS_AS(f5.inv(0), Error);
}

TEST_CASE("matrix group counts") {
  CHECK(enumerate_gl(1, 5) == 4);
  CHECK(enumerate_gl(2, 2) == 6);
  CHECK(enumerate_gl(2, 3) == 48);
  CHECK(enumerate_sl(2, 3) == 24);
  CHECK(enumerate_sl(2, 3) * (3 - 1) == enumerate_gl(2, 3));
  CHECK(enumerate_gl(3, 2) == 168);  // |GL_3(F_2)| = (8-1)(8-2)(8-4)
}

TEST_CASE("parallel scans match the serial reference") {
  for (unsigned p : {2u, 3u, 5u}) {
    CHECK(enumerate_gl(2, p) == enumerate_gl_serial(2, p));
    CHECK(enumerate_sl(2, p) == enumerate_sl_serial(2, p));
  }
  CHECK(enumerate_gl(3, 3) == enumerate_gl_serial(3, 3));
  CHECK(enumerate_sl(3, 2) == enumerate_sl_serial(3, 2));
}

TEST_CASE("budget enforcement") {
  CHECK_THROWS_WITH_AS(enumerate_gl(3, 7), doctest::Contains("budget"), Error);  // 7^9 > 10^7
  EnumerationBudget tiny{100};
  CHECK_THROWS_AS(enumerate_gl(2, 7, tiny), Error);
  CHECK(enumerate_gl(1, 7, tiny) == 6);
}

TEST_CASE("torus tuple counts") {
  for (unsigned p : {3u, 5u})
    for (int k = 0; k <= 4; ++k)
      CHECK(enumerate_torus_tuples(k, p) == int_pow(Int(p - 1), static_cast<unsigned long>(k)));
}

TEST_CASE("elliptic curve enumeration") {
  // y^2 = x^3 + x + 1 over F_5: squares are {0,1,4}; x = 0..4 gives
  // rhs 1,3,1,1,4 -> 2+0+2+2+2 affine points, plus infinity
  const auto curve = enumerate_elliptic(1, 1, 5);
  CHECK(curve.count == 9);
  CHECK(curve.trace == -3);
  CHECK(curve.charpoly.str() == "t^2+3t+5");

  // y^2 = x^3 + 1 over F_5: rhs 1,2,4,3,0 -> 2+0+2+0+1 affine, plus infinity
  const auto second = enumerate_elliptic(0, 1, 5);
  CHECK(second.count == 6);
  CHECK(second.trace == 0);

  CHECK_THROWS_WITH_AS(enumerate_elliptic(0, 0, 5), doctest::Contains("singular"), Error);
  CHECK_THROWS_AS(enumerate_elliptic(1, 1, 3), Error);  // needs p > 3

  // Hasse bound holds across a grid (checked internally, count stays near p+1)
  for (unsigned p : {5u, 7u, 11u, 13u, 17u, 101u})
    for (long a = 0; a <= 3; ++a)
      for (long b = 0; b <= 3; ++b) {
        try {
          const auto data = enumerate_elliptic(a, b, p);
          CHECK(data.trace * data.trace <= 4 * static_cast<long>(p));
          CHECK(data.charpoly.eval_at_one() == data.count);
        } catch (const Error& e) {
          CHECK(e.code() == "SingularCurve");
        }
      }
}

TEST_CASE("weyl group realizations have the right orders") {
  CHECK(realize_weyl_group(make_dynkin(DynkinFamily::A, 2)).order() == 6);
  CHECK(realize_weyl_group(make_dynkin(DynkinFamily::A, 3)).order() == 24);
  CHECK(realize_weyl_group(make_dynkin(DynkinFamily::B, 2)).order() == 8);
  CHECK(realize_weyl_group(make_dynkin(DynkinFamily::B, 3)).order() == 48);
  CHECK(realize_weyl_group(make_dynkin(DynkinFamily::D, 4)).order() == 192);
  CHECK(realize_weyl_group(make_dynkin(DynkinFamily::G2)).order() == 12);
  CHECK(realize_weyl_group(make_dynkin(DynkinFamily::F4)).order() == 1152);
  // beyond the enumeration bound
  CHECK_THROWS_WITH_AS(realize_weyl_group(make_dynkin(DynkinFamily::A, 7), 20000),
                       doctest::Contains("bound"), Error);
}

TEST_CASE("molien series recovers the invariant degrees") {
  CHECK(molien_degrees(make_dynkin(DynkinFamily::A, 1)) == std::vector<int>{2});
  CHECK(molien_degrees(make_dynkin(DynkinFamily::A, 2)) == std::vector<int>{2, 3});
  CHECK(molien_degrees(make_dynkin(DynkinFamily::B, 2)) == std::vector<int>{2, 4});
  CHECK(molien_degrees(make_dynkin(DynkinFamily::G2)) == std::vector<int>{2, 6});
  CHECK(molien_degrees(make_dynkin(DynkinFamily::D, 4)) == std::vector<int>{2, 4, 4, 6});
  CHECK(molien_degrees(make_dynkin(DynkinFamily::A, 2)) ==
        invariant_degrees(make_dynkin(DynkinFamily::A, 2)));
}

TEST_CASE("parallel molien summation matches the serial reference") {
  for (const DynkinType type : {make_dynkin(DynkinFamily::B, 3), make_dynkin(DynkinFamily::G2),
                                make_dynkin(DynkinFamily::F4)}) {
    const auto w = realize_weyl_group(type);
    const auto serial = molien_series_serial(w, 25);
    const auto parallel = molien_series(w, 25);
    CHECK(serial == parallel);
  }
}

TEST_CASE("root enumeration by reflection closure") {
  CHECK(enumerate_roots(make_dynkin(DynkinFamily::A, 1)) == 2);
  CHECK(enumerate_roots(make_dynkin(DynkinFamily::A, 2)) == 6);
  CHECK(enumerate_roots(make_dynkin(DynkinFamily::B, 2)) == 8);
  CHECK(enumerate_roots(make_dynkin(DynkinFamily::C, 3)) == 18);
  CHECK(enumerate_roots(make_dynkin(DynkinFamily::D, 4)) == 24);
  CHECK(enumerate_roots(make_dynkin(DynkinFamily::G2)) == 12);
  CHECK(enumerate_roots(make_dynkin(DynkinFamily::F4)) == 48);
  CHECK(enumerate_roots(make_dynkin(DynkinFamily::E6)) == 72);
  CHECK(enumerate_roots(make_dynkin(DynkinFamily::E7)) == 126);
  CHECK(enumerate_roots(make_dynkin(DynkinFamily::E8)) == 240);
}
