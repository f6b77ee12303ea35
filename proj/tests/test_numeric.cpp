#include <doctest.h>

#include <random>

#include "gvc/matrix.hpp"
#include "gvc/numeric.hpp"
#include "gvc/polynomial.hpp"

using namespace gvc;

TEST_CASE("integer polynomial basics") {
  const IntPoly p({Int(5), Int(3), Int(1)});  // t^2 + 3t + 5
  CHECK(p.degree() == 2);
  CHECK(p.is_monic());
  CHECK(p.eval_at_one() == 9);
  CHECK(p.eval(Int(2)) == 15);
  CHECK(p.str() == "t^2+3t+5");
  CHECK(IntPoly({Int(1), Int(0), Int(0), Int(-1)}).str() == "-t^3+1");
  CHECK(IntPoly().str() == "0");
  CHECK(IntPoly({Int(0)}).is_zero());

  const IntPoly q = IntPoly::monomial(1, 1) + IntPoly::constant(1);  // t + 1
  CHECK((q * q).str() == "t^2+2t+1");
  CHECK((q - q).is_zero());
}

TEST_CASE("series inverse and exp") {
  // 1/(1 - t) is the all-ones series
  RatSeries one_minus_t(6);
  one_minus_t.coeff(0) = 1;
  one_minus_t.coeff(1) = -1;
  const RatSeries geometric = one_minus_t.inverse();
  for (std::size_t k = 0; k <= 6; ++k) CHECK(geometric.coeff(k) == 1);
  // inverse is two-sided
  CHECK((geometric * one_minus_t).coeff(0) == 1);
  for (std::size_t k = 1; k <= 6; ++k) CHECK((geometric * one_minus_t).coeff(k) == 0);

  // exp(log(1/(1-t))) recovers the geometric series: log has coeffs 1/n
  RatSeries log_series(6);
  for (std::size_t n = 1; n <= 6; ++n) log_series.coeff(n) = Rat(1, static_cast<unsigned long>(n));
  const RatSeries expd = log_series.exp();
  for (std::size_t k = 0; k <= 6; ++k) CHECK(expd.coeff(k) == 1);

  CHECK_THROWS_AS(RatSeries(3).inverse(), Error);  // zero constant term
}

TEST_CASE("companion matrix and det(I - M)") {
  const IntPoly f({Int(5), Int(3), Int(1)});
  const RatMatrix c = RatMatrix::companion(f);
  CHECK(c.rows() == 2);
  // det(I - companion(f)) = f(1)
  CHECK((RatMatrix::identity(2) - c).det() == Rat(9));

  // same identity on a degree-4 poly
  const IntPoly g({Int(7), Int(-2), Int(0), Int(4), Int(1)});
  const RatMatrix cg = RatMatrix::companion(g);
  CHECK((RatMatrix::identity(4) - cg).det() == Rat(g.eval_at_one()));

  CHECK_THROWS_AS(RatMatrix::companion(IntPoly({Int(1), Int(2)})), Error);  // not monic
}

TEST_CASE("newton-identity charpoly agrees with direct determinants") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rat(static_cast<long>(rng() % 7) - 3);
    const IntPoly p = det_identity_minus_t(m);
    // evaluate at several integer points against a direct determinant
    for (long t0 : {0L, 1L, 2L, -1L}) {
      RatMatrix shifted = RatMatrix::identity(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) shifted.at(i, j) -= Rat(t0) * m.at(i, j);
      CHECK(shifted.det() == Rat(p.eval(Int(t0))));
    }
  }
}

TEST_CASE("rank, nullspace, solve") {
  RatMatrix m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(0, 2) = 3;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  m.at(1, 2) = 6;
  CHECK(m.rank() == 1);
  const auto kernel = m.nullspace();
  REQUIRE(kernel.size() == 2);
  for (const auto& v : kernel) {
    const auto image = m.apply(v);
    for (const auto& c : image) CHECK(c == 0);
  }

  std::vector<Rat> x;
  CHECK(m.solve({Rat(6), Rat(12)}, x));
  CHECK(m.apply(x) == std::vector<Rat>{Rat(6), Rat(12)});
  CHECK_FALSE(m.solve({Rat(1), Rat(0)}, x));  // inconsistent

  // powers
  RatMatrix doubling(1, 1);
  doubling.at(0, 0) = 2;
  CHECK(doubling.pow(Int(10)).at(0, 0) == Rat(1024));
  CHECK(doubling.pow(Int(0)).at(0, 0) == Rat(1));
}

TEST_CASE("rational helpers") {
  Rat half(3, 6);
  half.canonicalize();
  CHECK(to_string(half) == "1/2");
  Rat negtwo(-4, 2);
  negtwo.canonicalize();
  CHECK(to_string(negtwo) == "-2");
  CHECK(to_string(Rat(7)) == "7");
  CHECK(is_prime(Int(101)));
  CHECK_FALSE(is_prime(Int(100)));
  CHECK(rat_pow(Rat(2, 3), 3) == Rat(8, 27));
  CHECK(int_pow(Int(7), 0) == 1);
}
