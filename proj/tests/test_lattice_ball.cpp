#include "doctest.h"
#include "mqt/ball.hpp"
#include "mqt/lattice.hpp"

using namespace mqt;

TEST_CASE("hermite normal form") {
  ZMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto r = hermite_rows(m);
  CHECK(r == 3);
  // Lower rows are zero left of the pivot and the pivots are positive.
  CHECK(m[1][0] == 0);
  CHECK(m[2][0] == 0);
  CHECK(m[2][1] == 0);
  CHECK(m[0][0] > 0);
  // |det| is preserved: det of the original is 2*(6*-16 - 12*-4) - 4*(-6*-16 - 12*10) + 4*(-6*-4 - 6*10).
  mpz_class want = 2 * (6 * -16 - 12 * -4) - 4 * (-6 * -16 - 12 * 10) + 4 * (-6 * -4 - 6 * 10);
  CHECK(m[0][0] * m[1][1] * m[2][2] == abs(want));
}

TEST_CASE("rank deficient rows") {
  ZMatrix m{{1, 2}, {2, 4}, {3, 6}};
  CHECK(hermite_rows(m) == 1);
  CHECK(m[1] == std::vector<mpz_class>{0, 0});
}

TEST_CASE("determinant and solve") {
  QMatrix a{{2, 1}, {1, 3}};
  CHECK(determinant(a) == 5);
  auto x = solve_left(a, {5, 10});
  REQUIRE(x);
  // x * A = b
  CHECK((*x)[0] * 2 + (*x)[1] * 1 == 5);
  CHECK((*x)[0] * 1 + (*x)[1] * 3 == 10);
  CHECK_FALSE(solve_left(QMatrix{{1, 2}, {2, 4}}, {1, 1}).has_value());
}

TEST_CASE("same lattice") {
  QMatrix a{{1, 0}, {0, 1}};
  QMatrix b{{1, 1}, {0, 1}};
  QMatrix c{{2, 0}, {0, 1}};
  CHECK(same_lattice(a, b));
  CHECK_FALSE(same_lattice(a, c));
  QMatrix h{{mpq_class(1, 2), 0}, {0, 1}};
  CHECK_FALSE(same_lattice(a, h));
  CHECK(same_lattice(h, QMatrix{{mpq_class(1, 2), 1}, {0, 1}}));
}

TEST_CASE("balls contain exact values") {
  Ball two(mpz_class(2), 128);
  auto r = Ball::sqrt_of(2, 128);
  auto sq = r * r - two;
  CHECK(sq.contains_zero());
  CHECK(r.inside(1.4142135, 1.4142136));
  auto l = Ball(mpz_class(8), 128).log() / Ball(mpz_class(2), 128).log();
  CHECK(l.inside(2.9999999, 3.0000001));
  CHECK_THROWS(Ball(mpz_class(-1), 64).log());
  CHECK(precision_ladder().front() == 128);
  CHECK(precision_ladder(300).front() >= 300);
}

TEST_CASE("ball determinant") {
  std::vector<std::vector<Ball>> m{{Ball(mpz_class(2), 128), Ball(mpz_class(1), 128)},
                                   {Ball(mpz_class(1), 128), Ball(mpz_class(3), 128)}};
  CHECK(determinant(m).inside(4.999999, 5.000001));
}
