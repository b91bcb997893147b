#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qehrhart/linalg.hpp"
#include "qehrhart/lp.hpp"
#include "qehrhart/numbers.hpp"

using namespace qehrhart;

TEST_CASE("rational parsing accepts integers and fractions only") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7/2") == Rational(-7, 2));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("-0") == Rational(0));
  CHECK_THROWS(parse_rational("1.5"));
  CHECK_THROWS(parse_rational("2/0"));
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1/2/3"));
}

TEST_CASE("rational construction reduces and normalizes the sign") {
  Rational r = make_rational(Integer(6), Integer(-4));
  CHECK(r == Rational(-3, 2));
  CHECK(to_string(r) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(make_rational(Integer(1), Integer(0)), std::domain_error);
}

TEST_CASE("floor and ceiling of rationals") {
  CHECK(floor_int(Rational(7, 2)) == 3);
  CHECK(ceil_int(Rational(7, 2)) == 4);
  CHECK(floor_int(Rational(-7, 2)) == -4);
  CHECK(ceil_int(Rational(-7, 2)) == -3);
  CHECK(floor_int(Rational(5)) == 5);
  CHECK(ceil_int(Rational(5)) == 5);
}

TEST_CASE("integer helpers") {
  CHECK(gcd(Integer(12), Integer(18)) == 6);
  CHECK(lcm(Integer(4), Integer(6)) == 12);
  CHECK(binomial(Integer(10), 3) == 120);
  CHECK(binomial(Integer(4), 0) == 1);
  CHECK(binomial(Integer(3), 5) == 0);
  CHECK(pow_rational(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow_rational(Rational(5), 0) == Rational(1));
  Integer huge = 1;
  huge <<= 80;
  CHECK_THROWS_AS(to_long(huge), std::overflow_error);
}

TEST_CASE("matrix rank and determinant") {
  CHECK(determinant(RatMatrix::identity(3)) == 1);
  RatMatrix A(2, 2);
  A.rows[0] = {Rational(1), Rational(2)};
  A.rows[1] = {Rational(3), Rational(4)};
  CHECK(determinant(A) == Rational(-2));
  CHECK(rank(A) == 2);
  RatMatrix B(2, 2);
  B.rows[0] = {Rational(1), Rational(2)};
  B.rows[1] = {Rational(2), Rational(4)};
  CHECK(determinant(B) == 0);
  CHECK(rank(B) == 1);
}

TEST_CASE("exact linear solve") {
  RatMatrix A(2, 2);
  A.rows[0] = {Rational(2), Rational(1)};
  A.rows[1] = {Rational(1), Rational(3)};
  auto x = solve_exact(A, {Rational(5), Rational(10)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(1));
  CHECK((*x)[1] == Rational(3));

  RatMatrix tall(3, 2);
  tall.rows[0] = {Rational(1), Rational(0)};
  tall.rows[1] = {Rational(0), Rational(1)};
  tall.rows[2] = {Rational(1), Rational(1)};
  CHECK(solve_exact(tall, {Rational(1), Rational(2), Rational(3)}).has_value());
  CHECK_FALSE(solve_exact(tall, {Rational(1), Rational(2), Rational(4)}).has_value());
}

TEST_CASE("kernel vector of a rank deficient matrix") {
  RatMatrix A(1, 3);
  A.rows[0] = {Rational(1), Rational(1), Rational(1)};
  RatVector k = kernel_vector(A);
  CHECK(dot(A.rows[0], k) == 0);
  bool nonzero = false;
  for (const auto& c : k) nonzero = nonzero || c != 0;
  CHECK(nonzero);
  CHECK_THROWS(kernel_vector(RatMatrix::identity(2)));
}

TEST_CASE("primitive integer direction") {
  CHECK(primitive({Integer(2), Integer(4), Integer(-6)}) ==
        IntVector{Integer(1), Integer(2), Integer(-3)});
  CHECK(primitive({Integer(-5)}) == IntVector{Integer(-1)});
  CHECK_THROWS(primitive({Integer(0), Integer(0)}));
}

TEST_CASE("lexicographic comparison") {
  CHECK(lex_less(RatVector{Rational(0), Rational(1)}, RatVector{Rational(1), Rational(0)}));
  CHECK_FALSE(lex_less(RatVector{Rational(1)}, RatVector{Rational(1)}));
  CHECK(lex_less(IntVector{Integer(1), Integer(2)}, IntVector{Integer(1), Integer(3)}));
}

TEST_CASE("denominator clearing") {
  RatVector v{Rational(1, 2), Rational(2, 3)};
  CHECK(denominator_lcm(v) == 6);
  CHECK(clear_denominators(v) == IntVector{Integer(3), Integer(4)});
  CHECK(to_rat_vector(IntVector{Integer(3), Integer(4)}) ==
        RatVector{Rational(3), Rational(4)});
}

TEST_CASE("feasibility of simple systems") {
  {
    LinearSystem sys(1);
    sys.mark_all_nonneg();
    sys.add({Rational(1)}, Rel::Eq, Rational(1));
    CHECK(lp_feasible(sys));
  }
  {
    LinearSystem sys(1);
    sys.mark_all_nonneg();
    sys.add({Rational(1)}, Rel::Eq, Rational(-1));
    CHECK_FALSE(lp_feasible(sys));
  }
  {
    LinearSystem sys(2);
    sys.add({Rational(1), Rational(1)}, Rel::LessEq, Rational(1));
    sys.add({Rational(1), Rational(1)}, Rel::GreaterEq, Rational(2));
    CHECK_FALSE(lp_feasible(sys));
  }
  {
    // Free variables may go negative.
    LinearSystem sys(1);
    sys.add({Rational(1)}, Rel::LessEq, Rational(-5));
    CHECK(lp_feasible(sys));
  }
}

TEST_CASE("feasible systems yield valid witnesses") {
  LinearSystem sys(3);
  sys.mark_all_nonneg();
  sys.add({Rational(1), Rational(1), Rational(1)}, Rel::Eq, Rational(1));
  sys.add({Rational(1), Rational(-1), Rational(0)}, Rel::GreaterEq, Rational(0));
  sys.add({Rational(0), Rational(1), Rational(2)}, Rel::LessEq, Rational(3, 2));
  LpResult res = lp_solve(sys);
  REQUIRE(res.feasible);
  REQUIRE(res.witness.size() == 3);
  for (const auto& w : res.witness) CHECK(w >= 0);
  CHECK(res.witness[0] + res.witness[1] + res.witness[2] == 1);
  CHECK(res.witness[0] - res.witness[1] >= 0);
  CHECK(res.witness[1] + 2 * res.witness[2] <= Rational(3, 2));
}

TEST_CASE("systems built around a random point are feasible") {
  std::mt19937 rng(20260814);
  std::uniform_int_distribution<int> coord(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    RatVector p(n);
    for (auto& c : p) c = Rational(coord(rng), den(rng));
    LinearSystem sys(n);
    for (int row = 0; row < 6; ++row) {
      RatVector a(n);
      for (auto& c : a) c = Rational(coord(rng));
      Rational value = dot(a, p);
      int kind = trial % 3;
      if (kind == 0) {
        sys.add(a, Rel::Eq, value);
      } else if (kind == 1) {
        sys.add(a, Rel::LessEq, value + Rational(row % 2));
      } else {
        sys.add(a, Rel::GreaterEq, value - Rational(row % 2));
      }
    }
    CHECK(lp_feasible(sys));
  }
}

TEST_CASE("enumeration box limit reads the default cap") {
  CHECK(enumeration_box_limit() == 10000000);
}
