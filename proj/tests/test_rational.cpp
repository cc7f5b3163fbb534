#include <doctest.h>

#include "helpers.hpp"
#include "polygauss/rational.hpp"

using namespace polygauss;
using testing_support::rv;
using testing_support::thrown_code;

TEST_CASE("parse_rational accepts integers and reduced fractions") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("-2/3") == Rational(-2, 3));
  CHECK(parse_rational("5/1") == Rational(5));
  CHECK(parse_rational("0") == Rational(0));
}

TEST_CASE("parse_rational rejects malformed text") {
  for (const char* bad : {"", "abc", "1/", "/2", "4/6", "1/0", "1/-2", "1.5", "2/3x", " 1", "--1", "0/5"})
    CHECK_MESSAGE(thrown_code([&] { parse_rational(bad); }) == ErrorCode::MalformedInput, bad);
}

TEST_CASE("format_rational round-trips") {
  for (auto r : {Rational(0), Rational(5), Rational(-3, 7), Rational(10007, 3)})
    CHECK(parse_rational(format_rational(r)) == r);
  CHECK(format_rational(Rational(-1, 2)) == "-1/2");
  CHECK(format_rational(Rational(4)) == "4");
}

TEST_CASE("floor and ceil round toward -inf and +inf") {
  CHECK(floor(Rational(7, 3)) == 2);
  CHECK(ceil(Rational(7, 3)) == 3);
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(-1, 2)) == 0);
  CHECK(floor(Rational(-4)) == -4);
  CHECK(ceil(Rational(-4)) == -4);
}

TEST_CASE("vector arithmetic and lexicographic order") {
  const auto a = rv({1, 2, 3});
  const RationalVector b{Rational(1, 2), Rational(0), Rational(-1)};
  CHECK(a + b == RationalVector{Rational(3, 2), Rational(2), Rational(2)});
  CHECK(a - a == RationalVector::zero(3));
  CHECK(Rational(2) * b == RationalVector{Rational(1), Rational(0), Rational(-2)});
  CHECK(-b == RationalVector{Rational(-1, 2), Rational(0), Rational(1)});
  CHECK(dot(a, b) == Rational(-5, 2));
  CHECK(squared_norm(a) == Rational(14));
  CHECK(b < a);
  CHECK_FALSE(a < a);
  CHECK(a.is_integral());
  CHECK_FALSE(b.is_integral());
  CHECK(a.to_integers() == std::vector<std::int64_t>{1, 2, 3});
  CHECK(thrown_code([&] { b.to_integers(); }) == ErrorCode::InvariantViolation);
}

TEST_CASE("rank, affine dimension, determinant") {
  CHECK(rank({rv({1, 0, 0}), rv({0, 1, 0}), rv({1, 1, 0})}) == 2);
  CHECK(rank({}) == 0);
  const std::vector<RationalVector> collinear{rv({0, 0, 0}), rv({1, 1, 1}), rv({2, 2, 2})};
  CHECK(affine_dimension(collinear) == 1);
  const std::vector<RationalVector> one{rv({4, 4})};
  CHECK(affine_dimension(one) == 0);
  CHECK(affine_dimension(std::span<const RationalVector>{}) == -1);
  CHECK(determinant({rv({1, 0, 0}), rv({1, 1, 0}), rv({1, 1, 1})}) == Rational(1));
  CHECK(determinant({rv({0, 1}), rv({1, 0})}) == Rational(-1));
  CHECK(determinant({rv({1, 2}), rv({2, 4})}) == Rational(0));
}

TEST_CASE("determinant agrees with the cofactor expansion on random integer matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = oracle::random_tet(rng, 4);
    const auto a = oracle::diff(t[1], t[0]), b = oracle::diff(t[2], t[0]), c = oracle::diff(t[3], t[0]);
    const auto d = determinant({rv({a[0], a[1], a[2]}), rv({b[0], b[1], b[2]}), rv({c[0], c[1], c[2]})});
    CHECK(d == Rational(oracle::det3(a, b, c)));
  }
}
