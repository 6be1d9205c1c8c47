#include <doctest.h>

#include <cmath>

#include "peelkit/enclosure.hpp"
#include "peelkit/errors.hpp"
#include "peelkit/scalar.hpp"

using namespace peelkit;

TEST_CASE("scalar parse and format round-trip") {
  CHECK(parse_scalar("-3/4") == Scalar(-3, 4));
  CHECK(parse_scalar("5") == Scalar(5));
  CHECK(parse_scalar("6/8") == Scalar(3, 4));
  CHECK(format_scalar(Scalar(-3, 4)) == "-3/4");
  CHECK(format_scalar(Scalar(10, 2)) == "5");
  Scalar big("123456789012345678901234567890/98765432109876543210987");
  big.canonicalize();
  CHECK(parse_scalar(format_scalar(big)) == big);
}

TEST_CASE("scalar parse rejects malformed input") {
  CHECK_THROWS_AS(parse_scalar("1/0"), InputError);
  CHECK_THROWS_AS(parse_scalar("abc"), InputError);
  CHECK_THROWS_AS(parse_scalar(""), InputError);
  CHECK_THROWS_AS(parse_scalar("1.5"), InputError);
}

TEST_CASE("approximate decimals") {
  CHECK(approx_decimal(Scalar(1, 3), 4) == "0.3333");
  CHECK(approx_decimal(Scalar(-5, 2), 1) == "-2.5");
}

TEST_CASE("point arithmetic") {
  const Point a{Scalar(1), Scalar(2)};
  const Point b{Scalar(1, 2), Scalar(-1)};
  CHECK(dot(a, b) == Scalar(-3, 2));
  CHECK((a - b) == Point{Scalar(1, 2), Scalar(3)});
  CHECK(squared_norm(a) == 5);
}

TEST_CASE("root enclosures are sound and exact on perfect powers") {
  const Enclosure e = root_enclosure(mpz_class(2), 2, 40);
  CHECK(e.lo * e.lo <= 2);
  CHECK(e.hi * e.hi >= 2);
  CHECK(e.width() <= pow2(-40));
  const Enclosure exact = root_enclosure(mpz_class(125), 3, 40);
  CHECK(exact.exact());
  CHECK(exact.lo == 5);
}

TEST_CASE("power enclosures bracket the value") {
  // 6^(8/3): lo^3 <= 6^8 <= hi^3
  const Enclosure e = power_enclosure(6, mpq_class(8, 3), 48);
  mpq_class lo3 = e.lo * e.lo * e.lo;
  mpq_class hi3 = e.hi * e.hi * e.hi;
  CHECK(lo3 <= 1679616);
  CHECK(hi3 >= 1679616);
  CHECK(std::fabs(e.mid().get_d() - std::pow(6.0, 8.0 / 3.0)) < 1e-9);
  const Enclosure inv = power_enclosure(4, mpq_class(-3, 2), 32);
  CHECK(inv.exact());
  CHECK(inv.lo == Scalar(1, 8));
}

TEST_CASE("logarithm enclosures") {
  const Enclosure l2 = ln_enclosure(Scalar(2), 60);
  CHECK(l2.lo > Scalar("69314718055994530/100000000000000000"));
  CHECK(l2.hi < Scalar("69314718055994531/100000000000000000"));
  CHECK(l2.width() <= pow2(-50));
  const Enclosure l1 = ln_enclosure(Scalar(1), 60);
  CHECK(l1.contains(Scalar(0)));
  const Enclosure l9 = ln_enclosure(Scalar(9, 10), 60);
  CHECK(l9.hi < 0);
  CHECK(std::fabs(l9.mid().get_d() - std::log(0.9)) < 1e-12);
  CHECK_THROWS_AS(ln_enclosure(Scalar(0), 10), InputError);
}

TEST_CASE("enclosure arithmetic and comparison") {
  const Enclosure a = Enclosure::point(Scalar(1, 3));
  const Enclosure b{Scalar(1, 2), Scalar(1)};
  CHECK(certainly_compare(a, b) == -1);
  CHECK(certainly_compare(b, a) == 1);
  CHECK(certainly_compare(b, Enclosure{Scalar(3, 4), Scalar(2)}) == 0);
  const Enclosure p = a * b;
  CHECK(p.lo == Scalar(1, 6));
  CHECK(p.hi == Scalar(1, 3));
  const Enclosure r = round_outward(Enclosure::point(Scalar(1, 3)), 8);
  CHECK(r.lo <= Scalar(1, 3));
  CHECK(r.hi >= Scalar(1, 3));
}
