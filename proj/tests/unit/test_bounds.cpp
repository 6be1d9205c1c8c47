#include <doctest.h>

#include <cmath>

#include "peelkit/bounds.hpp"
#include "peelkit/defense.hpp"
#include "peelkit/errors.hpp"

using namespace peelkit;

namespace {

mpz_class ipow(unsigned long b, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

}  // namespace

TEST_CASE("defense number") {
  CHECK(defense_number(3, 1) == 4);
  CHECK(defense_number(1, 4) == 8);
  CHECK(defense_number(3, 2) == 6);
  for (int d = 1; d <= 4; ++d)
    for (int m = 1; m <= 3; ++m) CHECK(static_cast<int>(gale_set(d, m).size()) == defense_number(d, m));
}

TEST_CASE("growth base") {
  const Enclosure a31 = growth_base(3, 1);
  CHECK(a31.exact());
  CHECK(a31.lo == 256);
  const Enclosure a32 = growth_base(3, 2);
  CHECK(a32.exact());
  CHECK(a32.lo == 125);
  const Enclosure a33 = growth_base(3, 3, 64);
  CHECK(std::fabs(a33.mid().get_d() - std::pow(6.0, 8.0 / 3.0)) < 1e-9);
  CHECK(a33.width() < Scalar(1, 1000000));
  CHECK_THROWS_AS(growth_base(2, 1), InputError);
}

TEST_CASE("growth base enclosures are sound in integer arithmetic") {
  for (int d = 3; d <= 6; ++d)
    for (int m = 1; m <= 8; ++m) {
      const Enclosure a = growth_base(d, m, 40);
      const mpz_class target = ipow(static_cast<unsigned long>(d + m), static_cast<unsigned long>(d + 2 * m - 1));
      mpq_class lo = 1, hi = 1;
      for (int i = 0; i < m; ++i) {
        lo *= a.lo;
        hi *= a.hi;
      }
      CHECK(lo <= target);
      CHECK(hi >= target);
    }
}

TEST_CASE("explicit bound") {
  const Enclosure b = theorem2_bound(3, 2, 2);
  CHECK(std::fabs(b.mid().get_d() - std::sqrt(125.0)) < 1e-9);
  CHECK(b.lo >= 2);
  const Enclosure e = theorem2_bound(3, 1, 3);
  CHECK(e.exact());
  CHECK(e.lo == 4096);
  CHECK_THROWS_AS(theorem2_bound(3, 1, 0), InputError);
  CHECK_THROWS_AS(theorem2_bound(3, 1, 1), InputError);
  CHECK(theorem2_exponent(3, 2, 2) == mpq_class(3, 2));
  const Enclosure c = theorem2_constant(3, 1);
  CHECK(c.exact());
  CHECK(c.lo == Scalar(1, 4096));
}

TEST_CASE("floor of d ln d") {
  CHECK(theorem1_m(3) == 3);
  CHECK(theorem1_m(4) == 5);
  for (int d = 3; d <= 40; ++d) {
    CHECK(theorem1_m(d) == static_cast<int>(std::floor(d * std::log(static_cast<double>(d)))));
  }
}

TEST_CASE("optimal m") {
  const OptimalM o = optimal_m(3, 10);
  CHECK(o.m_star == 3);
  CHECK(o.theorem1_m == 3);
  CHECK(compare_growth_exact(3, 3, 2) < 0);
  CHECK(compare_growth_exact(3, 3, 4) < 0);
  CHECK(compare_growth_exact(3, 2, 2) == 0);
  CHECK(std::fabs(growth_base(3, 4).mid().get_d() - std::pow(7.0, 2.5)) < 1e-9);
  CHECK_THROWS(optimal_m(3, 2));
}

TEST_CASE("exact comparison agrees with floating point on separated cases") {
  for (int d = 3; d <= 7; ++d)
    for (int m1 = 1; m1 <= 8; ++m1)
      for (int m2 = 1; m2 <= 8; ++m2) {
        const double l1 = (d + 2.0 * m1 - 1) / m1 * std::log(d + m1);
        const double l2 = (d + 2.0 * m2 - 1) / m2 * std::log(d + m2);
        if (std::fabs(l1 - l2) < 1e-9) continue;
        CHECK(compare_growth_exact(d, m1, m2) == (l1 < l2 ? -1 : 1));
      }
}

TEST_CASE("epsilon of the corollary") {
  const Enclosure e3 = corollary_epsilon(3);
  const double l = std::log(3.0);
  const double ll = std::log(2 * l);
  const double expected = 1 / l + 2 * ll / l + ll / (l * l);
  CHECK(e3.lo.get_d() <= expected + 1e-12);
  CHECK(e3.hi.get_d() >= expected - 1e-12);
  CHECK(e3.width() < Scalar(1, 1000000));
  const Enclosure e1000 = corollary_epsilon(1000);
  const Enclosure e100000 = corollary_epsilon(100000);
  CHECK(certainly_compare(e100000, e1000) == -1);
  CHECK(certainly_compare(e1000, e3) == -1);
}

TEST_CASE("proof identities") {
  for (int d = 3; d <= 8; ++d)
    for (int m = 1; m <= 10; ++m) {
      CHECK(growth_identity_holds(d, m));
      CHECK(coefficient_inequality_holds(d, m));
    }
}
