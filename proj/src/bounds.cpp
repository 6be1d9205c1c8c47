#include "peelkit/bounds.hpp"

#include <cmath>
#include <string>

#include "peelkit/errors.hpp"

namespace peelkit {

namespace {

void require_theorem_range(int d, int m) {
  if (d < 3 || m < 1) throw InputError("bound formulas need d >= 3 and m >= 1");
}

mpz_class ipow(unsigned long base, unsigned long exponent) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

Scalar floor_of(const Scalar& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Scalar(f);
}

}  // namespace

int defense_number(int d, int m) {
  if (d < 1 || m < 1) throw InputError("defense_number needs d >= 1 and m >= 1");
  return d + 2 * m - 1;
}

mpq_class growth_exponent(int d, int m) {
  mpq_class e(defense_number(d, m), m);
  e.canonicalize();
  return e;
}

Enclosure growth_base(int d, int m, unsigned precision) {
  require_theorem_range(d, m);
  return power_enclosure(static_cast<unsigned long>(d + m), growth_exponent(d, m), precision);
}

Enclosure theorem2_constant(int d, int m, unsigned precision) {
  require_theorem_range(d, m);
  mpq_class e = -growth_exponent(d, m) * mpq_class(d, d - 1);
  e.canonicalize();
  return power_enclosure(static_cast<unsigned long>(d + m), e, precision);
}

mpq_class theorem2_exponent(int d, int m, int n) {
  if (d < 2 || m < 1) throw InputError("theorem2_exponent needs d >= 2 and m >= 1");
  // c * a^n = a^(n - d/(d-1)).
  mpq_class e = growth_exponent(d, m) * (mpq_class(n) - mpq_class(d, d - 1));
  e.canonicalize();
  return e;
}

Enclosure theorem2_bound(int d, int m, int n, unsigned precision) {
  require_theorem_range(d, m);
  if (n < 2) throw InputError("theorem2_bound needs n >= 2");
  return power_enclosure(static_cast<unsigned long>(d + m), theorem2_exponent(d, m, n), precision);
}

int theorem1_m(int d) {
  if (d < 2) throw InputError("theorem1_m needs d >= 2");
  for (unsigned bits = 32;; bits *= 2) {
    const Enclosure v = Enclosure::point(Scalar(d)) * ln_enclosure(Scalar(d), bits);
    const Scalar lo = floor_of(v.lo);
    if (lo == floor_of(v.hi)) return static_cast<int>(lo.get_num().get_si());
    if (bits > 1u << 14) throw CertificationError("could not certify floor(d ln d)");
  }
}

int compare_growth_exact(int d, int m1, int m2) {
  // (d+m1)^(D1/m1) vs (d+m2)^(D2/m2)  <=>  (d+m1)^(D1*m2) vs (d+m2)^(D2*m1).
  const auto lhs = ipow(static_cast<unsigned long>(d + m1), static_cast<unsigned long>(defense_number(d, m1) * m2));
  const auto rhs = ipow(static_cast<unsigned long>(d + m2), static_cast<unsigned long>(defense_number(d, m2) * m1));
  return cmp(lhs, rhs) < 0 ? -1 : (cmp(lhs, rhs) > 0 ? 1 : 0);
}

OptimalM optimal_m(int d, int search_limit) {
  require_theorem_range(d, 1);
  OptimalM out;
  out.theorem1_m = theorem1_m(d);
  if (search_limit < out.theorem1_m + d) {
    throw InputError("optimal_m search limit must be at least floor(d ln d) + d = " +
                     std::to_string(out.theorem1_m + d));
  }
  for (int m = 1; m <= search_limit; ++m) out.candidates.push_back(growth_base(d, m, 32));

  auto less = [&](int m1, int m2) {
    for (unsigned bits = 32; bits <= 2048; bits *= 2) {
      const int c = certainly_compare(growth_base(d, m1, bits), growth_base(d, m2, bits));
      if (c != 0) return c < 0;
    }
    // Overlap at every precision tried: only equality remains plausible.
    return compare_growth_exact(d, m1, m2) < 0;
  };

  int best = 1;
  for (int m = 2; m <= search_limit; ++m) {
    if (less(m, best)) best = m;
  }
  if (best == search_limit) {
    throw InputError("optimal_m: minimum lies on the search boundary; raise the search limit");
  }
  out.m_star = best;
  out.growth = growth_base(d, best, 64);
  return out;
}

Enclosure corollary_epsilon(int d, unsigned precision) {
  require_theorem_range(d, 1);
  for (unsigned work = precision + 16;; work += 32) {
    const Enclosure l = ln_enclosure(Scalar(d), work);
    const Enclosure two_l = Enclosure::point(2) * l;
    const Enclosure lm{ln_enclosure(two_l.lo, work).lo, ln_enclosure(two_l.hi, work).hi};
    const Enclosure one = Enclosure::point(1);
    const Enclosure e = one / l + Enclosure::point(2) * lm / l + lm / (l * l);
    if (e.width() <= pow2(-static_cast<long>(precision))) return round_outward(e, precision + 2);
    if (work > precision + 4096) throw CertificationError("corollary_epsilon did not converge");
  }
}

bool growth_identity_holds(int d, int m, unsigned precision) {
  const int big_d = defense_number(d, m);
  const mpz_class lhs = ipow(static_cast<unsigned long>(big_d - m + 1), static_cast<unsigned long>(big_d));
  const Enclosure a = growth_base(d, m, precision);
  Scalar lo_m = 1, hi_m = 1;
  for (int i = 0; i < m; ++i) {
    lo_m *= a.lo;
    hi_m *= a.hi;
  }
  if (!(lo_m <= Scalar(lhs) && Scalar(lhs) <= hi_m)) return false;
  if (big_d % m == 0) return a.exact() && lo_m == Scalar(lhs);
  return true;
}

bool coefficient_inequality_holds(int d, int m, unsigned precision) {
  require_theorem_range(d, m);
  // Both sides are powers of a > 1, so the ordering follows the exponents.
  const mpq_class left_exp(-(d + m - 1), d + m - 2);
  const mpq_class right_exp(-d, d - 1);
  const bool exact = left_exp >= right_exp;
  mpq_class left_total = growth_exponent(d, m) * left_exp;
  left_total.canonicalize();
  if (left_exp == right_exp) return exact;
  for (unsigned bits = precision; bits <= precision * 64; bits *= 2) {
    const Enclosure left = power_enclosure(static_cast<unsigned long>(d + m), left_total, bits);
    const int c = certainly_compare(left, theorem2_constant(d, m, bits));
    if (c != 0) return exact && c > 0;
  }
  return false;
}

}  // namespace peelkit
