#pragma once

#include <optional>
#include <vector>

#include "peelkit/enclosure.hpp"
#include "peelkit/scalar.hpp"

namespace peelkit {

/// Minimum size of a set defending the origin for m peeling steps in R^d.
int defense_number(int d, int m);

/// Rational exponent e with a(d, m) = (d + m)^e.
mpq_class growth_exponent(int d, int m);

/// a(d, m) = (d + m)^((d + 2m - 1) / m). Requires d >= 3, m >= 1.
Enclosure growth_base(int d, int m, unsigned precision = 64);

/// c = a^(-d / (d - 1)). Requires d >= 3, m >= 1.
Enclosure theorem2_constant(int d, int m, unsigned precision = 64);

/// Exponent e with c * a^n = (d + m)^e; defined for any d >= 2.
mpq_class theorem2_exponent(int d, int m, int n);

/// c * a^n. Requires d >= 3, m >= 1, n >= 2.
Enclosure theorem2_bound(int d, int m, int n, unsigned precision = 64);

struct OptimalM {
  int m_star = 0;
  Enclosure growth;
  int theorem1_m = 0;
  /// Enclosures of a(d, m) for m = 1..search_limit, as compared.
  std::vector<Enclosure> candidates;
};

/// Certified floor(d ln d).
int theorem1_m(int d);

/// argmin over m in [1, search_limit] of a(d, m), ties to the smaller m.
/// Throws InputError if the limit is below floor(d ln d) + d or the minimum
/// sits on the search boundary.
OptimalM optimal_m(int d, int search_limit);

/// Exact ordering of a(d, m1) versus a(d, m2) by integer powers.
int compare_growth_exact(int d, int m1, int m2);

/// 1/ln d + 2 ln(2 ln d)/ln d + ln(2 ln d)/(ln d)^2, width <= 2^-precision.
Enclosure corollary_epsilon(int d, unsigned precision = 64);

/// (d+m)^(d+2m-1) compared with a^m through the growth-base enclosure:
/// lo^m <= (D-m+1)^D <= hi^m, with equality of both ends when m | D.
bool growth_identity_holds(int d, int m, unsigned precision = 64);

/// a^(-(d+m-1)/(d+m-2)) >= c, decided exactly on exponents and confirmed
/// on enclosures.
bool coefficient_inequality_holds(int d, int m, unsigned precision = 64);

}  // namespace peelkit
