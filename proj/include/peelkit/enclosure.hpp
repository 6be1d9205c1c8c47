#pragma once

#include <gmpxx.h>

#include "peelkit/scalar.hpp"

namespace peelkit {

/// Closed rational interval [lo, hi] known to contain some real value.
struct Enclosure {
  Scalar lo;
  Scalar hi;

  bool exact() const { return lo == hi; }
  Scalar width() const { return hi - lo; }
  bool contains(const Scalar& x) const { return lo <= x && x <= hi; }
  /// Midpoint, for display only.
  Scalar mid() const { return (lo + hi) / 2; }

  static Enclosure point(const Scalar& v) { return {v, v}; }
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
/// b must not contain zero.
Enclosure operator/(const Enclosure& a, const Enclosure& b);

/// Widens outward onto the grid of multiples of 2^-bits.
Enclosure round_outward(const Enclosure& e, unsigned bits);

/// Certain ordering: -1 if a < b everywhere, +1 if a > b, 0 if they overlap.
int certainly_compare(const Enclosure& a, const Enclosure& b);

/// N^(1/k) for N >= 0, width <= 2^-bits, exact when N is a perfect k-th power.
Enclosure root_enclosure(const mpz_class& n, unsigned long k, unsigned bits);

/// base^exponent for integer base >= 1 and rational exponent, width <= 2^-bits.
Enclosure power_enclosure(unsigned long base, const mpq_class& exponent, unsigned bits);

/// Natural logarithm of a positive rational, width <= 2^-bits.
Enclosure ln_enclosure(const Scalar& x, unsigned bits);

Scalar pow2(long exponent);

}  // namespace peelkit
