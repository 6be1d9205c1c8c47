#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace peelkit {

/// Exact rational coordinate. GMP keeps mpq values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Scalar = mpq_class;

/// Arbitrary-precision count of peeling sequences.
using BigCount = mpz_class;

using Point = std::vector<Scalar>;

/// Parses "num/den", "num" or a plain integer string. Throws InputError.
Scalar parse_scalar(std::string_view text);

/// Canonical "num/den" (or "num" when the denominator is 1).
std::string format_scalar(const Scalar& value);

/// Decimal approximation with `digits` fractional digits (truncated toward
/// zero). Only for human-facing output.
std::string approx_decimal(const Scalar& value, int digits = 6);

inline int sign(const Scalar& value) { return sgn(value); }

Scalar dot(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator+(const Point& a, const Point& b);
Point operator*(const Scalar& s, const Point& a);
Scalar squared_norm(const Point& a);

}  // namespace peelkit
