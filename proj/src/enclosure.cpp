#include "peelkit/enclosure.hpp"

#include <algorithm>

#include "peelkit/errors.hpp"

namespace peelkit {

Scalar pow2(long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Scalar(mpz_class(1), p) : Scalar(p);
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Enclosure operator-(const Enclosure& a, const Enclosure& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  const Scalar c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (b.lo <= 0 && b.hi >= 0) throw InputError("enclosure division by an interval containing zero");
  return a * Enclosure{1 / b.hi, 1 / b.lo};
}

Enclosure round_outward(const Enclosure& e, unsigned bits) {
  const Scalar scale = pow2(bits);
  mpz_class lo, hi;
  const Scalar a = e.lo * scale;
  const Scalar b = e.hi * scale;
  mpz_fdiv_q(lo.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  mpz_cdiv_q(hi.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  return {Scalar(lo) / scale, Scalar(hi) / scale};
}

int certainly_compare(const Enclosure& a, const Enclosure& b) {
  if (a.hi < b.lo) return -1;
  if (a.lo > b.hi) return 1;
  return 0;
}

Enclosure root_enclosure(const mpz_class& n, unsigned long k, unsigned bits) {
  if (n < 0 || k == 0) throw InputError("root_enclosure needs N >= 0 and k >= 1");
  mpz_class scaled = n;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits * k);
  mpz_class r;
  const bool exact = mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), k) != 0;
  const Scalar unit = pow2(-static_cast<long>(bits));
  Enclosure e{Scalar(r) * unit, Scalar(r + (exact ? 0 : 1)) * unit};
  if (exact) {
    // Prefer the plain value when N itself is a perfect power.
    mpz_class plain;
    if (mpz_root(plain.get_mpz_t(), n.get_mpz_t(), k) != 0) e = Enclosure::point(Scalar(plain));
  }
  return e;
}

Enclosure power_enclosure(unsigned long base, const mpq_class& exponent, unsigned bits) {
  if (base == 0) throw InputError("power_enclosure needs base >= 1");
  const mpz_class& p = exponent.get_num();
  const mpz_class& q = exponent.get_den();
  mpz_class magnitude = abs(p);
  mpz_class n;
  mpz_ui_pow_ui(n.get_mpz_t(), base, magnitude.get_ui());
  Enclosure e = root_enclosure(n, q.get_ui(), bits);
  if (p >= 0) return e;
  // base^|e| >= 1, so inversion does not widen the interval.
  return {1 / e.hi, 1 / e.lo};
}

namespace {

// 2*atanh(z) for rational 0 <= z <= 1/3, which equals ln((1+z)/(1-z)).
Enclosure two_atanh(const Scalar& z, unsigned bits) {
  const unsigned work = bits + 16;
  Enclosure sum{0, 0};
  Scalar zpow = z;
  const Scalar z2 = z * z;
  Scalar tail;
  for (unsigned long j = 0;; ++j) {
    const Scalar term = 2 * zpow / (2 * j + 1);
    sum = round_outward(sum + Enclosure::point(term), work);
    zpow *= z2;
    // Remaining terms sum to at most 2 z^(2j+3) / ((2j+3)(1 - z^2)).
    tail = 2 * zpow / ((2 * j + 3) * (1 - z2));
    if (tail < pow2(-static_cast<long>(work))) break;
  }
  sum.hi += tail;
  return sum;
}

}  // namespace

Enclosure ln_enclosure(const Scalar& x, unsigned bits) {
  if (x <= 0) throw InputError("ln of a non-positive value");
  // x = 2^k * y with 1 <= y < 2.
  long k = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  Scalar y = x * pow2(-k);
  while (y >= 2) {
    y /= 2;
    ++k;
  }
  while (y < 1) {
    y *= 2;
    --k;
  }
  const unsigned extra = 8 + static_cast<unsigned>(mpz_sizeinbase(mpz_class(k < 0 ? -k : k).get_mpz_t(), 2));
  const Enclosure ln2 = two_atanh(Scalar(1, 3), bits + extra);
  const Enclosure lny = two_atanh((y - 1) / (y + 1), bits + extra);
  return round_outward(Enclosure::point(Scalar(k)) * ln2 + lny, bits + 2);
}

}  // namespace peelkit
