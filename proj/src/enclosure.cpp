#include "srkit/enclosure.hpp"

#include <algorithm>

#include "srkit/combinatorics.hpp"
#include "srkit/errors.hpp"

namespace srkit {

Enclosure::Enclosure(const Rational& l, const Rational& h) : lo(l), hi(h) {
  if (lo > hi) throw InternalError("enclosure with lo > hi");
}

Enclosure operator*(const Enclosure& x, const Enclosure& y) {
  const Rational p1 = x.lo * y.lo, p2 = x.lo * y.hi, p3 = x.hi * y.lo,
                 p4 = x.hi * y.hi;
  return Enclosure(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Enclosure Enclosure::reciprocal() const {
  if (sgn(lo) <= 0 && sgn(hi) >= 0)
    throw UsageError("reciprocal of an enclosure containing zero");
  return Enclosure(Rational(1) / hi, Rational(1) / lo);
}

namespace {

Rational pow2(long e) {
  Rational r(1);
  if (e >= 0)
    r.get_num() <<= e;
  else
    r.get_den() <<= -e;
  return r;
}

// e^y for 0 <= y <= 1/2: partial Taylor sum plus geometric tail. Term ratios
// are at most 1/2, so the tail after k terms is below 2*term(k+1), and the
// bracket [S_k, S_k + 2*term(k+1)] shrinks monotonically as k grows.
Enclosure exp_reduced(const Rational& y, unsigned terms) {
  Rational sum(1), term(1);
  for (unsigned i = 1; i <= terms; ++i) {
    term *= y;
    term /= static_cast<unsigned long>(i);
    sum += term;
  }
  Rational tail = term * y / static_cast<unsigned long>(terms + 1) * 2;
  return Enclosure(sum, sum + tail);
}

Enclosure exp_positive(const Rational& x, unsigned bits) {
  // Halve into [0, 1/2], expand, then square back up. The halving count
  // depends only on x so enclosures at different precisions stay nested.
  unsigned halvings = 0;
  Rational y = x;
  while (y > Rational(1, 2)) {
    y /= 2;
    ++halvings;
  }
  const Rational target = pow2(-static_cast<long>(bits));
  for (unsigned terms = 4;; terms *= 2) {
    Enclosure e = exp_reduced(y, terms);
    for (unsigned i = 0; i < halvings; ++i)
      e = Enclosure(e.lo * e.lo, e.hi * e.hi);
    if (e.width() <= target) return e;
    if (terms > (bits + 64) * 4)
      throw InternalError("exp_enclosure failed to converge");
  }
}

}  // namespace

Enclosure exp_enclosure(const Rational& x, unsigned bits) {
  if (bits < 1) throw UsageError("exp_enclosure requires bits >= 1");
  if (x == 0) return Enclosure(Rational(1));
  if (x > 0) return exp_positive(x, bits);
  // e^x = 1 / e^{-x}; e^{-x} >= 1 here, so the reciprocal cannot widen.
  const Enclosure pos = exp_positive(-x, bits);
  return Enclosure(Rational(1) / pos.hi, Rational(1) / pos.lo);
}

Enclosure exp_over(const Enclosure& x, unsigned bits) {
  if (x.is_point()) return exp_enclosure(x.lo, bits);
  return Enclosure(exp_enclosure(x.lo, bits).lo, exp_enclosure(x.hi, bits).hi);
}

Enclosure sqrt_enclosure(const Integer& m, unsigned bits) {
  if (m < 1) throw UsageError("sqrt_enclosure requires m >= 1");
  Integer root;
  if (is_perfect_square(m, &root)) return Enclosure(Rational(root));
  // floor(2^bits * sqrt(m)) via one integer square root of m * 4^bits.
  Integer scaled = m;
  scaled <<= 2 * bits;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
  Rational lo(r), hi(r + 1);
  const Rational scale = pow2(-static_cast<long>(bits));
  return Enclosure(lo * scale, hi * scale);
}

}  // namespace srkit
