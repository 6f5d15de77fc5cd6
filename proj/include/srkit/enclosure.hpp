#pragma once

#include "srkit/rational.hpp"

namespace srkit {

// Certified rational enclosure [lo, hi] of a real value.
struct Enclosure {
  Rational lo, hi;

  Enclosure() : lo(0), hi(0) {}
  Enclosure(const Rational& point) : lo(point), hi(point) {}  // NOLINT
  Enclosure(const Rational& l, const Rational& h);

  Rational width() const { return hi - lo; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains(const Enclosure& e) const { return lo <= e.lo && e.hi <= hi; }

  friend bool operator==(const Enclosure& x, const Enclosure& y) {
    return x.lo == y.lo && x.hi == y.hi;
  }

  Enclosure operator-() const { return Enclosure(-hi, -lo); }
  friend Enclosure operator+(const Enclosure& x, const Enclosure& y) {
    return Enclosure(x.lo + y.lo, x.hi + y.hi);
  }
  friend Enclosure operator-(const Enclosure& x, const Enclosure& y) {
    return Enclosure(x.lo - y.hi, x.hi - y.lo);
  }
  friend Enclosure operator*(const Enclosure& x, const Enclosure& y);

  // Requires 0 outside [lo, hi].
  Enclosure reciprocal() const;

  std::string str() const {
    return "[" + rational_to_string(lo) + ", " + rational_to_string(hi) + "]";
  }
};

// Certified enclosure of e^x of width <= 2^-bits, by Taylor expansion with a
// geometric tail bound after halving the argument into [0, 1/2]. Deterministic
// for fixed (x, bits), and enclosures at higher bits nest inside lower ones.
Enclosure exp_enclosure(const Rational& x, unsigned bits);

// Certified enclosure of e^t for t anywhere in the argument enclosure.
Enclosure exp_over(const Enclosure& x, unsigned bits);

// Certified enclosure of sqrt(m) of width <= 2^-bits for integer m >= 1;
// exact point when m is a perfect square. Enclosures nest as bits grow.
Enclosure sqrt_enclosure(const Integer& m, unsigned bits);

}  // namespace srkit
