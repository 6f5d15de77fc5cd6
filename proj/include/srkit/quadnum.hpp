#pragma once

#include <string>

#include "srkit/rational.hpp"

namespace srkit {

// Exact element a + b*sqrt(delta) of the real quadratic field Q[sqrt(delta)].
//
// Canonical form: if delta is a perfect square the radical folds into the
// rational part (b becomes 0), and any value with b == 0 carries delta == 0,
// i.e. plain rationals are radicand-agnostic. Values with distinct nonzero
// radicands cannot be combined and raise DeltaMismatch.
//
// All operations are pure; values are immutable after construction.
class QuadNum {
 public:
  QuadNum() : a_(0), b_(0), delta_(0) {}
  QuadNum(const Rational& a) : a_(a), b_(0), delta_(0) {}  // NOLINT(implicit)
  QuadNum(long a) : a_(a), b_(0), delta_(0) {}             // NOLINT(implicit)
  QuadNum(const Rational& a, const Rational& b, unsigned long delta);

  static QuadNum sqrt_of(unsigned long delta) {
    return QuadNum(Rational(0), Rational(1), delta);
  }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  unsigned long delta() const { return delta_; }
  bool is_rational() const { return delta_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  // Exact sign in {-1, 0, +1}; decided by comparing a^2 against b^2*delta,
  // never through floating point.
  int sign() const;

  QuadNum abs() const { return sign() < 0 ? -*this : *this; }
  QuadNum conjugate() const { return QuadNum(a_, -b_, delta_); }
  QuadNum inverse() const;

  QuadNum operator-() const {
    QuadNum r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
  }
  QuadNum& operator+=(const QuadNum& o);
  QuadNum& operator-=(const QuadNum& o);
  QuadNum& operator*=(const QuadNum& o);
  QuadNum& operator/=(const QuadNum& o);

  friend QuadNum operator+(QuadNum x, const QuadNum& y) { return x += y; }
  friend QuadNum operator-(QuadNum x, const QuadNum& y) { return x -= y; }
  friend QuadNum operator*(QuadNum x, const QuadNum& y) { return x *= y; }
  friend QuadNum operator/(QuadNum x, const QuadNum& y) { return x /= y; }

  friend bool operator==(const QuadNum& x, const QuadNum& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.delta_ == y.delta_;
  }
  friend bool operator!=(const QuadNum& x, const QuadNum& y) {
    return !(x == y);
  }

  // x < y decided exactly via sign(x - y).
  friend bool operator<(const QuadNum& x, const QuadNum& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator<=(const QuadNum& x, const QuadNum& y) {
    return (x - y).sign() <= 0;
  }
  friend bool operator>(const QuadNum& x, const QuadNum& y) { return y < x; }
  friend bool operator>=(const QuadNum& x, const QuadNum& y) { return y <= x; }

  // "a/b + c/d*sqrt(D)" (or just "a/b" for rationals); canonical, parseable.
  std::string str() const;

 private:
  // Picks the common radicand of two operands or throws DeltaMismatch.
  static unsigned long common_delta(const QuadNum& x, const QuadNum& y);
  void normalize();

  Rational a_, b_;
  unsigned long delta_;
};

inline int quad_sign(const QuadNum& x) { return x.sign(); }

}  // namespace srkit
