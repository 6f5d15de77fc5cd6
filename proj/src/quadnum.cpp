#include "srkit/quadnum.hpp"

#include "srkit/combinatorics.hpp"
#include "srkit/errors.hpp"

namespace srkit {

QuadNum::QuadNum(const Rational& a, const Rational& b, unsigned long delta)
    : a_(a), b_(b), delta_(delta) {
  if (b_ != 0 && delta_ == 0)
    throw UsageError("radical part requires a positive radicand");
  normalize();
}

void QuadNum::normalize() {
  if (b_ == 0) {
    delta_ = 0;
    return;
  }
  Integer root;
  if (is_perfect_square(Integer(delta_), &root)) {
    a_ += b_ * Rational(root);
    b_ = 0;
    delta_ = 0;
  }
}

unsigned long QuadNum::common_delta(const QuadNum& x, const QuadNum& y) {
  if (x.delta_ == 0) return y.delta_;
  if (y.delta_ == 0) return x.delta_;
  if (x.delta_ != y.delta_) throw DeltaMismatch(x.delta_, y.delta_);
  return x.delta_;
}

int QuadNum::sign() const {
  const int sa = sgn(a_);
  if (b_ == 0) return sa;
  const int sb = sgn(b_);
  if (a_ == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt(delta) reduces to a^2 vs b^2*delta.
  const int cmp = sgn(a_ * a_ - b_ * b_ * Rational(delta_));
  if (cmp == 0) return 0;  // unreachable after normalization, kept total
  return cmp > 0 ? sa : sb;
}

QuadNum QuadNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (b_ == 0) return QuadNum(Rational(1) / a_);
  // 1/(a + b*sqrt(D)) = (a - b*sqrt(D)) / (a^2 - b^2*D); the denominator is
  // nonzero because sqrt(D) is irrational after normalization.
  const Rational norm = a_ * a_ - b_ * b_ * Rational(delta_);
  return QuadNum(a_ / norm, -b_ / norm, delta_);
}

QuadNum& QuadNum::operator+=(const QuadNum& o) {
  delta_ = common_delta(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) {
  delta_ = common_delta(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
  const unsigned long d = common_delta(*this, o);
  const Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
  const Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  delta_ = d;
  normalize();
  return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& o) { return *this *= o.inverse(); }

std::string QuadNum::str() const {
  if (b_ == 0) return rational_to_string(a_);
  return rational_to_string(a_) + " + " + rational_to_string(b_) + "*sqrt(" +
         std::to_string(delta_) + ")";
}

}  // namespace srkit
