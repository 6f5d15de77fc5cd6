#include "srkit/rsbound.hpp"

#include <algorithm>

#include "srkit/combinatorics.hpp"
#include "srkit/errors.hpp"

namespace srkit {

namespace {

Rational pow2r(long e) {
  Rational r(1);
  if (e >= 0)
    r.get_num() <<= e;
  else
    r.get_den() <<= -e;
  return r;
}

Rational round_down(const Rational& q, unsigned bits) {
  Integer scaled;
  Rational shifted = q * pow2r(bits);
  mpz_fdiv_q(scaled.get_mpz_t(), shifted.get_num().get_mpz_t(),
             shifted.get_den().get_mpz_t());
  return Rational(scaled) * pow2r(-static_cast<long>(bits));
}

Rational round_up(const Rational& q, unsigned bits) {
  Integer scaled;
  Rational shifted = q * pow2r(bits);
  mpz_cdiv_q(scaled.get_mpz_t(), shifted.get_num().get_mpz_t(),
             shifted.get_den().get_mpz_t());
  return Rational(scaled) * pow2r(-static_cast<long>(bits));
}

}  // namespace

namespace {

// One digit-extraction attempt at a fixed internal precision. The true
// mantissa power stays in [1, 2) whenever a bit is decided off the rounded
// bounds (a non-power-of-two rational can never square onto a power of two
// exactly), so even the early-exit bracket is sound; `tight` reports whether
// the full width target was met.
Enclosure extract_log2_bits(const Rational& mantissa, long exponent,
                            unsigned fracbits, unsigned precision,
                            bool* tight) {
  Rational lo = round_down(mantissa, precision);
  Rational hi = round_up(mantissa, precision);
  Rational frac(0);
  *tight = true;
  for (unsigned i = 1; i <= fracbits; ++i) {
    lo = round_down(lo * lo, precision);
    hi = round_up(hi * hi, precision);
    if (lo >= 2) {
      lo /= 2;
      hi /= 2;
      frac += pow2r(-static_cast<long>(i));
    } else if (hi <= 2) {
      // bit 0; the upper bound may sit exactly on 2 through rounding.
    } else {
      // Undecidable bit: the square lies in [1, 4), two trailing bits remain.
      *tight = false;
      return Enclosure(Rational(exponent) + frac,
                       Rational(exponent) + frac +
                           pow2r(1 - static_cast<long>(i)));
    }
  }
  return Enclosure(Rational(exponent) + frac,
                   Rational(exponent) + frac +
                       pow2r(-static_cast<long>(fracbits)));
}

}  // namespace

Enclosure log2_enclosure(const Rational& q, unsigned fracbits) {
  if (q <= 0) throw UsageError("log2 needs a positive argument");
  // Normalize into [1, 2), tracking the integer exponent.
  Rational m = q;
  long exponent = 0;
  while (m >= 2) {
    m /= 2;
    ++exponent;
  }
  while (m < 1) {
    m *= 2;
    --exponent;
  }
  if (m == 1) return Enclosure(Rational(exponent));

  // Inputs hugging a dyadic power can defeat a fixed rounding grid; retry
  // with a finer one before settling for the coarse (still certified)
  // bracket.
  const unsigned base = fracbits + 32;
  Enclosure best{Rational(exponent), Rational(exponent) + 1};
  for (unsigned precision = base; precision <= 8 * base; precision *= 2) {
    bool tight = false;
    const Enclosure e = extract_log2_bits(m, exponent, fracbits, precision,
                                          &tight);
    if (e.width() < best.width()) best = e;
    if (tight) return e;
  }
  return best;
}

namespace {

// Enclosure of log2(2^a + 2^b) from enclosures of a and b. When the terms
// are separated the slack collapses to 3/2^(gap+1), capped so the exponent
// stays machine-sized; overlapping terms fall back to max + 1.
Enclosure log_sum(const Enclosure& a, const Enclosure& b) {
  const Rational lower = std::max(a.lo, b.lo);
  const Enclosure *big = &a, *small = &b;
  if (a.hi < b.hi) std::swap(big, small);
  if (small->hi <= big->lo) {
    const Rational gap = big->lo - small->hi;
    long g = 0;
    if (gap >= 64)
      g = 64;
    else {
      Integer floor_gap;
      mpz_fdiv_q(floor_gap.get_mpz_t(), gap.get_num().get_mpz_t(),
                 gap.get_den().get_mpz_t());
      g = floor_gap.get_si();
    }
    const Rational slack = g >= 1 ? Rational(3) * pow2r(-(g + 1)) : Rational(1);
    return Enclosure(lower, big->hi + slack);
  }
  return Enclosure(lower, std::max(a.hi, b.hi) + 1);
}

Enclosure log2_over(const Enclosure& e, unsigned bits) {
  if (e.is_point()) return log2_enclosure(e.lo, bits);
  return Enclosure(log2_enclosure(e.lo, bits).lo,
                   log2_enclosure(e.hi, bits).hi);
}

}  // namespace

Enclosure rs_bound(const BoundInputs& b, unsigned bits) {
  if (sgn(b.gamma.lo) <= 0) throw UsageError("gamma must be positive");
  if (b.delta_frac < 0 || b.delta_frac > 1)
    throw UsageError("delta_frac must lie in [0, 1]");
  if (b.d < 0 || b.n < 1 || b.N < 1) throw UsageError("invalid bound inputs");

  // (n/N)^(d/2) / 2^n, exactly for even d, through a sqrt enclosure otherwise.
  const Rational ratio = Rational(b.n) / Rational(b.N);
  Enclosure t1(pow_rational(ratio, b.d / 2) * pow2r(-b.n));
  if (b.d % 2 != 0) {
    // sqrt(n/N) = sqrt(nN)/N.
    const Enclosure root =
        sqrt_enclosure(Integer(b.n) * Integer(b.N), bits + 64);
    const Rational inv_n(Integer(b.N));
    t1 = t1 * Enclosure(root.lo / inv_n, root.hi / inv_n);
  }

  // bound = gamma / (t1 + gamma * delta); increasing in gamma, so evaluate
  // the endpoints monotonically.
  const Rational lo =
      b.gamma.lo / (t1.hi + b.gamma.lo * b.delta_frac);
  const Rational hi =
      b.gamma.hi / (t1.lo + b.gamma.hi * b.delta_frac);
  return log2_over(Enclosure(lo, hi), bits);
}

PipelineBound pipeline_bound_log2(long k, unsigned bits) {
  if (k < 10)
    throw ParameterRegime("pipeline instantiation needs n = 2^k with k >= 10");
  PipelineBound out;
  out.log2_n = k;
  out.d = k / 100;

  Integer four_n(1);  // 4 * 2^k
  four_n <<= k + 2;
  const Rational log_gamma = Rational(-40) * Rational(k) - Rational(four_n);
  const Enclosure log_t1(-Rational(four_n) -
                         Rational(out.d) / 2 * Rational(k));

  // log2 of the exception fraction 2 exp(-n^(1/3)/3):
  //   1 - n^(1/3) * log2(e) / 3, with n^(1/3) enclosed by a scaled integer
  //   cube root and log2(e) through the exp enclosure of e itself.
  Integer n(1);
  n <<= k;
  const unsigned p = bits;
  Integer scaled = n;
  scaled <<= 3 * p;
  const Integer root = int_root(scaled, 3);
  const Enclosure cube_root(Rational(root) * pow2r(-static_cast<long>(p)),
                            Rational(root + 1) * pow2r(-static_cast<long>(p)));
  const Enclosure e_val = exp_enclosure(Rational(1), bits + 8);
  const Enclosure log2_e(log2_enclosure(e_val.lo, bits).lo,
                         log2_enclosure(e_val.hi, bits).hi);
  const Enclosure log_frac =
      Enclosure(Rational(1)) -
      Enclosure(cube_root.lo * log2_e.lo / 3, cube_root.hi * log2_e.hi / 3);
  const Enclosure log_t2 = Enclosure(log_gamma) + log_frac;

  const Enclosure log_den = log_sum(log_t1, log_t2);
  out.log2_bound = Enclosure(log_gamma - log_den.hi, log_gamma - log_den.lo);
  out.vacuous = sgn(out.log2_bound.lo) <= 0;
  return out;
}

PipelineBound pipeline_bound(const Integer& n, unsigned bits) {
  if (n < 1 || mpz_popcount(n.get_mpz_t()) != 1)
    throw ParameterRegime("pipeline needs n to be a power of two");
  const long k = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;
  return pipeline_bound_log2(k, bits);
}

TranslatedBound upp_translate(const Enclosure& log2_signrank) {
  return TranslatedBound{log2_signrank, "+-O(1)"};
}

}  // namespace srkit
