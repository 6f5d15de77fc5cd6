#pragma once

#include <string>

#include "srkit/enclosure.hpp"
#include "srkit/report.hpp"

namespace srkit {

// Certified enclosure of log2(q) for rational q > 0 (width <= 2^(1-fracbits)
// in general), exact for powers of two. Digit extraction by interval
// squaring with outward dyadic rounding.
Enclosure log2_enclosure(const Rational& q, unsigned fracbits);

// Inputs of the sign-rank bound formula
//   bound = gamma / ((1/2^n) (n/N)^(d/2) + gamma * delta_frac).
struct BoundInputs {
  Enclosure gamma;      // smoothness floor, gamma.lo > 0
  Rational delta_frac;  // exception fraction in [0, 1]
  long d = 0;
  long n = 0;
  long N = 0;
};

// Certified enclosure of log2(bound), evaluated through exact rational
// arithmetic (even d) or sqrt enclosures (odd d).
Enclosure rs_bound(const BoundInputs& b, unsigned bits = kDefaultBits);

struct PipelineBound {
  long log2_n = 0;      // k with n = 2^k
  long d = 0;           // floor(k / 100)
  Enclosure log2_bound;
  bool vacuous = false;  // bound certified <= 1
};

// Evaluates the bound formula with the composed-majority instantiation:
// base arity 4n, matrix parameter N = 4n^2, smoothness floor
// gamma = 1/(n^40 2^(4n)) with unit constant (any other constant shifts the
// output by its log2), exception fraction 2 exp(-n^(1/3)/3), and degree
// d = floor(log2(n)/100). Everything is evaluated in log space; the huge
// quantities themselves are never materialized. Requires n = 2^k, k >= 10;
// small k yields a vacuous (nonpositive) certified bound, reported as such.
PipelineBound pipeline_bound_log2(long k, unsigned bits = kDefaultBits);
PipelineBound pipeline_bound(const Integer& n, unsigned bits = kDefaultBits);

// The communication-cost translation: the enclosure passes through unchanged
// and the additive slack stays symbolic.
struct TranslatedBound {
  Enclosure log2_signrank;
  std::string slack = "+-O(1)";
};

TranslatedBound upp_translate(const Enclosure& log2_signrank);

}  // namespace srkit
