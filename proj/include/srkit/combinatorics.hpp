#pragma once

#include "srkit/rational.hpp"

namespace srkit {

// Largest r with r^k <= n, by integer binary search. Requires n >= 1, k >= 1.
Integer int_root(const Integer& n, unsigned long k);

// True iff n is a perfect square; *root receives floor(sqrt(n)) either way.
bool is_perfect_square(const Integer& n, Integer* root = nullptr);

// Exact binomial coefficient via the multiplicative formula; each partial
// product C(m, i) is integral, so the running division is exact.
// k outside [0, m] returns 0 by convention.
Integer binomial(const Integer& m, const Integer& k);
Integer binomial(long m, long k);

}  // namespace srkit
