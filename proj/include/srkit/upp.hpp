#pragma once

#include <vector>

#include "srkit/rational.hpp"

namespace srkit {

struct ProtocolOutcome {
  Rational accept_prob;  // exact probability of output -1
  long cost_bits = 0;    // ceil(log2(2n^2)) + 1 for input length 2n
};

// Output distribution of the tie-broken index-sampling protocol on the
// effective input z in {-1,1}^2n: with probability 2*beta output -1
// unconditionally, otherwise output a uniformly random coordinate of z.
// Requires 0 <= beta <= 1/2 (validity additionally needs beta > 0).
ProtocolOutcome upp_protocol_sim(const std::vector<int>& z,
                                 const Rational& beta);

struct UppValidation {
  bool pass = false;
  Rational worst_margin;      // min over z of P[output = MAJ(z)] - 1/2
  long worst_class = 0;       // smallest -1-count attaining the minimum
  std::vector<long> failing_classes;  // -1-counts with margin <= 0
  long cost_bits = 0;
};

// Exhaustively checks strict majority agreement P[output = MAJ(z)] > 1/2
// over every z in {-1,1}^2n (2n <= 16), with exact rational margins.
UppValidation upp_validate(long n, const Rational& beta);

}  // namespace srkit
