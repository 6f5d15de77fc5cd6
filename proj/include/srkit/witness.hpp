#pragma once

#include <vector>

#include "srkit/enclosure.hpp"
#include "srkit/gridfn.hpp"
#include "srkit/report.hpp"

namespace srkit {

// Parameters of the grid witness on {-n, ..., n}: n odd, pure-high-degree
// target d with 8^d <= n, radicand delta = floor(n^(1/3d)) >= 2, and support
// scale u_max = floor(n^(2/3)).
struct WitnessParams {
  long n = 0;
  long d = 0;
  long delta_int = 0;
  long u_max = 0;
  Enclosure delta_enc;  // enclosure of exp(-18/sqrt(delta_int))
  unsigned bits = kDefaultBits;
};

WitnessParams witness_params(long n, long d, unsigned bits = kDefaultBits);

// Certified enclosure of exp(-18/sqrt(delta)): the one-sided domination floor.
Enclosure domination_floor(long delta_int, unsigned bits);

// Certified enclosure of exp(-18/sqrt(delta) - 4): the positive-side
// smoothness scale before the 1/(8 delta^2) factor.
Enclosure positive_mass_scale(long delta_int, unsigned bits);

// The 2d signed support points {+-u, +-u*delta, ..., +-u*delta^(d-1)},
// ascending. Requires 1 <= u <= u_max.
std::vector<long> support_set(long u, const WitnessParams& p);

// Closed-form value of the u-th building block at grid point t: zero off the
// support, otherwise
//   (-1)^(n-t) * prod_i (t - u*delta^i*sqrt(delta)) / prod_{s in S_u, s != t} (t - s).
QuadNum eval_p_u(long u, long t, const WitnessParams& p);

// The same block with the binomial weight divided out:
// r_u(t) = p_u(t) / C(2n, n+t). The full degree-(2n+1-d) product form is
// never materialized.
QuadNum eval_r_u(long u, long t, const WitnessParams& p);

QuadNum p_u_l1(long u, const WitnessParams& p);

struct WitnessCert {
  WitnessParams params;
  GridFn R;
  PropertyReport report;

  WitnessCert() : R(0) {}
};

// Builds R(t) = (-1)^t * P(t) / ||P||_1 where
// P(t) = sum_{u=1}^{u_max} u^20 * p_u(t) / ||p_u||_1. Exact in Q[sqrt(delta)].
WitnessCert build_witness(const WitnessParams& p);

// Verifies, with exact margins:
//   l1_norm         sum_t |R(t)| = 1, exact
//   domination      R(t) >= dbar * |R(-t)| for t in [1, n], dbar the upper
//                   endpoint of the exp(-18/sqrt(delta)) enclosure
//   orthogonality   <R, t^k> = 0 exactly for k <= d-2 (top k reported apart)
//   smoothness      |R(t)| >= 20/n^20 on [-u_max, -1];
//                   |R(t)| >= exp(-18/sqrt(2)-4)/(8 n^15) on [1, u_max]
//                   (the looser e^-15/(8 n^15) variant is reported alongside)
//   zero_point      R(0) = 0, reported exempt
// Enclosure-dependent checks refine from `bits` by doubling up to kMaxBits;
// exhaustion yields Undecided with the refinement trace, never silent.
PropertyReport verify_witness(const WitnessCert& cert,
                              unsigned bits = kDefaultBits);

// Machine-checks the per-block inequalities for every u in [1, u_max] and
// every applicable j, transcendental constants replaced by certified
// enclosure endpoints in the sound direction:
//   claim2        |p_u(-u)| >= (sqrt(delta)+1)/2 * u^-(d-1) * delta^-(d-1)^2/2
//   claim3        |p_u(-u*delta^j)| <= e^4 * delta^-(j^2-3j-2)/2 * (claim2 rhs)
//   claim4        |r_u(-u*delta^j)| >= |r_u(u*delta^j)|
//                   >= exp(-18/sqrt(delta)) * |r_u(-u*delta^j)|, and the same
//                   for p_u
//   lemma1        |p_u(-u)| >= ||p_u||_1 / (8 delta^2 e^4) and
//                 |p_u(u)| >= exp(-18/sqrt(delta)-4)/(8 delta^2) * ||p_u||_1
PropertyReport verify_claims(const WitnessParams& p,
                             unsigned bits = kDefaultBits);

// Exact value of sum_{t=-n}^{n} (-1)^t C(2n, n+t) p(t) for the polynomial
// with the given coefficients (ascending degree). Zero whenever deg p < 2n.
Rational check_combinatorial_identity(long n, const std::vector<Rational>& coeffs);

}  // namespace srkit
