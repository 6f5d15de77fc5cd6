#pragma once

#include <map>
#include <string>
#include <vector>

#include "srkit/report.hpp"
#include "srkit/witness.hpp"

namespace srkit {

// Symmetric real-valued function on the m-dimensional hypercube, stored as
// one value per Hamming-weight class k in {0, ..., m} (weight counts the -1
// entries). The l1 norm weights each class by C(m, k). Never enumerates the
// cube itself.
class SymFn {
 public:
  explicit SymFn(long m);

  long m() const { return m_; }
  const QuadNum& weight_value(long k) const;
  void set(long k, const QuadNum& v);
  const std::map<long, QuadNum>& entries() const { return values_; }

  QuadNum l1_norm() const;
  bool is_zero() const { return values_.empty(); }

 private:
  void check_class(long k) const;

  long m_;
  std::map<long, QuadNum> values_;
};

// Lifts a grid function on {-n..n} to the 2n-cube: weight class k takes the
// value R(n-k)/C(2n, k). Preserves the l1 norm exactly (the class counts
// cancel the binomial divisors).
SymFn lift_grid(const GridFn& r);

SymFn lift_witness(const WitnessCert& cert);

// Weight-class analogues of the witness properties after lifting:
//   lift_l1          ||R'||_1 = 1 exactly
//   lift_domination  R'[n-t] >= dbar |R'[n+t]| for t in [1, n]
//   lift_phd         <R', p> = 0 for every polynomial of degree <= d-2,
//                    certified through the univariate moments
//   lift_smoothness  |R'[k]| * C(2n,k) against the two documented floors for
//                    0 < |k-n| <= u_max, plus the weaker 2^-2n form
PropertyReport verify_lift(const WitnessCert& cert, const SymFn& lifted,
                           unsigned bits = kDefaultBits);

// The two-function dual pair: psi1 lifts R, psi0 lifts the reflection
// t -> R(-t). Both come out l1-normalized; construction asserts this rather
// than renormalizing.
struct PsiPair {
  SymFn psi0, psi1;
  long delta_int = 0;
  Enclosure delta_enc;
  long phd_target = -1;  // d - 2

  PsiPair() : psi0(0), psi1(0) {}
};

PsiPair build_psi_pair(const WitnessCert& cert);

struct PsiVerifyResult {
  PropertyReport report;
  // Which orientation of the target function satisfied the one-sided
  // conditions: "weight>=n+1 maps to +1" or "weight>=n+1 maps to -1".
  std::string orientation;
};

// Checks both possible orientations of the paired conditions
//   f(x) = 1  => psi0(x) >= dbar |psi1(x)|
//   f(x) = -1 => psi1(x) >= dbar |psi0(x)|
// and records the one that holds, plus pure high degree of both functions up
// to phd_target and nontriviality of the norms.
PsiVerifyResult verify_psi_pair(const PsiPair& pair,
                                unsigned bits = kDefaultBits);

// Moments <g, (sum_i x_i)^j> for j = 0..kmax, computed in weight classes as
// sum_k C(m,k) g[k] (m-2k)^j. All-zero output certifies orthogonality to
// every multivariate polynomial of degree <= kmax, by symmetrization.
// kmax < 0 yields an empty list.
std::vector<QuadNum> orthogonality_symmetric(const SymFn& g, long kmax);

// Exact fraction of the 2n-cube with Hamming weight within `width` of n.
Rational weight_fraction_in_band(long n, long width);

}  // namespace srkit
