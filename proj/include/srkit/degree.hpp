#pragma once

#include <optional>

#include "srkit/enclosure.hpp"
#include "srkit/fnspec.hpp"
#include "srkit/lp.hpp"
#include "srkit/report.hpp"

namespace srkit {

// One element of the polynomial space attached to a function representation:
// a multilinear monomial mask for explicit specs, a power of the weight sum
// for symmetric ones, a bivariate power pair for block-symmetric ones.
struct BasisElem {
  unsigned long mask = 0;
  long j1 = 0, j2 = 0;
};

// Deterministic basis up to total degree `degree` (explicit masks ordered by
// popcount then value; powers in lexicographic (total, j1) order).
std::vector<BasisElem> polynomial_basis(const FnSpec& f, long degree);

// Value of a basis element at a representation point of f.
Rational basis_value(const FnSpec& f, const BasisElem& e, long idx);

struct Polynomial {
  FnSpec::Kind basis = FnSpec::Kind::Explicit;
  std::vector<BasisElem> elems;
  std::vector<Rational> coeffs;

  Rational value_at(const FnSpec& f, long idx) const;
};

// Dual object certifying a threshold-degree lower bound: per representation
// point of f, the value psi at any input of that class, normalized to unit
// l1 mass.
struct DualWitness {
  std::vector<Rational> values;
  long phd = -1;
};

// Exact re-verification of the three dual conditions: orthogonality to every
// polynomial of degree <= phd, pointwise sign agreement with f, and a
// positive l1 norm.
PropertyReport verify_threshold_witness(const FnSpec& f, const DualWitness& w);

struct ThresholdDegreeResult {
  long degree = 0;
  Polynomial primal;                // sign-representation at `degree`
  std::optional<DualWitness> dual;  // witness with phd = degree-1 when degree >= 1
};

// Feasibility LP for a degree-d sign-representation, f(x) p(x) >= 1 per
// representation point (strictness recovered by homogeneity).
LPProblem threshold_lp(const FnSpec& f, long degree);

// Least degree of a sign-representing polynomial, by upward scan. Also
// returns the representing polynomial and, for positive degrees, the dual
// witness extracted from the last infeasible program.
ThresholdDegreeResult threshold_degree(const FnSpec& f);

// Witness extraction from an infeasibility certificate of threshold_lp(f, d):
// psi(x) = mu_x f(x) scaled to unit l1 norm. The result is independently
// re-verified; a certificate that touches no constraint raises
// MalformedCertificate.
DualWitness extract_dual_witness(const LPCertificate& cert, const FnSpec& f,
                                 long d);

struct RationalDualPair {
  std::vector<Rational> psi0, psi1;  // per representation point
  long phd0 = -1, phd1 = -1;
  Rational eps;
};

struct RationalFeasibility {
  bool feasible = false;
  std::optional<Polynomial> p0, p1;          // when feasible
  std::optional<RationalDualPair> dual;      // when infeasible
  PropertyReport certificate_report;         // independent re-verification
};

// Decides whether degree-(d0, d1) polynomials achieve one-sided domination at
// margin eps:
//   f(x) = 1  =>  |p1(x)| < eps * p0(x)
//   f(x) = -1 =>  |p0(x)| < eps * p1(x)
// (strict inequalities encoded with unit margin by homogeneity). Infeasible
// instances yield the dual pair extracted from the Farkas ray, re-verified
// against the dual conditions below.
RationalFeasibility rational_degree_feasible(const FnSpec& f, long d0, long d1,
                                             const Rational& eps);

// The dual conditions for the pair: psi0 >= eps|psi1| on f^-1(1), psi1 >=
// eps|psi0| on f^-1(-1), pure high degrees d0 and d1, both norms positive.
PropertyReport verify_rational_dual_pair(const FnSpec& f,
                                         const RationalDualPair& pair);

// Smallest d with rational_degree_feasible(f, d, d, eps) feasible.
long rational_degree_search(const FnSpec& f, const Rational& eps);

// Rational bisection bracket for the infimum eps at fixed degrees; after
// `iters` halvings returns [lo, hi] with lo infeasible and hi feasible.
Enclosure rational_degree_value(const FnSpec& f, long d0, long d1,
                                unsigned iters);

}  // namespace srkit
