#pragma once

#include <optional>
#include <vector>

#include "srkit/rational.hpp"

namespace srkit {

enum class Rel { Le, Ge, Eq };

struct LinearConstraint {
  std::vector<Rational> coeffs;  // dense, one per variable
  Rel rel = Rel::Ge;
  Rational rhs;
};

// Exact rational linear program. Variables are free unless marked
// nonnegative; every coefficient stays rational through the entire pivot
// path. Constraint and variable order is part of the problem identity (the
// solver is deterministic with respect to it).
struct LPProblem {
  long num_vars = 0;
  std::vector<bool> nonneg;
  std::vector<LinearConstraint> constraints;
  std::optional<std::vector<Rational>> objective;  // minimize c.x when set

  long add_variable(bool nonnegative = false) {
    nonneg.push_back(nonnegative);
    return num_vars++;
  }
  void add_constraint(std::vector<Rational> coeffs, Rel rel, Rational rhs);
};

enum class LPStatus { Feasible, Infeasible, Unbounded };

// Either a feasible point or a Farkas-style infeasibility certificate: one
// multiplier per constraint (>= 0 on Ge rows, <= 0 on Le rows, free on Eq
// rows) whose combination cancels every free variable, is nonpositive on
// every nonnegative variable, and leaves a positive right-hand side.
struct LPCertificate {
  LPStatus status = LPStatus::Feasible;
  std::vector<Rational> point;
  std::optional<Rational> objective_value;
  std::vector<Rational> farkas;
};

// Dense-tableau two-phase simplex with Bland's anti-cycling rule and a fixed
// variable order. The returned certificate has already been re-verified by
// direct arithmetic; verification failure raises InternalError.
LPCertificate lp_solve(const LPProblem& prob);

// Independent certificate check (pure arithmetic, no solver state).
bool verify_certificate(const LPProblem& prob, const LPCertificate& cert);

}  // namespace srkit
