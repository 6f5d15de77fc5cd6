#include "srkit/degree.hpp"

#include <algorithm>
#include <bit>

#include "srkit/combinatorics.hpp"
#include "srkit/errors.hpp"

namespace srkit {

std::vector<BasisElem> polynomial_basis(const FnSpec& f, long degree) {
  std::vector<BasisElem> basis;
  if (degree < 0) return basis;
  switch (f.kind()) {
    case FnSpec::Kind::Explicit: {
      const unsigned long limit = 1uL << f.arity();
      std::vector<unsigned long> masks;
      for (unsigned long m = 0; m < limit; ++m)
        if (std::popcount(m) <= degree) masks.push_back(m);
      std::sort(masks.begin(), masks.end(), [](unsigned long a, unsigned long b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
      });
      for (unsigned long m : masks) basis.push_back({m, 0, 0});
      break;
    }
    case FnSpec::Kind::Symmetric:
      for (long j = 0; j <= std::min(degree, f.arity()); ++j)
        basis.push_back({0, j, 0});
      break;
    case FnSpec::Kind::BlockSymmetric:
      for (long total = 0; total <= degree; ++total)
        for (long j1 = 0; j1 <= total; ++j1) {
          if (j1 > f.block1() || total - j1 > f.block2()) continue;
          basis.push_back({0, j1, total - j1});
        }
      break;
  }
  return basis;
}

Rational basis_value(const FnSpec& f, const BasisElem& e, long idx) {
  switch (f.kind()) {
    case FnSpec::Kind::Explicit:
      return Rational(
          std::popcount(e.mask & static_cast<unsigned long>(idx)) % 2 == 0
              ? 1
              : -1);
    case FnSpec::Kind::Symmetric:
      return pow_rational(Rational(f.arity() - 2 * idx), e.j1);
    case FnSpec::Kind::BlockSymmetric: {
      const long k1 = idx / (f.block2() + 1), k2 = idx % (f.block2() + 1);
      return pow_rational(Rational(f.block1() - 2 * k1), e.j1) *
             pow_rational(Rational(f.block2() - 2 * k2), e.j2);
    }
  }
  return Rational(0);
}

Rational Polynomial::value_at(const FnSpec& f, long idx) const {
  Rational v(0);
  for (size_t i = 0; i < elems.size(); ++i)
    v += coeffs[i] * basis_value(f, elems[i], idx);
  return v;
}

LPProblem threshold_lp(const FnSpec& f, long degree) {
  const auto basis = polynomial_basis(f, degree);
  const long points = f.domain_size();
  if (points * static_cast<long>(basis.size()) > 50'000'000)
    throw ResourceBound("sign-representation program too large");
  LPProblem prob;
  for (size_t i = 0; i < basis.size(); ++i) prob.add_variable(false);
  for (long idx = 0; idx < points; ++idx) {
    std::vector<Rational> row(basis.size());
    const Rational fv(f.value_at(idx));
    for (size_t i = 0; i < basis.size(); ++i)
      row[i] = fv * basis_value(f, basis[i], idx);
    prob.add_constraint(std::move(row), Rel::Ge, Rational(1));
  }
  return prob;
}

namespace {

CheckItem exact_item(std::string name, long point, const Rational& margin,
                     bool pass) {
  CheckItem item;
  item.check = std::move(name);
  item.point = point;
  item.status = pass ? CheckStatus::Pass : CheckStatus::Fail;
  item.margin = rational_to_string(margin);
  return item;
}

Rational weighted_l1(const FnSpec& f, const std::vector<Rational>& values) {
  Rational sum(0);
  for (long idx = 0; idx < f.domain_size(); ++idx)
    sum += Rational(f.multiplicity(idx)) * abs(values[idx]);
  return sum;
}

// <psi, basis elem> with class multiplicities.
Rational weighted_moment(const FnSpec& f, const std::vector<Rational>& values,
                         const BasisElem& e) {
  Rational sum(0);
  for (long idx = 0; idx < f.domain_size(); ++idx)
    sum += Rational(f.multiplicity(idx)) * values[idx] * basis_value(f, e, idx);
  return sum;
}

}  // namespace

PropertyReport verify_threshold_witness(const FnSpec& f,
                                        const DualWitness& w) {
  PropertyReport report;
  if (w.values.size() != static_cast<size_t>(f.domain_size()))
    throw UsageError("witness size does not match the function domain");
  const auto basis = polynomial_basis(f, w.phd);
  for (size_t i = 0; i < basis.size(); ++i) {
    const Rational m = weighted_moment(f, w.values, basis[i]);
    report.add(exact_item("pure_high_degree", static_cast<long>(i), m, m == 0));
  }
  for (long idx = 0; idx < f.domain_size(); ++idx) {
    const Rational agree = w.values[idx] * Rational(f.value_at(idx));
    report.add(exact_item("sign_agreement", idx, agree, agree >= 0));
  }
  const Rational norm = weighted_l1(f, w.values);
  report.add(exact_item("nontrivial", 0, norm, norm > 0));
  return report;
}

DualWitness extract_dual_witness(const LPCertificate& cert, const FnSpec& f,
                                 long d) {
  if (cert.status != LPStatus::Infeasible)
    throw MalformedCertificate("witness extraction needs infeasibility");
  if (cert.farkas.size() != static_cast<size_t>(f.domain_size()))
    throw MalformedCertificate("certificate does not match the function");
  DualWitness w;
  w.phd = d;
  w.values.resize(cert.farkas.size());
  Rational total(0);
  for (long idx = 0; idx < f.domain_size(); ++idx) {
    w.values[idx] = cert.farkas[idx] * Rational(f.value_at(idx)) /
                    Rational(f.multiplicity(idx));
    total += cert.farkas[idx];
  }
  if (total <= 0)
    throw MalformedCertificate("certificate touches no constraint");
  for (auto& v : w.values) v /= total;
  if (!verify_threshold_witness(f, w).all_pass())
    throw InternalError("extracted witness failed re-verification");
  return w;
}

ThresholdDegreeResult threshold_degree(const FnSpec& f) {
  std::optional<LPCertificate> last_infeasible;
  for (long d = 0; d <= f.arity(); ++d) {
    const LPProblem prob = threshold_lp(f, d);
    LPCertificate cert = lp_solve(prob);
    if (cert.status == LPStatus::Feasible) {
      ThresholdDegreeResult result;
      result.degree = d;
      result.primal.basis = f.kind();
      result.primal.elems = polynomial_basis(f, d);
      result.primal.coeffs = cert.point;
      if (d >= 1)
        result.dual = extract_dual_witness(*last_infeasible, f, d - 1);
      return result;
    }
    last_infeasible = std::move(cert);
  }
  throw InternalError("no sign-representation at full degree");
}

namespace {

// Rows come in (plus, minus) pairs per representation point, encoding the
// two absolute-value branches of the domination constraints.
LPProblem rational_lp(const FnSpec& f, long d0, long d1, const Rational& eps,
                      const std::vector<BasisElem>& b0,
                      const std::vector<BasisElem>& b1) {
  (void)d0;
  (void)d1;
  LPProblem prob;
  for (size_t i = 0; i < b0.size() + b1.size(); ++i) prob.add_variable(false);
  for (long idx = 0; idx < f.domain_size(); ++idx) {
    const bool one_side = f.value_at(idx) == 1;
    for (int branch = 0; branch < 2; ++branch) {
      std::vector<Rational> row(b0.size() + b1.size());
      const Rational sign(branch == 0 ? -1 : 1);
      for (size_t i = 0; i < b0.size(); ++i) {
        const Rational v = basis_value(f, b0[i], idx);
        row[i] = one_side ? eps * v : sign * v;
      }
      for (size_t i = 0; i < b1.size(); ++i) {
        const Rational v = basis_value(f, b1[i], idx);
        row[b0.size() + i] = one_side ? sign * v : eps * v;
      }
      prob.add_constraint(std::move(row), Rel::Ge, Rational(1));
    }
  }
  return prob;
}

}  // namespace

PropertyReport verify_rational_dual_pair(const FnSpec& f,
                                         const RationalDualPair& pair) {
  PropertyReport report;
  for (long idx = 0; idx < f.domain_size(); ++idx) {
    const bool one_side = f.value_at(idx) == 1;
    const Rational& big = one_side ? pair.psi0[idx] : pair.psi1[idx];
    const Rational& small = one_side ? pair.psi1[idx] : pair.psi0[idx];
    const Rational margin = big - pair.eps * abs(small);
    report.add(exact_item(one_side ? "dominates_on_plus" : "dominates_on_minus",
                          idx, margin, margin >= 0));
  }
  const auto basis0 = polynomial_basis(f, pair.phd0);
  for (size_t i = 0; i < basis0.size(); ++i) {
    const Rational m = weighted_moment(f, pair.psi0, basis0[i]);
    report.add(exact_item("phd_psi0", static_cast<long>(i), m, m == 0));
  }
  const auto basis1 = polynomial_basis(f, pair.phd1);
  for (size_t i = 0; i < basis1.size(); ++i) {
    const Rational m = weighted_moment(f, pair.psi1, basis1[i]);
    report.add(exact_item("phd_psi1", static_cast<long>(i), m, m == 0));
  }
  const Rational n0 = weighted_l1(f, pair.psi0);
  const Rational n1 = weighted_l1(f, pair.psi1);
  report.add(exact_item("nontrivial_psi0", 0, n0, n0 > 0));
  report.add(exact_item("nontrivial_psi1", 0, n1, n1 > 0));
  return report;
}

RationalFeasibility rational_degree_feasible(const FnSpec& f, long d0, long d1,
                                             const Rational& eps) {
  if (eps <= 0) throw UsageError("eps must be positive");
  const auto b0 = polynomial_basis(f, d0);
  const auto b1 = polynomial_basis(f, d1);
  if (f.domain_size() * static_cast<long>(b0.size() + b1.size()) > 25'000'000)
    throw ResourceBound("rational-degree program too large");
  const LPProblem prob = rational_lp(f, d0, d1, eps, b0, b1);
  LPCertificate cert = lp_solve(prob);

  RationalFeasibility result;
  if (cert.status == LPStatus::Feasible) {
    result.feasible = true;
    Polynomial p0, p1;
    p0.basis = p1.basis = f.kind();
    p0.elems = b0;
    p1.elems = b1;
    p0.coeffs.assign(cert.point.begin(),
                     cert.point.begin() + static_cast<long>(b0.size()));
    p1.coeffs.assign(cert.point.begin() + static_cast<long>(b0.size()),
                     cert.point.end());
    for (long idx = 0; idx < f.domain_size(); ++idx) {
      const bool one_side = f.value_at(idx) == 1;
      const Rational big = (one_side ? p0 : p1).value_at(f, idx);
      const Rational small = (one_side ? p1 : p0).value_at(f, idx);
      const Rational margin = eps * big - abs(small);
      result.certificate_report.add(exact_item("strict_domination", idx,
                                               margin, margin > 0));
    }
    result.p0 = std::move(p0);
    result.p1 = std::move(p1);
  } else if (cert.status == LPStatus::Infeasible) {
    RationalDualPair pair;
    pair.eps = eps;
    pair.phd0 = d0;
    pair.phd1 = d1;
    pair.psi0.resize(f.domain_size());
    pair.psi1.resize(f.domain_size());
    Rational scale(0);
    for (long idx = 0; idx < f.domain_size(); ++idx) {
      const Rational y_plus = cert.farkas[2 * idx];
      const Rational y_minus = cert.farkas[2 * idx + 1];
      const Rational mult(f.multiplicity(idx));
      if (f.value_at(idx) == 1) {
        pair.psi0[idx] = eps * (y_plus + y_minus) / mult;
        pair.psi1[idx] = (y_minus - y_plus) / mult;
      } else {
        pair.psi1[idx] = eps * (y_plus + y_minus) / mult;
        pair.psi0[idx] = (y_minus - y_plus) / mult;
      }
    }
    scale = weighted_l1(f, pair.psi0) + weighted_l1(f, pair.psi1);
    if (scale <= 0)
      throw MalformedCertificate("certificate touches no constraint");
    for (auto& v : pair.psi0) v /= scale;
    for (auto& v : pair.psi1) v /= scale;
    result.certificate_report = verify_rational_dual_pair(f, pair);
    if (!result.certificate_report.all_pass())
      throw InternalError("extracted dual pair failed re-verification");
    result.dual = std::move(pair);
  } else {
    throw InternalError("feasibility program reported unbounded");
  }
  return result;
}

long rational_degree_search(const FnSpec& f, const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw UsageError("search needs eps in (0, 1)");
  for (long d = 0; d <= f.arity(); ++d)
    if (rational_degree_feasible(f, d, d, eps).feasible) return d;
  throw InternalError("interpolants must be feasible at full degree");
}

Enclosure rational_degree_value(const FnSpec& f, long d0, long d1,
                                unsigned iters) {
  Rational lo(0), hi(2);  // p0 = p1 = 1 is feasible at eps = 2; eps = 0 never
  for (unsigned i = 0; i < iters; ++i) {
    const Rational mid = (lo + hi) / 2;
    if (mid <= 0) break;
    if (rational_degree_feasible(f, d0, d1, mid).feasible)
      hi = mid;
    else
      lo = mid;
  }
  return Enclosure(lo, hi);
}

}  // namespace srkit
