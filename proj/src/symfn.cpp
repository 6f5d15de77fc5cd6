#include "srkit/symfn.hpp"

#include <algorithm>
#include <functional>

#include "constant_cache.hpp"
#include "srkit/combinatorics.hpp"
#include "srkit/errors.hpp"

namespace srkit {

SymFn::SymFn(long m) : m_(m) {
  if (m < 0) throw UsageError("cube dimension must be nonnegative");
}

void SymFn::check_class(long k) const {
  if (k < 0 || k > m_)
    throw UsageError("weight class " + std::to_string(k) + " outside [0, " +
                     std::to_string(m_) + "]");
}

const QuadNum& SymFn::weight_value(long k) const {
  check_class(k);
  static const QuadNum zero;
  auto it = values_.find(k);
  return it == values_.end() ? zero : it->second;
}

void SymFn::set(long k, const QuadNum& v) {
  check_class(k);
  if (v.is_zero())
    values_.erase(k);
  else
    values_[k] = v;
}

QuadNum SymFn::l1_norm() const {
  QuadNum sum;
  for (const auto& [k, v] : values_)
    sum += QuadNum(Rational(binomial(m_, k))) * v.abs();
  return sum;
}

SymFn lift_grid(const GridFn& r) {
  const long n = r.n();
  SymFn lifted(2 * n);
  for (const auto& [t, v] : r.entries())
    lifted.set(n - t, v / QuadNum(Rational(binomial(2 * n, n - t))));
  return lifted;
}

SymFn lift_witness(const WitnessCert& cert) { return lift_grid(cert.R); }

namespace {

CheckItem exact_item(std::string name, long point, const QuadNum& margin,
                     bool pass) {
  CheckItem item;
  item.check = std::move(name);
  item.point = point;
  item.status = pass ? CheckStatus::Pass : CheckStatus::Fail;
  item.margin = margin.str();
  return item;
}

// Shared refinement ladder: lhs >= c * rhs with c enclosed; pass against the
// upper endpoint, definite fail against the lower, refine in between.
CheckItem bracket_ge(std::string name, long point, const QuadNum& lhs,
                     const QuadNum& rhs,
                     const std::function<Enclosure(unsigned)>& constant,
                     unsigned start_bits) {
  CheckItem item;
  item.check = std::move(name);
  item.point = point;
  Enclosure c = constant(start_bits);
  for (unsigned b = start_bits;; b *= 2) {
    item.refinement.push_back(b);
    item.bits_used = b;
    const QuadNum upper_margin = lhs - QuadNum(c.hi) * rhs;
    if (upper_margin.sign() >= 0) {
      item.status = CheckStatus::Pass;
      item.margin = upper_margin.str();
      return item;
    }
    if ((lhs - QuadNum(c.lo) * rhs).sign() < 0) {
      item.status = CheckStatus::Fail;
      item.margin = upper_margin.str();
      return item;
    }
    if (b >= kMaxBits) {
      item.status = CheckStatus::Undecided;
      item.margin = upper_margin.str();
      return item;
    }
    Enclosure next = constant(b * 2);
    c = Enclosure(std::max(c.lo, next.lo), std::min(c.hi, next.hi));
  }
}

}  // namespace

PropertyReport verify_lift(const WitnessCert& cert, const SymFn& lifted,
                           unsigned bits) {
  const WitnessParams& p = cert.params;
  const long n = p.n;
  PropertyReport report;

  const QuadNum norm = lifted.l1_norm();
  report.add(exact_item("lift_l1", 0, norm - QuadNum(1), norm == QuadNum(1)));

  ConstantCache floor_cache([&p](unsigned b) {
    return domination_floor(p.delta_int, b);
  });
  const auto floor_enc = floor_cache.as_fn();
  for (long t = 1; t <= n; ++t)
    report.add(bracket_ge("lift_domination", t, lifted.weight_value(n - t),
                          lifted.weight_value(n + t).abs(), floor_enc, bits));

  const auto moments = orthogonality_symmetric(lifted, p.d - 2);
  for (size_t j = 0; j < moments.size(); ++j)
    report.add(exact_item("lift_phd", static_cast<long>(j), moments[j],
                          moments[j].is_zero()));

  // Smoothness in weight form: |R'[k]| * C(2n,k) is the grid value |R(n-k)|,
  // checked against the side's floor; the 2^-2n relaxation follows since
  // C(2n,k) <= 2^2n but is asserted explicitly as well.
  const Rational neg_floor =
      Rational(20) / Rational(pow_integer(Integer(n), 20));
  const Rational scale8n15 =
      Rational(8) * Rational(pow_integer(Integer(n), 15));
  ConstantCache pos_cache([](unsigned b) { return positive_mass_scale(2, b); });
  const auto pos_scale = pos_cache.as_fn();
  Rational two_pow_2n(1);
  two_pow_2n.get_num() <<= 2 * n;
  for (long k = n - p.u_max; k <= n + p.u_max; ++k) {
    if (k == n) continue;
    const QuadNum grid_mass =
        lifted.weight_value(k).abs() * QuadNum(Rational(binomial(2 * n, k)));
    const QuadNum cube_mass = lifted.weight_value(k).abs() * two_pow_2n;
    if (k > n) {  // negative grid side
      report.add(exact_item("lift_smoothness_neg", k,
                            grid_mass - QuadNum(neg_floor),
                            (grid_mass - QuadNum(neg_floor)).sign() >= 0));
      report.add(exact_item("lift_smoothness_neg_cube", k,
                            cube_mass - QuadNum(neg_floor),
                            (cube_mass - QuadNum(neg_floor)).sign() >= 0));
    } else {
      report.add(bracket_ge("lift_smoothness_pos", k,
                            grid_mass * QuadNum(scale8n15), QuadNum(1),
                            pos_scale, bits));
      report.add(bracket_ge("lift_smoothness_pos_cube", k,
                            cube_mass * QuadNum(scale8n15), QuadNum(1),
                            pos_scale, bits));
    }
  }

  const QuadNum center = lifted.weight_value(n);
  CheckItem zero;
  zero.check = "lift_zero_class";
  zero.point = n;
  zero.status = center.is_zero() ? CheckStatus::Exempt : CheckStatus::Fail;
  zero.margin = center.str();
  report.add(zero);

  return report;
}

PsiPair build_psi_pair(const WitnessCert& cert) {
  const long n = cert.params.n;
  GridFn reflected(n);
  for (const auto& [t, v] : cert.R.entries()) reflected.set(-t, v);

  PsiPair pair;
  pair.psi1 = lift_grid(cert.R);
  pair.psi0 = lift_grid(reflected);
  pair.delta_int = cert.params.delta_int;
  pair.delta_enc = cert.params.delta_enc;
  pair.phd_target = cert.params.d - 2;
  if (pair.psi0.l1_norm() != QuadNum(1) || pair.psi1.l1_norm() != QuadNum(1))
    throw InternalError("psi pair should arrive l1-normalized");
  return pair;
}

PsiVerifyResult verify_psi_pair(const PsiPair& pair, unsigned bits) {
  const long m = pair.psi0.m();
  const long n = m / 2;
  PsiVerifyResult result;
  PropertyReport& report = result.report;

  const QuadNum norm0 = pair.psi0.l1_norm();
  const QuadNum norm1 = pair.psi1.l1_norm();
  report.add(exact_item("psi_nontrivial", 0, norm0, norm0.sign() > 0));
  report.add(exact_item("psi_nontrivial", 1, norm1, norm1.sign() > 0));
  report.add(exact_item("psi_l1", 0, norm0 - QuadNum(1), norm0 == QuadNum(1)));
  report.add(exact_item("psi_l1", 1, norm1 - QuadNum(1), norm1 == QuadNum(1)));

  for (long k = 0; k <= m; ++k) {
    const QuadNum diff =
        pair.psi0.weight_value(k) - pair.psi1.weight_value(m - k);
    report.add(exact_item("psi_reflection", k, diff, diff.is_zero()));
  }

  ConstantCache floor_cache([&pair](unsigned b) {
    return domination_floor(pair.delta_int, b);
  });
  const auto floor_enc = floor_cache.as_fn();
  // Orientation A: classes above the center belong to f = 1 (so psi0
  // dominates there); orientation B is the swap.
  const auto orientation_report = [&](const SymFn& hi_side,
                                      const SymFn& lo_side,
                                      const std::string& label) {
    PropertyReport r;
    for (long k = 0; k <= m; ++k) {
      if (k == n) {
        const bool both_zero = hi_side.weight_value(k).is_zero() &&
                               lo_side.weight_value(k).is_zero();
        r.add(exact_item(label + "_boundary", k, hi_side.weight_value(k),
                         both_zero));
        continue;
      }
      const SymFn& big = (k > n) ? hi_side : lo_side;
      const SymFn& small = (k > n) ? lo_side : hi_side;
      r.add(bracket_ge(label, k, big.weight_value(k),
                       small.weight_value(k).abs(), floor_enc, bits));
    }
    return r;
  };

  PropertyReport a =
      orientation_report(pair.psi0, pair.psi1, "psi_orientation");
  if (a.all_pass()) {
    result.orientation = "weight>=n+1 maps to +1";
    report.append(a);
  } else {
    PropertyReport b =
        orientation_report(pair.psi1, pair.psi0, "psi_orientation");
    if (b.all_pass()) {
      result.orientation = "weight>=n+1 maps to -1";
      report.append(b);
    } else {
      result.orientation = "none";
      report.append(a);
    }
  }

  for (int side = 0; side <= 1; ++side) {
    const SymFn& psi = side == 0 ? pair.psi0 : pair.psi1;
    const auto moments = orthogonality_symmetric(psi, pair.phd_target);
    for (size_t j = 0; j < moments.size(); ++j) {
      CheckItem item = exact_item("psi_phd", static_cast<long>(j), moments[j],
                                  moments[j].is_zero());
      item.aux = side;
      report.add(item);
    }
  }

  return result;
}

std::vector<QuadNum> orthogonality_symmetric(const SymFn& g, long kmax) {
  std::vector<QuadNum> moments;
  if (kmax > g.m())
    throw UsageError("moment degree exceeds the cube dimension");
  if (kmax < 0) return moments;
  moments.reserve(static_cast<size_t>(kmax) + 1);
  for (long j = 0; j <= kmax; ++j) {
    QuadNum sum;
    for (const auto& [k, v] : g.entries()) {
      const Rational count(binomial(g.m(), k));
      sum += QuadNum(count * pow_rational(Rational(g.m() - 2 * k), j)) * v;
    }
    moments.push_back(sum);
  }
  return moments;
}

Rational weight_fraction_in_band(long n, long width) {
  if (width < 0 || width > n)
    throw UsageError("band width outside [0, n]");
  Integer count(0);
  for (long k = n - width; k <= n + width; ++k) count += binomial(2 * n, k);
  Rational denom(1);
  denom.get_num() <<= 2 * n;
  return Rational(count) / denom;
}

}  // namespace srkit
