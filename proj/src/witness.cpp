#include "srkit/witness.hpp"

#include <algorithm>
#include <functional>

#include "constant_cache.hpp"
#include "srkit/combinatorics.hpp"
#include "srkit/errors.hpp"

namespace srkit {

namespace {

long delta_pow(long delta, long i) {
  long r = 1;
  for (long k = 0; k < i; ++k) r *= delta;
  return r;
}

// delta^(k/2) as an exact field element, for any integer k (odd k picks up a
// sqrt(delta) factor).
QuadNum half_power(long delta, long k) {
  if (k % 2 == 0) return QuadNum(pow_rational(Rational(delta), k / 2));
  // Odd k: delta^(k/2) = delta^((k-1)/2) * sqrt(delta); k-1 is even, so the
  // integer division is exact for either sign.
  return QuadNum(Rational(0), pow_rational(Rational(delta), (k - 1) / 2),
                 static_cast<unsigned long>(delta));
}

int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

// Refinement ladder for checks of the form lhs >= c * rhs (rhs >= 0) with c
// known only through an enclosure: passing against the upper endpoint is
// sound for every c below it, failing against the lower endpoint is
// definitive. Anything in between refines; enclosures are intersected down
// the ladder so a verdict can never flip at higher precision.
CheckItem bracket_ge(std::string name, long point, long aux,
                     const QuadNum& lhs, const QuadNum& rhs,
                     const std::function<Enclosure(unsigned)>& constant,
                     unsigned start_bits) {
  CheckItem item;
  item.check = std::move(name);
  item.point = point;
  item.aux = aux;
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
    const QuadNum lower_margin = lhs - QuadNum(c.lo) * rhs;
    if (lower_margin.sign() < 0) {
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
    // Both enclose the same real constant, so the intersection is sound.
    c = Enclosure(std::max(c.lo, next.lo), std::min(c.hi, next.hi));
  }
}

// Same ladder for lhs <= c * rhs (rhs >= 0).
CheckItem bracket_le(std::string name, long point, long aux,
                     const QuadNum& lhs, const QuadNum& rhs,
                     const std::function<Enclosure(unsigned)>& constant,
                     unsigned start_bits) {
  CheckItem item;
  item.check = std::move(name);
  item.point = point;
  item.aux = aux;
  Enclosure c = constant(start_bits);
  for (unsigned b = start_bits;; b *= 2) {
    item.refinement.push_back(b);
    item.bits_used = b;
    const QuadNum lower_margin = QuadNum(c.lo) * rhs - lhs;
    if (lower_margin.sign() >= 0) {
      item.status = CheckStatus::Pass;
      item.margin = lower_margin.str();
      return item;
    }
    const QuadNum upper_margin = QuadNum(c.hi) * rhs - lhs;
    if (upper_margin.sign() < 0) {
      item.status = CheckStatus::Fail;
      item.margin = lower_margin.str();
      return item;
    }
    if (b >= kMaxBits) {
      item.status = CheckStatus::Undecided;
      item.margin = lower_margin.str();
      return item;
    }
    Enclosure next = constant(b * 2);
    c = Enclosure(std::max(c.lo, next.lo), std::min(c.hi, next.hi));
  }
}

CheckItem exact_check(std::string name, long point, long aux,
                      const QuadNum& margin, bool pass) {
  CheckItem item;
  item.check = std::move(name);
  item.point = point;
  item.aux = aux;
  item.status = pass ? CheckStatus::Pass : CheckStatus::Fail;
  item.margin = margin.str();
  return item;
}

}  // namespace

Enclosure domination_floor(long delta_int, unsigned bits) {
  const Enclosure s = sqrt_enclosure(Integer(delta_int), bits);
  const Enclosure arg(Rational(-18) / s.lo, Rational(-18) / s.hi);
  return exp_over(arg, bits);
}

Enclosure positive_mass_scale(long delta_int, unsigned bits) {
  const Enclosure s = sqrt_enclosure(Integer(delta_int), bits);
  const Enclosure arg(Rational(-18) / s.lo - 4, Rational(-18) / s.hi - 4);
  return exp_over(arg, bits);
}

WitnessParams witness_params(long n, long d, unsigned bits) {
  if (n % 2 == 0) throw EvenN(n);
  if (d < 1 || pow_integer(8, static_cast<unsigned long>(d)) > n)
    throw DegreeOutOfRange(d, n);
  WitnessParams p;
  p.n = n;
  p.d = d;
  p.bits = bits;
  p.delta_int = int_root(Integer(n), static_cast<unsigned long>(3 * d)).get_si();
  if (p.delta_int < 2) throw InternalError("radicand below 2 despite 8^d <= n");
  p.u_max = int_root(Integer(n) * Integer(n), 3).get_si();
  if (p.u_max < 1) throw InternalError("empty block range");
  if (Integer(p.u_max) * pow_integer(p.delta_int,
                                     static_cast<unsigned long>(d - 1)) >
      Integer(n))
    throw InternalError("support exceeds the grid");
  p.delta_enc = domination_floor(p.delta_int, bits);
  return p;
}

std::vector<long> support_set(long u, const WitnessParams& p) {
  if (u < 1 || u > p.u_max)
    throw UsageError("u=" + std::to_string(u) + " outside [1, " +
                     std::to_string(p.u_max) + "]");
  std::vector<long> s;
  s.reserve(2 * p.d);
  for (long i = 0; i < p.d; ++i) {
    const long m = u * delta_pow(p.delta_int, i);
    s.push_back(m);
    s.push_back(-m);
  }
  std::sort(s.begin(), s.end());
  return s;
}

QuadNum eval_p_u(long u, long t, const WitnessParams& p) {
  if (t < -p.n || t > p.n)
    throw UsageError("t=" + std::to_string(t) + " outside the grid");
  const std::vector<long> s = support_set(u, p);
  if (!std::binary_search(s.begin(), s.end(), t)) return QuadNum();
  QuadNum num(Rational(parity_sign(p.n - t)));
  for (long i = 0; i < p.d; ++i) {
    const Rational root_coeff(-u * delta_pow(p.delta_int, i));
    num *= QuadNum(Rational(t), root_coeff,
                   static_cast<unsigned long>(p.delta_int));
  }
  Integer den(1);
  for (long x : s)
    if (x != t) den *= Integer(t - x);
  return num / QuadNum(Rational(den));
}

QuadNum eval_r_u(long u, long t, const WitnessParams& p) {
  const QuadNum pu = eval_p_u(u, t, p);
  if (pu.is_zero()) return pu;
  return pu / QuadNum(Rational(binomial(2 * p.n, p.n + t)));
}

QuadNum p_u_l1(long u, const WitnessParams& p) {
  QuadNum sum;
  for (long t : support_set(u, p)) sum += eval_p_u(u, t, p).abs();
  return sum;
}

WitnessCert build_witness(const WitnessParams& p) {
  GridFn combined(p.n);
  for (long u = 1; u <= p.u_max; ++u) {
    const QuadNum norm = p_u_l1(u, p);
    const QuadNum weight(pow_rational(Rational(u), 20));
    for (long t : support_set(u, p))
      combined.add(t, weight * eval_p_u(u, t, p) / norm);
  }
  const QuadNum total = combined.l1_norm();
  WitnessCert cert;
  cert.params = p;
  cert.R = GridFn(p.n);
  for (const auto& [t, v] : combined.entries())
    cert.R.set(t, QuadNum(Rational(parity_sign(t))) * v / total);
  return cert;
}

PropertyReport verify_witness(const WitnessCert& cert, unsigned bits) {
  const WitnessParams& p = cert.params;
  const GridFn& R = cert.R;
  PropertyReport report;

  // (a) exact unit l1 norm.
  const QuadNum norm = R.l1_norm();
  report.add(exact_check("l1_norm", 0, 0, norm - QuadNum(1),
                         norm == QuadNum(1)));

  // (b) one-sided domination against the upper enclosure endpoint.
  ConstantCache floor_cache([&p](unsigned b) {
    return domination_floor(p.delta_int, b);
  });
  const auto floor_enc = floor_cache.as_fn();
  for (long t = 1; t <= p.n; ++t)
    report.add(bracket_ge("domination", t, 0, R.value(t),
                          R.value(-t).abs(), floor_enc, bits));

  // (c) exact orthogonality to powers t^k, k <= d-2; the top degree k = d-2
  // is reported under its own label.
  for (long k = 0; k <= p.d - 2; ++k) {
    QuadNum moment;
    for (const auto& [t, v] : R.entries())
      moment += v * QuadNum(pow_rational(Rational(t), k));
    report.add(exact_check(
        k == p.d - 2 ? "orthogonality_top" : "orthogonality", k, 0, moment,
        moment.is_zero()));
  }

  // (d) smoothness floors on [-u_max, -1] and [1, u_max].
  const Rational neg_floor =
      Rational(20) / Rational(pow_integer(Integer(p.n), 20));
  for (long t = -p.u_max; t <= -1; ++t) {
    const QuadNum margin = R.value(t).abs() - QuadNum(neg_floor);
    report.add(exact_check("smoothness_neg", t, 0, margin,
                           margin.sign() >= 0));
  }
  const Rational scale8n15 =
      Rational(8) * Rational(pow_integer(Integer(p.n), 15));
  ConstantCache pos_cache([](unsigned b) { return positive_mass_scale(2, b); });
  ConstantCache stated_cache(
      [](unsigned b) { return exp_enclosure(Rational(-15), b); });
  const auto pos_scale = pos_cache.as_fn();
  const auto stated_scale = stated_cache.as_fn();
  for (long t = 1; t <= p.u_max; ++t) {
    const QuadNum lhs = R.value(t).abs() * QuadNum(scale8n15);
    report.add(bracket_ge("smoothness_pos", t, 0, lhs, QuadNum(1), pos_scale,
                          bits));
    report.add(bracket_ge("smoothness_pos_stated", t, 0, lhs, QuadNum(1),
                          stated_scale, bits));
  }

  // (e) the grid center is zero by construction and exempt from (d).
  CheckItem zero;
  zero.check = "zero_point";
  zero.status =
      R.value(0).is_zero() ? CheckStatus::Exempt : CheckStatus::Fail;
  zero.margin = R.value(0).str();
  report.add(zero);

  return report;
}

PropertyReport verify_claims(const WitnessParams& p, unsigned bits) {
  PropertyReport report;
  const long delta = p.delta_int;
  const Rational delta_sq_8 = Rational(8) * Rational(delta) * Rational(delta);
  ConstantCache e4_cache([](unsigned b) { return exp_enclosure(Rational(4), b); });
  ConstantCache floor_cache(
      [delta](unsigned b) { return domination_floor(delta, b); });
  ConstantCache mass_cache(
      [delta](unsigned b) { return positive_mass_scale(delta, b); });
  const auto e4 = e4_cache.as_fn();
  const auto floor_enc = floor_cache.as_fn();
  const auto mass_scale = mass_cache.as_fn();

  // (sqrt(delta)+1)/2 * u^-(d-1) * delta^-((d-1)^2/2), the claim2 floor.
  const auto claim2_rhs = [&](long u) {
    return QuadNum(Rational(1, 2), Rational(1, 2),
                   static_cast<unsigned long>(delta)) *
           QuadNum(pow_rational(Rational(u), -(p.d - 1))) *
           half_power(delta, -(p.d - 1) * (p.d - 1));
  };

  for (long u = 1; u <= p.u_max; ++u) {
    std::vector<QuadNum> pos(p.d), neg(p.d);  // |p_u(+-u delta^j)|
    for (long j = 0; j < p.d; ++j) {
      const long point = u * delta_pow(delta, j);
      pos[j] = eval_p_u(u, point, p).abs();
      neg[j] = eval_p_u(u, -point, p).abs();
    }
    const QuadNum norm = p_u_l1(u, p);

    {
      const QuadNum margin = neg[0] - claim2_rhs(u);
      report.add(exact_check("claim2", u, 0, margin, margin.sign() >= 0));
    }

    for (long j = 1; j < p.d; ++j)
      report.add(bracket_le("claim3", u, j, neg[j],
                            half_power(delta, -(j * j - 3 * j - 2)) *
                                claim2_rhs(u),
                            e4, bits));

    for (long j = 0; j < p.d; ++j) {
      const long point = u * delta_pow(delta, j);
      const QuadNum binom(Rational(binomial(2 * p.n, p.n + point)));
      const QuadNum margin_p = neg[j] - pos[j];
      report.add(
          exact_check("claim4_exact_p", u, j, margin_p, margin_p.sign() >= 0));
      const QuadNum margin_r = margin_p / binom;
      report.add(
          exact_check("claim4_exact_r", u, j, margin_r, margin_r.sign() >= 0));
      report.add(bracket_ge("claim4_ratio_p", u, j, pos[j], neg[j], floor_enc,
                            bits));
      report.add(bracket_ge("claim4_ratio_r", u, j, pos[j] / binom,
                            neg[j] / binom, floor_enc, bits));
    }

    // ||p_u||_1 <= 8 delta^2 e^4 |p_u(-u)|.
    report.add(bracket_le("lemma1_mass", u, 0, norm,
                          neg[0] * QuadNum(delta_sq_8), e4, bits));
    // |p_u(u)| * 8 delta^2 >= exp(-18/sqrt(delta)-4) ||p_u||_1.
    report.add(bracket_ge("lemma1_positive", u, 0,
                          pos[0] * QuadNum(delta_sq_8), norm, mass_scale,
                          bits));
  }
  return report;
}

Rational check_combinatorial_identity(long n,
                                      const std::vector<Rational>& coeffs) {
  Rational sum(0);
  for (long t = -n; t <= n; ++t) {
    Rational pt(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      pt = pt * Rational(t) + *it;
    sum += Rational(parity_sign(t)) * Rational(binomial(2 * n, n + t)) * pt;
  }
  return sum;
}

}  // namespace srkit
