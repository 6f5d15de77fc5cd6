#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srkit/errors.hpp"
#include "srkit/witness.hpp"
#include "testutil.hpp"

using namespace srkit;

namespace {

Integer weight_sum(long u_max) {  // sum of u^20
  Integer s(0);
  for (long u = 1; u <= u_max; ++u) s += pow_integer(Integer(u), 20);
  return s;
}

// Coefficients of prod (t - root) over the given quadratic roots and integer
// roots, lowest degree first.
std::vector<QuadNum> expand_poly(const std::vector<QuadNum>& roots) {
  std::vector<QuadNum> coeffs{QuadNum(1)};
  for (const QuadNum& r : roots) {
    std::vector<QuadNum> next(coeffs.size() + 1);
    for (size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= r * coeffs[i];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace

TEST_CASE("witness parameters") {
  const WitnessParams p9 = witness_params(9, 1);
  CHECK(p9.delta_int == 2);
  CHECK(p9.u_max == 4);

  const WitnessParams p65 = witness_params(65, 2);
  CHECK(p65.delta_int == 2);
  CHECK(p65.u_max == 16);

  const WitnessParams p31 = witness_params(31, 1);
  CHECK(p31.delta_int == 3);
  CHECK(p31.u_max == 9);

  const WitnessParams p513 = witness_params(513, 3);
  CHECK(p513.delta_int == 2);
  CHECK(p513.u_max == 64);

  CHECK_THROWS_AS(witness_params(8, 1), EvenN);
  CHECK_THROWS_AS(witness_params(9, 2), DegreeOutOfRange);
  CHECK_THROWS_AS(witness_params(9, 0), DegreeOutOfRange);
  CHECK_THROWS_AS(witness_params(7, 1), DegreeOutOfRange);  // 8^1 > 7
}

TEST_CASE("support sets") {
  const WitnessParams p65 = witness_params(65, 2);
  CHECK(support_set(1, p65) == std::vector<long>{-2, -1, 1, 2});

  const WitnessParams p513 = witness_params(513, 3);
  CHECK(support_set(3, p513) == std::vector<long>{-12, -6, -3, 3, 6, 12});

  const WitnessParams p9 = witness_params(9, 1);
  CHECK(support_set(1, p9) == std::vector<long>{-1, 1});
  CHECK_THROWS_AS(support_set(5, p9), UsageError);
  CHECK_THROWS_AS(support_set(0, p9), UsageError);
}

TEST_CASE("closed-form block values at the smallest instance") {
  const WitnessParams p = witness_params(9, 1);
  CHECK(eval_p_u(1, 1, p) == QuadNum(Rational(1, 2), Rational(-1, 2), 2));
  CHECK(eval_p_u(1, -1, p) == QuadNum(Rational(1, 2), Rational(1, 2), 2));
  CHECK(eval_p_u(1, 5, p).is_zero());
  CHECK(eval_p_u(2, 9, p).is_zero());
  CHECK_THROWS_AS(eval_p_u(1, 10, p), UsageError);

  // ||p_u||_1 = sqrt(2) for every u when the support is one +- pair.
  for (long u = 1; u <= p.u_max; ++u)
    CHECK(p_u_l1(u, p) == QuadNum::sqrt_of(2));
}

TEST_CASE("sign law on the positive support") {
  for (const auto& [n, d] : std::vector<std::pair<long, long>>{
           {9, 1}, {31, 1}, {65, 2}, {513, 3}}) {
    const WitnessParams p = witness_params(n, d);
    for (long u = 1; u <= p.u_max; ++u)
      for (long t : support_set(u, p)) {
        if (t <= 0) continue;
        REQUIRE(quad_sign(eval_p_u(u, t, p)) == (t % 2 == 0 ? 1 : -1));
      }
  }
}

TEST_CASE("r_u is p_u with the binomial weight divided out") {
  const WitnessParams p = witness_params(9, 1);
  for (long u = 1; u <= p.u_max; ++u)
    for (long t = -p.n; t <= p.n; ++t) {
      const QuadNum lhs = eval_p_u(u, t, p);
      const QuadNum rhs =
          QuadNum(Rational(binomial(2 * p.n, p.n + t))) * eval_r_u(u, t, p);
      REQUIRE(lhs == rhs);
    }
  CHECK(quad_sign(eval_r_u(1, 1, p)) == -1);
}

TEST_CASE("norms by direct grid summation match the support sums") {
  for (long n : {9L, 15L}) {
    const WitnessParams p = witness_params(n, 1);
    for (long u = 1; u <= p.u_max; ++u) {
      QuadNum direct;
      for (long t = -p.n; t <= p.n; ++t) direct += eval_p_u(u, t, p).abs();
      REQUIRE(direct == p_u_l1(u, p));
    }
  }
}

TEST_CASE("witness construction at (9,1): frozen values") {
  const WitnessParams p = witness_params(9, 1);
  const WitnessCert cert = build_witness(p);

  CHECK(cert.R.support() ==
        std::vector<long>{-4, -3, -2, -1, 1, 2, 3, 4});
  CHECK(cert.R.l1_norm() == QuadNum(1));
  CHECK(cert.R.value(0).is_zero());

  const Rational S(weight_sum(4));
  // R(1) = (2 - sqrt(2)) / (4 S), R(-1) = -(2 + sqrt(2)) / (4 S).
  CHECK(S == Rational(Integer("1102999460754")));
  CHECK(cert.R.value(1) ==
        QuadNum(Rational(1) / (2 * S), Rational(-1) / (4 * S), 2));
  CHECK(cert.R.value(-1) ==
        QuadNum(Rational(-1) / (2 * S), Rational(-1) / (4 * S), 2));
  CHECK(cert.R.value(1).sign() > 0);
  CHECK(cert.R.value(-1).sign() < 0);

  // Disjoint supports at d = 1: the block masses split the total exactly as
  // u^20 / (sum of u^20).
  for (long u = 1; u <= 4; ++u) {
    const QuadNum mass = cert.R.value(u).abs() + cert.R.value(-u).abs();
    REQUIRE(mass == QuadNum(Rational(pow_integer(Integer(u), 20)) / S));
  }
}

TEST_CASE("witness verification passes on built instances") {
  for (const auto& [n, d] :
       std::vector<std::pair<long, long>>{{9, 1}, {65, 2}}) {
    WitnessCert cert = build_witness(witness_params(n, d));
    // Aggregated sign law: every summand of (-1)^t P(t) is nonnegative on
    // the positive half-grid, so R(t) >= 0 for t >= 1.
    for (long t = 1; t <= n; ++t) REQUIRE(cert.R.value(t).sign() >= 0);
    const PropertyReport report = verify_witness(cert);
    CAPTURE(n);
    CHECK(report.all_pass());
    bool saw_exempt = false;
    for (const auto& item : report.items)
      if (item.check == "zero_point") {
        CHECK(item.status == CheckStatus::Exempt);
        saw_exempt = true;
      }
    CHECK(saw_exempt);
  }
}

TEST_CASE("orthogonality is exact and cross-checks per block") {
  const WitnessParams p = witness_params(65, 2);
  const WitnessCert cert = build_witness(p);

  QuadNum moment;
  for (const auto& [t, v] : cert.R.entries()) moment += v;
  CHECK(moment.is_zero());

  // Per-block cross-check through the alternating-binomial identity: split
  // r_u (up to the constant (2n)! scale) into rational and radical
  // coefficient parts, both of degree 2n+1-d < 2n.
  for (long u : {1L, 2L, 7L, 16L}) {
    std::vector<QuadNum> roots;
    const auto support = support_set(u, p);
    for (long i = 0; i < p.d; ++i) {
      long point = u;
      for (long q = 0; q < i; ++q) point *= p.delta_int;
      roots.push_back(QuadNum(Rational(0), Rational(point), 2));
    }
    for (long s = -p.n; s <= p.n; ++s)
      if (!std::binary_search(support.begin(), support.end(), s))
        roots.push_back(QuadNum(Rational(s)));
    const auto coeffs = expand_poly(roots);
    REQUIRE(coeffs.size() == static_cast<size_t>(2 * p.n + 2 - p.d));
    std::vector<Rational> a_part, b_part;
    for (const auto& c : coeffs) {
      a_part.push_back(c.rational_part());
      b_part.push_back(c.radical_part());
    }
    REQUIRE(check_combinatorial_identity(p.n, a_part) == 0);
    REQUIRE(check_combinatorial_identity(p.n, b_part) == 0);
  }
}

TEST_CASE("mutated witnesses fail the named property") {
  WitnessCert cert = build_witness(witness_params(9, 1));

  SUBCASE("negating a positive-side value breaks domination") {
    cert.R.set(3, -cert.R.value(3));
    const PropertyReport report = verify_witness(cert);
    bool found = false;
    for (const auto& item : report.items)
      if (item.check == "domination" && item.point == 3) {
        CHECK(item.status == CheckStatus::Fail);
        CHECK(item.margin.substr(0, 1) == "-");
        found = true;
      }
    CHECK(found);
  }

  SUBCASE("the all-zero function fails the unit-norm check") {
    WitnessCert zero;
    zero.params = cert.params;
    zero.R = GridFn(9);
    const PropertyReport report = verify_witness(zero);
    const CheckItem* failure = report.first_failure();
    REQUIRE(failure != nullptr);
    CHECK(failure->check == "l1_norm");
  }

  SUBCASE("scaling the function breaks the unit norm only") {
    for (long t : cert.R.support()) cert.R.set(t, cert.R.value(t) * QuadNum(2));
    const PropertyReport report = verify_witness(cert);
    CHECK(report.any_fail());
    const CheckItem* failure = report.first_failure();
    REQUIRE(failure != nullptr);
    CHECK(failure->check == "l1_norm");
  }
}

TEST_CASE("refinement ladder resolves a value between enclosure endpoints") {
  // Handcraft R(1) barely above the 128-bit upper endpoint region: with the
  // value pinned between the loose endpoints, the check must refine and then
  // pass, never flip.
  const WitnessParams p = witness_params(9, 1);
  const Enclosure coarse = domination_floor(2, 8);
  REQUIRE(coarse.width() > 0);
  const Rational mid = (coarse.lo + coarse.hi) / 2;

  WitnessCert cert;
  cert.params = p;
  cert.R = GridFn(9);
  cert.R.set(-1, QuadNum(Rational(-1, 2)));
  cert.R.set(1, QuadNum(mid / 2));
  const PropertyReport report = verify_witness(cert, 8);
  for (const auto& item : report.items)
    if (item.check == "domination" && item.point == 1) {
      CHECK(item.status == CheckStatus::Pass);
      CHECK(item.refinement.size() > 1);
      CHECK(item.bits_used > 8);
    }
}

TEST_CASE("claims hold with the documented equalities at d = 1") {
  const WitnessParams p = witness_params(9, 1);
  const PropertyReport report = verify_claims(p);
  CHECK(report.all_pass());
  CHECK_FALSE(report.any_undecided());

  for (const auto& item : report.items) {
    if (item.check == "claim2")
      CHECK(item.margin == "0/1");  // equality: both correction factors are 1
  }

  // Claim-4 ratio at u = 1: |p(1)| = (3 - 2 sqrt(2)) |p(-1)| exactly.
  const QuadNum ratio_applied =
      QuadNum(Rational(3), Rational(-2), 2) * eval_p_u(1, -1, p).abs();
  CHECK(ratio_applied == eval_p_u(1, 1, p).abs());

  // Lemma-1 mass shape at d = 1: ||p_u||_1 = (4 - 2 sqrt(2)) |p_u(-u)| < 2.
  const QuadNum mass_ratio = QuadNum(Rational(4), Rational(-2), 2);
  CHECK(p_u_l1(1, p) == mass_ratio * eval_p_u(1, -1, p).abs());
  CHECK(mass_ratio < QuadNum(2));
}

TEST_CASE("claims pass on a degree-3 instance") {
  const PropertyReport report = verify_claims(witness_params(513, 3));
  CHECK(report.all_pass());
  CHECK_FALSE(report.any_undecided());
}

TEST_CASE("alternating binomial identity") {
  // Degree < 2n vanishes; degree exactly 2n does not.
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      CHECK(check_combinatorial_identity(
                1, {Rational(a), Rational(b)}) == 0);
  CHECK(check_combinatorial_identity(
            2, {Rational(0), Rational(0), Rational(0), Rational(1)}) == 0);
  CHECK(check_combinatorial_identity(1, {Rational(0), Rational(0),
                                         Rational(1)}) == -2);
}
