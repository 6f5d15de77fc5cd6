#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "srkit/errors.hpp"
#include "srkit/symfn.hpp"
#include "testutil.hpp"

using namespace srkit;

TEST_CASE("lifting telescopes the l1 norm exactly") {
  for (const auto& [n, d] :
       std::vector<std::pair<long, long>>{{9, 1}, {65, 2}}) {
    const WitnessCert cert = build_witness(witness_params(n, d));
    const SymFn lifted = lift_witness(cert);
    CAPTURE(n);
    CHECK(lifted.m() == 2 * n);
    CHECK(lifted.l1_norm() == QuadNum(1));
    CHECK(lifted.weight_value(n).is_zero());
    // Weight class n-1 carries R(1)/C(2n, n-1).
    CHECK(lifted.weight_value(n - 1) ==
          cert.R.value(1) / QuadNum(Rational(binomial(2 * n, n - 1))));
  }
}

TEST_CASE("lift report passes and domination matches the grid pair form") {
  const WitnessCert cert = build_witness(witness_params(9, 1));
  const SymFn lifted = lift_witness(cert);
  const PropertyReport report = verify_lift(cert, lifted, kDefaultBits);
  CHECK(report.all_pass());

  // Equal binomials on both sides of each pair: the weight-form domination
  // at classes (n-1, n+1) is exactly the grid fact R(1) >= dbar |R(-1)|.
  const Enclosure dbar = domination_floor(2, kDefaultBits);
  const QuadNum lhs = lifted.weight_value(8) * QuadNum(Rational(binomial(18, 8)));
  const QuadNum rhs =
      lifted.weight_value(10).abs() * QuadNum(Rational(binomial(18, 10)));
  CHECK(binomial(18, 8) == binomial(18, 10));
  CHECK(lhs - QuadNum(dbar.hi) * rhs == cert.R.value(1) - QuadNum(dbar.hi) * cert.R.value(-1).abs());
}

TEST_CASE("psi pair construction and verification") {
  for (const auto& [n, d] :
       std::vector<std::pair<long, long>>{{9, 1}, {65, 2}}) {
    const WitnessCert cert = build_witness(witness_params(n, d));
    const PsiPair pair = build_psi_pair(cert);
    CAPTURE(n);

    CHECK(pair.psi0.l1_norm() == QuadNum(1));
    CHECK(pair.psi1.l1_norm() == QuadNum(1));
    CHECK(pair.psi0.weight_value(n).is_zero());
    CHECK(pair.psi1.weight_value(n).is_zero());
    for (long k = 0; k <= 2 * n; ++k)
      REQUIRE(pair.psi0.weight_value(k) == pair.psi1.weight_value(2 * n - k));

    const PsiVerifyResult result = verify_psi_pair(pair);
    CHECK(result.report.all_pass());
    CHECK(result.orientation == "weight>=n+1 maps to +1");
  }
}

TEST_CASE("swapping the pair flips the recorded orientation") {
  const WitnessCert cert = build_witness(witness_params(9, 1));
  PsiPair pair = build_psi_pair(cert);
  std::swap(pair.psi0, pair.psi1);
  const PsiVerifyResult result = verify_psi_pair(pair);
  CHECK(result.report.all_pass());
  CHECK(result.orientation == "weight>=n+1 maps to -1");
}

TEST_CASE("a nonnegative function fails pure high degree") {
  SymFn ones(4);
  for (long k = 0; k <= 4; ++k)
    ones.set(k, QuadNum(Rational(1, 16)));  // uniform, l1 = 1
  const auto moments = orthogonality_symmetric(ones, 0);
  REQUIRE(moments.size() == 1);
  CHECK(moments[0] == QuadNum(1));  // <psi, 1> = ||psi||_1 here
}

TEST_CASE("univariate moments certify multivariate orthogonality") {
  // Parity weights: g[k] = (-1)^k / 2^m kills moments 0 and 1 for m >= 2.
  for (long m : {2L, 4L, 6L}) {
    SymFn parity(m);
    Rational scale(1);
    scale.get_den() <<= m;
    for (long k = 0; k <= m; ++k)
      parity.set(k, QuadNum(k % 2 == 0 ? scale : -scale));
    const auto moments = orthogonality_symmetric(parity, 1);
    REQUIRE(moments.size() == 2);
    CHECK(moments[0].is_zero());
    CHECK(moments[1].is_zero());
  }

  // kmax below zero yields no constraints.
  SymFn g(4);
  CHECK(orthogonality_symmetric(g, -1).empty());
}

TEST_CASE("weight-class l1 matches pointwise cube enumeration") {
  // The lifted functions of legal witnesses live on >= 18 bits, so the
  // pointwise oracle runs on small handmade grid functions instead.
  std::mt19937 rng(123);
  for (long n : {2L, 4L, 8L}) {
    GridFn r(n);
    for (long t = -n; t <= n; ++t)
      r.set(t, testutil::random_quad(rng, 2, 9));
    const SymFn lifted = lift_grid(r);
    REQUIRE(lifted.m() == 2 * n);
    REQUIRE(testutil::pointwise_l1(lifted) == lifted.l1_norm());
  }
}

TEST_CASE("psi pair from a small reflected grid agrees pointwise") {
  // Same construction path as the witness pair, at oracle-checkable size.
  GridFn r(8);
  std::mt19937 rng(5);
  for (long t = -8; t <= 8; ++t) r.set(t, testutil::random_quad(rng, 2, 7));
  GridFn reflected(8);
  for (long t = -8; t <= 8; ++t) reflected.set(-t, r.value(t));

  const SymFn psi1 = lift_grid(r);
  const SymFn psi0 = lift_grid(reflected);
  CHECK(testutil::pointwise_l1(psi1) == psi1.l1_norm());
  CHECK(testutil::pointwise_l1(psi0) == psi0.l1_norm());
  for (long k = 0; k <= 16; ++k)
    REQUIRE(psi0.weight_value(k) == psi1.weight_value(16 - k));
}

TEST_CASE("lift keeps values in the same quadratic field") {
  const WitnessCert cert = build_witness(witness_params(65, 2));
  const SymFn lifted = lift_witness(cert);
  for (const auto& [k, v] : lifted.entries())
    REQUIRE((v.delta() == 2 || v.is_rational()));
}

TEST_CASE("band weight fractions") {
  CHECK(weight_fraction_in_band(1, 0) == Rational(1, 2));
  CHECK(weight_fraction_in_band(2, 1) == Rational(7, 8));
  for (long n : {1L, 2L, 5L, 9L})
    CHECK(weight_fraction_in_band(n, n) == 1);
  CHECK_THROWS_AS(weight_fraction_in_band(3, 4), UsageError);
  // Monotone in the width.
  Rational prev(0);
  for (long w = 0; w <= 9; ++w) {
    const Rational f = weight_fraction_in_band(9, w);
    CHECK(f >= prev);
    prev = f;
  }
}
