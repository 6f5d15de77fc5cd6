#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "srkit/degree.hpp"
#include "srkit/errors.hpp"
#include "testutil.hpp"

using namespace srkit;

namespace {

// Elimination-based feasibility of a degree-d sign-representation, sharing
// nothing with the simplex path.
bool fm_sign_representable(const FnSpec& f, long d) {
  const auto basis = polynomial_basis(f, d);
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (long idx = 0; idx < f.domain_size(); ++idx) {
    std::vector<Rational> row(basis.size());
    for (size_t i = 0; i < basis.size(); ++i)
      row[i] = Rational(f.value_at(idx)) * basis_value(f, basis[i], idx);
    rows.push_back(std::move(row));
    rhs.push_back(Rational(1));
  }
  return testutil::fm_feasible(rows, rhs);
}

FnSpec to_explicit(const FnSpec& f) {
  std::vector<int> table;
  for (unsigned long x = 0; x < (1uL << f.arity()); ++x)
    table.push_back(f.eval_mask(x));
  return FnSpec::explicit_fn(f.arity(), table);
}

FnSpec random_4bit(std::mt19937& rng) {
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<int> table(16);
  for (auto& v : table) v = bit(rng) ? -1 : 1;
  return FnSpec::explicit_fn(4, table);
}

}  // namespace

TEST_CASE("threshold degree catalog with elimination cross-check") {
  struct Entry {
    const char* name;
    long degree;
  };
  for (const Entry& e : {Entry{"and:2", 1}, Entry{"or:2", 1}, Entry{"maj:3", 1},
                         Entry{"parity:2", 2}, Entry{"parity:3", 3}}) {
    const FnSpec f = to_explicit(FnSpec::builtin(e.name));
    const ThresholdDegreeResult r = threshold_degree(f);
    CAPTURE(e.name);
    REQUIRE(r.degree == e.degree);
    CHECK(fm_sign_representable(f, e.degree));
    if (e.degree >= 1) {
      CHECK_FALSE(fm_sign_representable(f, e.degree - 1));
      REQUIRE(r.dual.has_value());
      CHECK(r.dual->phd == e.degree - 1);
      CHECK(verify_threshold_witness(f, *r.dual).all_pass());
    }
  }
}

TEST_CASE("the affine form x1 + x2 + 1 sign-represents the two-bit and") {
  const FnSpec f = FnSpec::builtin("and:2");
  // Explicit check at the four inputs, weights (1, 1), constant 1.
  for (unsigned long x = 0; x < 4; ++x) {
    const int x1 = (x & 1) ? -1 : 1, x2 = (x & 2) ? -1 : 1;
    CHECK((x1 + x2 + 1) * f.eval_mask(x) > 0);
  }
}

TEST_CASE("parity's dual witness at degree one is parity over four") {
  const FnSpec f = to_explicit(FnSpec::builtin("parity:2"));
  const LPCertificate cert = lp_solve(threshold_lp(f, 1));
  REQUIRE(cert.status == LPStatus::Infeasible);
  const DualWitness w = extract_dual_witness(cert, f, 1);
  for (unsigned long x = 0; x < 4; ++x)
    REQUIRE(w.values[x] == Rational(f.eval_mask(x), 4));
}

TEST_CASE("witness extraction demands infeasibility") {
  const FnSpec f = to_explicit(FnSpec::builtin("and:2"));
  const LPCertificate feasible = lp_solve(threshold_lp(f, 1));
  REQUIRE(feasible.status == LPStatus::Feasible);
  CHECK_THROWS_AS(extract_dual_witness(feasible, f, 1), MalformedCertificate);
}

TEST_CASE("threshold degree is invariant under negation") {
  std::mt19937 rng(2025);
  for (int trial = 0; trial < 20; ++trial) {
    const FnSpec f = random_4bit(rng);
    std::vector<int> negated;
    for (int v : f.values()) negated.push_back(-v);
    const FnSpec g = FnSpec::explicit_fn(4, negated);
    REQUIRE(threshold_degree(f).degree == threshold_degree(g).degree);
  }
}

TEST_CASE("univariate and multilinear programs agree on symmetric functions") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> bit(0, 1);
  for (const char* name : {"maj:3", "maj:5", "parity:4", "and:4", "or:5"}) {
    const FnSpec sym = FnSpec::builtin(name);
    CAPTURE(name);
    REQUIRE(threshold_degree(sym).degree ==
            threshold_degree(to_explicit(sym)).degree);
  }
  for (int trial = 0; trial < 10; ++trial) {
    const long m = 4;
    std::vector<int> classes(m + 1);
    for (auto& v : classes) v = bit(rng) ? -1 : 1;
    const FnSpec sym = FnSpec::symmetric(m, classes);
    REQUIRE(threshold_degree(sym).degree ==
            threshold_degree(to_explicit(sym)).degree);
  }
}

TEST_CASE("primal/dual exclusivity on a random sample") {
  std::mt19937 rng(0xC0FFEE);
  for (int trial = 0; trial < 64; ++trial) {
    const FnSpec f = random_4bit(rng);
    for (long d = 0; d <= 2; ++d) {
      const LPCertificate cert = lp_solve(threshold_lp(f, d));
      if (cert.status == LPStatus::Feasible) {
        // The margin-1 constraints were verified by the solver already; the
        // polynomial really sign-represents f.
        Polynomial p;
        p.basis = f.kind();
        p.elems = polynomial_basis(f, d);
        p.coeffs = cert.point;
        for (long idx = 0; idx < f.domain_size(); ++idx)
          REQUIRE(p.value_at(f, idx) * Rational(f.value_at(idx)) >= 1);
      } else {
        const DualWitness w = extract_dual_witness(cert, f, d);
        REQUIRE(verify_threshold_witness(f, w).all_pass());
      }
    }
  }
}

TEST_CASE("block-symmetric composed majority at the smallest size") {
  const FnSpec f = FnSpec::builtin("maj_and_maj:2");
  const ThresholdDegreeResult r = threshold_degree(f);
  // The 2x2 and-of-ors is not a halfspace: averaging the two true points
  // (-1,1,1,-1), (1,-1,-1,1) and the two false points (-1,-1,1,1),
  // (1,1,-1,-1) meets at the origin, so degree one is impossible.
  CHECK(r.degree == 2);
  REQUIRE(r.dual.has_value());
  CHECK(verify_threshold_witness(f, *r.dual).all_pass());
  // Cross-check against the explicit representation.
  std::vector<int> table;
  for (unsigned long x = 0; x < 16; ++x) table.push_back(f.eval_mask(x));
  CHECK(threshold_degree(FnSpec::explicit_fn(4, table)).degree == 2);
}

// Opt-in stretch gate: the full 4-bit catalog. Run with
//   test_degree -tc="*full catalog*" -ns
TEST_CASE("primal/dual exclusivity on the full catalog" *
          doctest::skip(true)) {
  for (unsigned long table_bits = 0; table_bits < 65536; ++table_bits) {
    std::vector<int> table(16);
    for (int i = 0; i < 16; ++i)
      table[i] = (table_bits >> i) & 1 ? -1 : 1;
    const FnSpec f = FnSpec::explicit_fn(4, table);
    for (long d = 0; d <= 3; ++d) {
      const LPCertificate cert = lp_solve(threshold_lp(f, d));
      if (cert.status == LPStatus::Feasible) {
        Polynomial p;
        p.basis = f.kind();
        p.elems = polynomial_basis(f, d);
        p.coeffs = cert.point;
        for (long idx = 0; idx < f.domain_size(); ++idx)
          REQUIRE(p.value_at(f, idx) * Rational(f.value_at(idx)) >= 1);
      } else {
        REQUIRE(verify_threshold_witness(f, extract_dual_witness(cert, f, d))
                    .all_pass());
      }
    }
  }
}

TEST_CASE("rational feasibility under a generous margin") {
  const FnSpec f = FnSpec::builtin("maj:3");
  const RationalFeasibility r =
      rational_degree_feasible(f, 0, 0, Rational(2));
  CHECK(r.feasible);
  CHECK(r.certificate_report.all_pass());
}

TEST_CASE("two-bit majority at tight margin returns a verified certificate") {
  const FnSpec f = FnSpec::builtin("maj:2");
  const RationalFeasibility r =
      rational_degree_feasible(f, 0, 0, Rational(1, 2));
  CHECK(r.certificate_report.all_pass());
  if (!r.feasible) {
    REQUIRE(r.dual.has_value());
    // psi0 dominates on the +1 side exactly.
    for (long idx = 0; idx < f.domain_size(); ++idx)
      if (f.value_at(idx) == 1)
        REQUIRE(r.dual->psi0[idx] >= Rational(1, 2) * abs(r.dual->psi1[idx]));
  }
}

TEST_CASE("rational degree search") {
  const FnSpec constant = FnSpec::explicit_fn(1, {1, 1});
  CHECK(rational_degree_search(constant, Rational(1, 3)) == 0);
  CHECK(rational_degree_search(FnSpec::builtin("parity:2"), Rational(1, 3)) ==
        2);
  CHECK_THROWS_AS(rational_degree_search(constant, Rational(2)), UsageError);

  // Feasible degree is non-increasing in eps.
  const FnSpec maj = FnSpec::builtin("maj:3");
  long prev = maj.arity();
  for (const Rational eps : {Rational(1, 10), Rational(1, 3), Rational(2, 3)}) {
    const long deg = rational_degree_search(maj, eps);
    CHECK(deg <= prev);
    prev = deg;
  }
}

TEST_CASE("bisection brackets the feasibility threshold") {
  const FnSpec f = FnSpec::builtin("parity:2");
  const Enclosure bracket = rational_degree_value(f, 1, 1, 12);
  CHECK(bracket.lo < bracket.hi);
  CHECK_FALSE(rational_degree_feasible(f, 1, 1, bracket.hi).feasible ==
              false);  // hi side is feasible
  if (bracket.lo > 0)
    CHECK_FALSE(rational_degree_feasible(f, 1, 1, bracket.lo).feasible);
  // More iterations only shrink the bracket.
  const Enclosure tighter = rational_degree_value(f, 1, 1, 16);
  CHECK(bracket.contains(tighter));
}
