#include "srkit/combinatorics.hpp"

#include "srkit/errors.hpp"

namespace srkit {

Integer int_root(const Integer& n, unsigned long k) {
  if (n < 1) throw UsageError("int_root requires n >= 1");
  if (k == 0) throw UsageError("int_root requires k >= 1");
  if (k == 1 || n == 1) return n;
  // 2^ceil(bits/k) is an upper bound: n < 2^bits <= (2^ceil(bits/k))^k.
  const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Integer hi = 1;
  hi <<= (bits + k - 1) / k;  // hi^k > n
  Integer lo = 1;             // lo^k <= n
  while (lo + 1 < hi) {
    Integer mid = (lo + hi) / 2;
    if (pow_integer(mid, k) <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

bool is_perfect_square(const Integer& n, Integer* root) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (root) *root = r;
  return r * r == n;
}

Integer binomial(const Integer& m, const Integer& k) {
  if (k < 0 || k > m) return 0;
  Integer kk = k;
  if (k * 2 > m) kk = m - k;  // symmetry keeps the loop short
  Integer c = 1;
  Integer num = m - kk;
  for (Integer i = 1; i <= kk; ++i) {
    num += 1;
    c *= num;
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), i.get_mpz_t());
  }
  return c;
}

Integer binomial(long m, long k) { return binomial(Integer(m), Integer(k)); }

}  // namespace srkit
