#include "srkit/upp.hpp"

#include <algorithm>
#include <bit>

#include "srkit/errors.hpp"

namespace srkit {

namespace {

long ceil_log2(long v) {
  long bits = 0;
  while ((1L << bits) < v) ++bits;
  return bits;
}

long protocol_cost(long two_n) {
  // Index of one of 2n^2 positions plus the one-bit reply.
  return ceil_log2(2 * (two_n / 2) * (two_n / 2)) + 1;
}

Rational accept_probability(long minus_count, long two_n,
                            const Rational& beta) {
  return 2 * beta +
         (Rational(1) - 2 * beta) * Rational(minus_count) / Rational(two_n);
}

}  // namespace

ProtocolOutcome upp_protocol_sim(const std::vector<int>& z,
                                 const Rational& beta) {
  if (z.empty() || z.size() % 2 != 0)
    throw UsageError("protocol input must have even positive length");
  if (beta < 0 || beta > Rational(1, 2))
    throw UsageError("beta must lie in [0, 1/2]");
  long minus = 0;
  for (int v : z) {
    if (v != 1 && v != -1) throw UsageError("protocol input entries are +-1");
    if (v == -1) ++minus;
  }
  const long two_n = static_cast<long>(z.size());
  return {accept_probability(minus, two_n, beta), protocol_cost(two_n)};
}

UppValidation upp_validate(long n, const Rational& beta) {
  if (n < 1 || 2 * n > 16)
    throw UsageError("exhaustive validation needs 1 <= n <= 8");
  if (beta < 0 || beta > Rational(1, 2))
    throw UsageError("beta must lie in [0, 1/2]");
  const long two_n = 2 * n;

  UppValidation result;
  result.cost_bits = protocol_cost(two_n);
  bool first = true;
  for (unsigned long z = 0; z < (1uL << two_n); ++z) {
    const long minus = std::popcount(z);
    const Rational p_minus = accept_probability(minus, two_n, beta);
    // Majority outputs -1 when at least half the inputs are -1.
    const bool maj_minus = minus >= n;
    const Rational margin =
        (maj_minus ? p_minus : Rational(1) - p_minus) - Rational(1, 2);
    if (first || margin < result.worst_margin ||
        (margin == result.worst_margin && minus < result.worst_class)) {
      result.worst_margin = margin;
      result.worst_class = minus;
      first = false;
    }
    if (margin <= 0 &&
        (result.failing_classes.empty() ||
         result.failing_classes.back() != minus))
      result.failing_classes.push_back(minus);
  }
  std::sort(result.failing_classes.begin(), result.failing_classes.end());
  result.failing_classes.erase(std::unique(result.failing_classes.begin(),
                                           result.failing_classes.end()),
                               result.failing_classes.end());
  result.pass = result.failing_classes.empty();
  return result;
}

}  // namespace srkit
