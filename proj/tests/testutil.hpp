#pragma once

// Shared test oracles, independent of the library's computation paths.

#include <bit>
#include <random>
#include <vector>

#include "srkit/combinatorics.hpp"
#include "srkit/quadnum.hpp"
#include "srkit/symfn.hpp"

namespace srkit::testutil {

// Pascal-triangle binomials, an independent reference for the multiplicative
// formula.
inline Integer pascal_binomial(long m, long k) {
  if (k < 0 || k > m) return 0;
  std::vector<Integer> row{1};
  for (long i = 1; i <= m; ++i) {
    std::vector<Integer> next(i + 1, Integer(0));
    for (long j = 0; j <= i; ++j) {
      if (j > 0) next[j] += row[j - 1];
      if (j < i) next[j] += row[j];
    }
    row = std::move(next);
  }
  return row[k];
}

inline Rational random_rational(std::mt19937& rng, int magnitude = 20) {
  std::uniform_int_distribution<int> num(-magnitude, magnitude);
  std::uniform_int_distribution<int> den(1, magnitude);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline QuadNum random_quad(std::mt19937& rng, unsigned long delta,
                           int magnitude = 20) {
  return QuadNum(random_rational(rng, magnitude), random_rational(rng, magnitude),
                 delta);
}

// Pointwise cube enumeration of a weight-class function (m <= 20): the brute
// seam the weight-class representation must agree with.
inline QuadNum pointwise_l1(const SymFn& fn) {
  QuadNum sum;
  for (unsigned long x = 0; x < (1uL << fn.m()); ++x)
    sum += fn.weight_value(std::popcount(x)).abs();
  return sum;
}

// Fourier-Motzkin feasibility of {sum_j a_ij x_j >= b_i} over free reals: an
// LP-free oracle for the sign-representation programs. Rows are normalized
// by their largest absolute coefficient and merged under dominance (equal
// coefficients keep the largest right-hand side), which keeps the blowup
// tame at test sizes.
inline bool fm_feasible(std::vector<std::vector<Rational>> rows,
                        std::vector<Rational> rhs) {
  const size_t vars = rows.empty() ? 0 : rows[0].size();
  const auto normalize = [](std::vector<Rational>& row, Rational& b) {
    Rational scale(0);
    for (const auto& c : row)
      if (abs(c) > scale) scale = abs(c);
    if (scale == 0) return;
    for (auto& c : row) c /= scale;
    b /= scale;
  };
  for (size_t i = 0; i < rows.size(); ++i) normalize(rows[i], rhs[i]);

  std::vector<bool> eliminated(vars, false);
  for (size_t round = 0; round < vars; ++round) {
    // Greedy order: eliminate the variable with the fewest pos*neg pairings.
    size_t v = vars, best_cost = SIZE_MAX;
    for (size_t cand = 0; cand < vars; ++cand) {
      if (eliminated[cand]) continue;
      size_t p = 0, n = 0;
      for (size_t i = 0; i < rows.size(); ++i) {
        const int s = sgn(rows[i][cand]);
        if (s > 0) ++p;
        if (s < 0) ++n;
      }
      if (p * n < best_cost) {
        best_cost = p * n;
        v = cand;
      }
    }
    eliminated[v] = true;
    std::vector<std::vector<Rational>> pos, neg, next;
    std::vector<Rational> pos_b, neg_b, next_b;
    for (size_t i = 0; i < rows.size(); ++i) {
      const int s = sgn(rows[i][v]);
      if (s > 0) {
        pos.push_back(std::move(rows[i]));
        pos_b.push_back(std::move(rhs[i]));
      } else if (s < 0) {
        neg.push_back(std::move(rows[i]));
        neg_b.push_back(std::move(rhs[i]));
      } else {
        next.push_back(std::move(rows[i]));
        next_b.push_back(std::move(rhs[i]));
      }
    }
    for (size_t p = 0; p < pos.size(); ++p)
      for (size_t q = 0; q < neg.size(); ++q) {
        // Scale so the v-coefficients cancel: row_p / a_pv - row_q / a_qv.
        std::vector<Rational> combined(vars);
        for (size_t j = 0; j < vars; ++j)
          combined[j] = pos[p][j] / pos[p][v] - neg[q][j] / neg[q][v];
        Rational b = pos_b[p] / pos[p][v] - neg_b[q] / neg[q][v];
        normalize(combined, b);
        next.push_back(std::move(combined));
        next_b.push_back(b);
      }
    rows.clear();
    rhs.clear();
    for (size_t i = 0; i < next.size(); ++i) {
      bool merged = false;
      for (size_t j = 0; j < rows.size(); ++j)
        if (rows[j] == next[i]) {
          if (next_b[i] > rhs[j]) rhs[j] = next_b[i];
          merged = true;
          break;
        }
      if (!merged) {
        rows.push_back(std::move(next[i]));
        rhs.push_back(std::move(next_b[i]));
      }
    }
  }
  // All variables eliminated: rows read 0 >= b_i.
  for (size_t i = 0; i < rows.size(); ++i)
    if (rhs[i] > 0) return false;
  return true;
}

}  // namespace srkit::testutil
