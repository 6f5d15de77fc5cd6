#include "srkit/lp.hpp"

#include "srkit/errors.hpp"

namespace srkit {

void LPProblem::add_constraint(std::vector<Rational> coeffs, Rel rel,
                               Rational rhs) {
  if (coeffs.size() != static_cast<size_t>(num_vars))
    throw UsageError("constraint width does not match variable count");
  constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
}

namespace {

// Standardized equality form: columns are the split/nonneg structural
// variables, then one slack per inequality row, then one artificial per row.
// Rows are sign-flipped as needed so every right-hand side is nonnegative.
struct Tableau {
  long rows = 0, cols = 0;          // cols excludes the rhs column
  std::vector<std::vector<Rational>> a;  // rows x (cols + 1), rhs last
  std::vector<Rational> obj;        // cols + 1, reduced costs + objective value
  std::vector<long> basis;          // basic column per row

  Rational& at(long r, long c) { return a[r][c]; }
  Rational& rhs(long r) { return a[r][cols]; }

  void pivot(long r, long c) {
    const Rational inv = Rational(1) / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (long i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational factor = a[i][c];
      for (long j = 0; j <= cols; ++j) a[i][j] -= factor * a[r][j];
    }
    if (obj[c] != 0) {
      const Rational factor = obj[c];
      for (long j = 0; j <= cols; ++j) obj[j] -= factor * a[r][j];
    }
    basis[r] = c;
  }

  // Primal simplex with Bland's rule on the current objective row.
  // `allowed` bounds the entering columns. Returns false on unboundedness.
  bool iterate(long allowed) {
    for (;;) {
      long enter = -1;
      for (long j = 0; j < allowed; ++j)
        if (obj[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      long leave = -1;
      Rational best;
      for (long i = 0; i < rows; ++i) {
        if (a[i][enter] <= 0) continue;
        const Rational ratio = rhs(i) / a[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

struct Standardized {
  Tableau t;
  std::vector<long> pos_col;   // structural column of x_j (its + part)
  std::vector<long> neg_col;   // column of the split - part, or -1
  std::vector<int> row_flip;   // +1 / -1 applied to each original row
  long slack_base = 0, art_base = 0;
};

Standardized standardize(const LPProblem& prob) {
  Standardized s;
  const long m = static_cast<long>(prob.constraints.size());

  long cols = 0;
  s.pos_col.resize(prob.num_vars);
  s.neg_col.assign(prob.num_vars, -1);
  for (long j = 0; j < prob.num_vars; ++j) {
    s.pos_col[j] = cols++;
    if (!prob.nonneg[j]) s.neg_col[j] = cols++;
  }
  s.slack_base = cols;
  long slacks = 0;
  for (const auto& c : prob.constraints)
    if (c.rel != Rel::Eq) ++slacks;
  cols += slacks;
  s.art_base = cols;
  cols += m;

  Tableau& t = s.t;
  t.rows = m;
  t.cols = cols;
  t.a.assign(m, std::vector<Rational>(cols + 1, Rational(0)));
  t.obj.assign(cols + 1, Rational(0));
  t.basis.resize(m);
  s.row_flip.assign(m, 1);

  long slack_at = s.slack_base;
  for (long i = 0; i < m; ++i) {
    const auto& c = prob.constraints[i];
    const int flip = sgn(c.rhs) < 0 ? -1 : 1;
    s.row_flip[i] = flip;
    for (long j = 0; j < prob.num_vars; ++j) {
      const Rational v = Rational(flip) * c.coeffs[j];
      t.at(i, s.pos_col[j]) = v;
      if (s.neg_col[j] >= 0) t.at(i, s.neg_col[j]) = -v;
    }
    if (c.rel != Rel::Eq)
      t.at(i, slack_at++) = Rational(flip * (c.rel == Rel::Le ? 1 : -1));
    t.at(i, s.art_base + i) = 1;
    t.rhs(i) = Rational(flip) * c.rhs;
    t.basis[i] = s.art_base + i;
  }
  return s;
}

// Phase-one objective: minimize the artificial sum. Reduced costs start as
// 1 - (column sums over rows), because every artificial is basic.
void load_phase1(Standardized& s) {
  Tableau& t = s.t;
  for (long j = 0; j <= t.cols; ++j) {
    Rational sum(0);
    for (long i = 0; i < t.rows; ++i) sum += t.at(i, j);
    t.obj[j] = -sum;
  }
  for (long i = 0; i < t.rows; ++i) t.obj[s.art_base + i] += 1;
}

}  // namespace

bool verify_certificate(const LPProblem& prob, const LPCertificate& cert) {
  const long m = static_cast<long>(prob.constraints.size());
  if (cert.status == LPStatus::Feasible) {
    if (cert.point.size() != static_cast<size_t>(prob.num_vars)) return false;
    for (long j = 0; j < prob.num_vars; ++j)
      if (prob.nonneg[j] && cert.point[j] < 0) return false;
    for (const auto& c : prob.constraints) {
      Rational lhs(0);
      for (long j = 0; j < prob.num_vars; ++j)
        lhs += c.coeffs[j] * cert.point[j];
      switch (c.rel) {
        case Rel::Le: if (lhs > c.rhs) return false; break;
        case Rel::Ge: if (lhs < c.rhs) return false; break;
        case Rel::Eq: if (lhs != c.rhs) return false; break;
      }
    }
    if (cert.objective_value) {
      if (!prob.objective) return false;
      Rational v(0);
      for (long j = 0; j < prob.num_vars; ++j)
        v += (*prob.objective)[j] * cert.point[j];
      if (v != *cert.objective_value) return false;
    }
    return true;
  }
  if (cert.status == LPStatus::Infeasible) {
    if (cert.farkas.size() != static_cast<size_t>(m)) return false;
    Rational rhs_combo(0);
    for (long i = 0; i < m; ++i) {
      const Rational& y = cert.farkas[i];
      switch (prob.constraints[i].rel) {
        case Rel::Ge: if (y < 0) return false; break;
        case Rel::Le: if (y > 0) return false; break;
        case Rel::Eq: break;
      }
      rhs_combo += y * prob.constraints[i].rhs;
    }
    if (rhs_combo <= 0) return false;
    for (long j = 0; j < prob.num_vars; ++j) {
      Rational combo(0);
      for (long i = 0; i < m; ++i)
        combo += cert.farkas[i] * prob.constraints[i].coeffs[j];
      if (prob.nonneg[j] ? combo > 0 : combo != 0) return false;
    }
    return true;
  }
  // Unbounded: feasibility of the reported point is all we can re-check here.
  return true;
}

LPCertificate lp_solve(const LPProblem& prob) {
  if (prob.objective &&
      prob.objective->size() != static_cast<size_t>(prob.num_vars))
    throw UsageError("objective width does not match variable count");

  Standardized s = standardize(prob);
  Tableau& t = s.t;
  const long m = t.rows;

  load_phase1(s);
  if (!t.iterate(t.cols))
    throw InternalError("phase one cannot be unbounded");

  LPCertificate cert;
  const Rational phase1_value = -t.obj[t.cols];
  if (phase1_value > 0) {
    // Simplex multipliers off the artificial columns: pi_i = 1 - redcost_i.
    cert.status = LPStatus::Infeasible;
    cert.farkas.resize(m);
    for (long i = 0; i < m; ++i)
      cert.farkas[i] =
          Rational(s.row_flip[i]) * (Rational(1) - t.obj[s.art_base + i]);
    if (!verify_certificate(prob, cert))
      throw InternalError("simplex produced an invalid Farkas certificate");
    return cert;
  }

  // Feasible. Pivot leftover artificials out of the basis where possible;
  // rows that cannot pivot are redundant and harmless (the artificial sits
  // at zero).
  for (long i = 0; i < m; ++i) {
    if (t.basis[i] < s.art_base) continue;
    for (long j = 0; j < s.art_base; ++j)
      if (t.at(i, j) != 0) {
        t.pivot(i, j);
        break;
      }
  }

  if (prob.objective) {
    // Phase two: reload reduced costs for the real objective and bar the
    // artificial columns from entering.
    std::vector<Rational> cost(t.cols + 1, Rational(0));
    for (long j = 0; j < prob.num_vars; ++j) {
      cost[s.pos_col[j]] = (*prob.objective)[j];
      if (s.neg_col[j] >= 0) cost[s.neg_col[j]] = -(*prob.objective)[j];
    }
    t.obj = cost;
    for (long i = 0; i < m; ++i) {
      if (t.obj[t.basis[i]] == 0) continue;
      const Rational factor = t.obj[t.basis[i]];
      for (long j = 0; j <= t.cols; ++j) t.obj[j] -= factor * t.a[i][j];
    }
    if (!t.iterate(s.art_base)) {
      cert.status = LPStatus::Unbounded;
      return cert;
    }
  }

  cert.status = LPStatus::Feasible;
  cert.point.assign(prob.num_vars, Rational(0));
  std::vector<Rational> col_value(t.cols, Rational(0));
  for (long i = 0; i < m; ++i)
    if (t.basis[i] < t.cols) col_value[t.basis[i]] = t.rhs(i);
  for (long j = 0; j < prob.num_vars; ++j) {
    cert.point[j] = col_value[s.pos_col[j]];
    if (s.neg_col[j] >= 0) cert.point[j] -= col_value[s.neg_col[j]];
  }
  if (prob.objective) {
    Rational v(0);
    for (long j = 0; j < prob.num_vars; ++j)
      v += (*prob.objective)[j] * cert.point[j];
    cert.objective_value = v;
  }
  if (!verify_certificate(prob, cert))
    throw InternalError("simplex produced an invalid feasible point");
  return cert;
}

}  // namespace srkit
