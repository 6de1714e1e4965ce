#include "sunlab/lp.hpp"

#include <stdexcept>
#include <utility>

namespace sunlab {

LpProblem::LpProblem(int n_vars) : n_(n_vars), nonneg_(n_vars, false), c_(n_vars) {
  if (n_vars < 0) throw std::invalid_argument("LpProblem: negative variable count");
}

void LpProblem::set_nonnegative(int var) {
  if (var < 0 || var >= n_) throw std::invalid_argument("LpProblem: bad variable index");
  nonneg_[var] = true;
}

void LpProblem::check_width(const std::vector<Rational>& a) const {
  if (static_cast<int>(a.size()) != n_)
    throw std::invalid_argument("LpProblem: coefficient row width mismatch");
}

void LpProblem::set_objective(std::vector<Rational> c) {
  check_width(c);
  c_ = std::move(c);
}

void LpProblem::add_le(std::vector<Rational> a, Rational b) {
  check_width(a);
  rows_.push_back({std::move(a), std::move(b), Rel::Le});
}

void LpProblem::add_ge(std::vector<Rational> a, Rational b) {
  check_width(a);
  for (auto& v : a) v = -v;
  rows_.push_back({std::move(a), -b, Rel::Le});
}

void LpProblem::add_eq(std::vector<Rational> a, Rational b) {
  check_width(a);
  rows_.push_back({std::move(a), std::move(b), Rel::Eq});
}

namespace {

// Dense simplex tableau over rationals.
//   rows 0..m-1 : constraints (equalities, rhs >= 0 after setup)
//   row  m      : objective (reduced costs), rhs = -objective value
struct Tableau {
  int m, n;                       // constraints x columns (excl. rhs)
  std::vector<std::vector<Rational>> t;  // (m+1) x (n+1)
  std::vector<int> basis;         // column basic in each row

  Tableau(int m_, int n_) : m(m_), n(n_), t(m_ + 1, std::vector<Rational>(n_ + 1)), basis(m_, -1) {}

  void pivot(int pr, int pc) {
    Rational inv = Rational(1) / t[pr][pc];
    for (auto& v : t[pr]) v *= inv;
    for (int r = 0; r <= m; ++r) {
      if (r == pr) continue;
      if (t[r][pc].sign() == 0) continue;
      Rational f = t[r][pc];
      for (int c = 0; c <= n; ++c) t[r][c] -= f * t[pr][c];
    }
    basis[pr] = pc;
  }

  // Bland's rule: entering = lowest-index column with negative reduced cost;
  // leaving = lowest ratio, ties by lowest basic column index.
  // Returns Optimal or Unbounded.
  LpStatus run(int n_active) {
    for (;;) {
      int pc = -1;
      for (int c = 0; c < n_active; ++c) {
        if (t[m][c].sign() < 0) { pc = c; break; }
      }
      if (pc < 0) return LpStatus::Optimal;
      int pr = -1;
      Rational best;
      for (int r = 0; r < m; ++r) {
        if (t[r][pc].sign() <= 0) continue;
        Rational ratio = t[r][n] / t[r][pc];
        if (pr < 0 || ratio < best || (ratio == best && basis[r] < basis[pr])) {
          pr = r;
          best = ratio;
        }
      }
      if (pr < 0) return LpStatus::Unbounded;
      pivot(pr, pc);
    }
  }
};

}  // namespace

LpSolution lp_solve(const LpProblem& p) {
  // Standard form: split free variables, slack up inequalities, then
  // phase-1 artificials on every row.
  const int nv = p.n_;
  int cols = 0;
  std::vector<std::pair<int, int>> var_cols(nv);  // (plus col, minus col or -1)
  for (int j = 0; j < nv; ++j) {
    var_cols[j].first = cols++;
    var_cols[j].second = p.nonneg_[j] ? -1 : cols++;
  }
  int n_slack = 0;
  for (const auto& row : p.rows_)
    if (row.rel == LpProblem::Rel::Le) ++n_slack;
  const int slack0 = cols;
  cols += n_slack;
  const int m = static_cast<int>(p.rows_.size());
  const int art0 = cols;
  cols += m;

  Tableau tab(m, cols);
  int slack_at = slack0;
  for (int r = 0; r < m; ++r) {
    const auto& row = p.rows_[r];
    for (int j = 0; j < nv; ++j) {
      tab.t[r][var_cols[j].first] = row.a[j];
      if (var_cols[j].second >= 0) tab.t[r][var_cols[j].second] = -row.a[j];
    }
    if (row.rel == LpProblem::Rel::Le) tab.t[r][slack_at++] = 1;
    tab.t[r][cols] = row.b;
    if (tab.t[r][cols].sign() < 0)
      for (int c = 0; c <= cols; ++c) tab.t[r][c] = -tab.t[r][c];
    tab.t[r][art0 + r] = 1;
    tab.basis[r] = art0 + r;
  }

  // Phase 1: minimize sum of artificials.
  for (int c = 0; c <= cols; ++c) {
    Rational s;
    for (int r = 0; r < m; ++r) s += tab.t[r][c];
    tab.t[m][c] = -s;
  }
  for (int r = 0; r < m; ++r) tab.t[m][art0 + r] = 0;
  if (m > 0) {
    LpStatus st = tab.run(art0);  // artificial columns never re-enter
    (void)st;                     // phase 1 is always bounded below by 0
    if (tab.t[m][cols].sign() != 0) return {LpStatus::Infeasible, Rational(0), {}};
    // Drive remaining artificials out of the basis where possible.
    for (int r = 0; r < m; ++r) {
      if (tab.basis[r] < art0) continue;
      int pc = -1;
      for (int c = 0; c < art0; ++c)
        if (tab.t[r][c].sign() != 0) { pc = c; break; }
      if (pc >= 0) tab.pivot(r, pc);
      // else: redundant zero row, harmless to leave
    }
  }

  // Phase 2 objective.
  for (int c = 0; c <= cols; ++c) tab.t[m][c] = 0;
  for (int j = 0; j < nv; ++j) {
    tab.t[m][var_cols[j].first] += p.c_[j];
    if (var_cols[j].second >= 0) tab.t[m][var_cols[j].second] -= p.c_[j];
  }
  // Price out the current basis.
  for (int r = 0; r < m; ++r) {
    int bc = tab.basis[r];
    if (bc >= art0 || tab.t[m][bc].sign() == 0) continue;
    Rational f = tab.t[m][bc];
    for (int c = 0; c <= cols; ++c) tab.t[m][c] -= f * tab.t[r][c];
  }
  LpStatus st = tab.run(art0);
  if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, Rational(0), {}};

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  std::vector<Rational> col_val(cols);
  for (int r = 0; r < m; ++r)
    if (tab.basis[r] < cols) col_val[tab.basis[r]] = tab.t[r][cols];
  sol.x.resize(nv);
  for (int j = 0; j < nv; ++j) {
    sol.x[j] = col_val[var_cols[j].first];
    if (var_cols[j].second >= 0) sol.x[j] -= col_val[var_cols[j].second];
  }
  sol.value = -tab.t[m][cols];
  return sol;
}

LpRange lp_range(LpProblem p, const std::vector<Rational>& c) {
  LpRange out;
  p.set_objective(c);
  LpSolution lo = lp_solve(p);
  if (!lo.optimal()) return out;
  std::vector<Rational> neg(c.size());
  for (size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
  p.set_objective(neg);
  LpSolution hi = lp_solve(p);
  if (!hi.optimal()) return out;
  out.feasible = true;
  out.lo = lo.value;
  out.hi = -hi.value;
  out.arg_lo = std::move(lo.x);
  out.arg_hi = std::move(hi.x);
  return out;
}

}  // namespace sunlab
