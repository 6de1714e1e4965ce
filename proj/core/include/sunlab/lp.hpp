#pragma once
//------------------------------------------------------------------------------
// Exact rational linear programming. Dense two-phase simplex with Bland's
// lowest-index pivot rule, so runs are deterministic and cycling-free.
// Problems here are tiny (a handful of variables per geometric primitive).
//------------------------------------------------------------------------------
#include <vector>

#include "sunlab/rational.hpp"

namespace sunlab {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;             // objective at optimum
  std::vector<Rational> x;    // optimal point, original variable space
  bool optimal() const { return status == LpStatus::Optimal; }
};

class LpProblem {
 public:
  // All variables are free unless marked nonnegative.
  explicit LpProblem(int n_vars);

  int n_vars() const { return n_; }
  void set_nonnegative(int var);

  // minimize c.x  (default objective is 0 == feasibility problem)
  void set_objective(std::vector<Rational> c);

  void add_le(std::vector<Rational> a, Rational b);  // a.x <= b
  void add_ge(std::vector<Rational> a, Rational b);  // a.x >= b
  void add_eq(std::vector<Rational> a, Rational b);  // a.x  = b

 private:
  friend LpSolution lp_solve(const LpProblem&);
  enum class Rel { Le, Eq };
  struct Row {
    std::vector<Rational> a;
    Rational b;
    Rel rel;
  };
  void check_width(const std::vector<Rational>& a) const;

  int n_;
  std::vector<bool> nonneg_;
  std::vector<Rational> c_;
  std::vector<Row> rows_;
};

LpSolution lp_solve(const LpProblem& p);

// Convenience: minimize and maximize c.x over the same constraints.
// Both must be bounded; callers use this for exact coordinate ranges.
struct LpRange {
  bool feasible = false;
  Rational lo, hi;
  std::vector<Rational> arg_lo, arg_hi;
};
LpRange lp_range(LpProblem p, const std::vector<Rational>& c);

}  // namespace sunlab
