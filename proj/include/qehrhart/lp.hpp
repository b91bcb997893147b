#pragma once

#include "qehrhart/numbers.hpp"

namespace qehrhart {

enum class Rel { LessEq, Eq, GreaterEq };

struct LinearConstraint {
  RatVector coeffs;
  Rel rel = Rel::Eq;
  Rational rhs;
};

// Finite system of linear equalities and inequalities over the rationals.
// Variables are free unless flagged nonnegative; the flag spares the
// x = x+ - x- split for the many convex-combination systems the geometry
// code builds, where every unknown is a weight.
struct LinearSystem {
  std::size_t num_vars = 0;
  std::vector<bool> nonneg;  // empty means all free
  std::vector<LinearConstraint> rows;

  explicit LinearSystem(std::size_t vars = 0) : num_vars(vars) {}
  void add(const RatVector& coeffs, Rel rel, const Rational& rhs);
  void add(const LinearConstraint& row) { add(row.coeffs, row.rel, row.rhs); }
  void mark_all_nonneg() { nonneg.assign(num_vars, true); }
};

struct LpResult {
  bool feasible = false;
  RatVector witness;  // one solution when feasible, in original variables
};

// Exact phase-I simplex with Bland's rule; decides feasibility and, when
// feasible, produces a witness point. Terminates on every input.
LpResult lp_solve(const LinearSystem& sys);
bool lp_feasible(const LinearSystem& sys);

}  // namespace qehrhart
