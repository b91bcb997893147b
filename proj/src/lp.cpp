#include "qehrhart/lp.hpp"

#include <stdexcept>

namespace qehrhart {

void LinearSystem::add(const RatVector& coeffs, Rel rel, const Rational& rhs) {
  if (coeffs.size() != num_vars) throw std::invalid_argument("constraint length mismatch");
  rows.push_back(LinearConstraint{coeffs, rel, rhs});
}

// Phase-I simplex. The system is brought to standard form (free variables
// split, inequalities slacked, right-hand sides made nonnegative, artificial
// variables where no slack can start basic) and sum(artificials) is
// minimized. Feasible iff the minimum is zero. Bland's rule on both the
// entering and the leaving choice rules out cycling, so exact arithmetic
// makes the answer unconditional.
LpResult lp_solve(const LinearSystem& sys) {
  const std::size_t n = sys.num_vars;
  std::vector<bool> nonneg = sys.nonneg.empty() ? std::vector<bool>(n, false) : sys.nonneg;
  if (nonneg.size() != n) throw std::invalid_argument("nonneg flag length mismatch");
  for (const auto& row : sys.rows)
    if (row.coeffs.size() != n) throw std::invalid_argument("constraint length mismatch");

  std::vector<std::size_t> col_of(n, 0);
  std::size_t nstruct = 0;
  for (std::size_t j = 0; j < n; ++j) {
    col_of[j] = nstruct;
    nstruct += nonneg[j] ? 1 : 2;
  }

  const std::size_t m = sys.rows.size();
  struct RowBuild {
    RatVector a;
    Rational b;
    Rel rel;
  };
  std::vector<RowBuild> rb(m);
  std::size_t nslack = 0, nart = 0;
  for (std::size_t i = 0; i < m; ++i) {
    rb[i].a.assign(nstruct, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& c = sys.rows[i].coeffs[j];
      if (sgn(c) == 0) continue;
      rb[i].a[col_of[j]] += c;
      if (!nonneg[j]) rb[i].a[col_of[j] + 1] -= c;
    }
    rb[i].b = sys.rows[i].rhs;
    rb[i].rel = sys.rows[i].rel;
    if (sgn(rb[i].b) < 0) {
      for (auto& x : rb[i].a) x = -x;
      rb[i].b = -rb[i].b;
      if (rb[i].rel == Rel::LessEq)
        rb[i].rel = Rel::GreaterEq;
      else if (rb[i].rel == Rel::GreaterEq)
        rb[i].rel = Rel::LessEq;
    }
    if (rb[i].rel != Rel::Eq) ++nslack;
    if (rb[i].rel != Rel::LessEq) ++nart;
  }

  const std::size_t cols = nstruct + nslack + nart;
  std::vector<RatVector> t(m, RatVector(cols + 1, Rational(0)));
  RatVector obj(cols + 1, Rational(0));
  std::vector<std::size_t> basis(m, 0);

  std::size_t next_slack = nstruct, next_art = nstruct + nslack;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nstruct; ++j) t[i][j] = rb[i].a[j];
    t[i][cols] = rb[i].b;
    if (rb[i].rel == Rel::LessEq) {
      t[i][next_slack] = 1;
      basis[i] = next_slack++;
    } else {
      if (rb[i].rel == Rel::GreaterEq) t[i][next_slack++] = -1;
      t[i][next_art] = 1;
      basis[i] = next_art;
      obj[next_art] = 1;
      ++next_art;
    }
  }
  // Price the artificial basics out of the objective row.
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < nstruct + nslack) continue;
    for (std::size_t j = 0; j <= cols; ++j) obj[j] -= t[i][j];
  }

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(obj[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw std::logic_error("phase-I objective unbounded");

    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (sgn(obj[enter]) != 0) {
      Rational f = obj[enter];
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  LpResult res;
  res.feasible = (sgn(obj[cols]) == 0);  // obj[cols] == -(sum of artificials)
  if (res.feasible) {
    RatVector colval(cols, Rational(0));
    for (std::size_t i = 0; i < m; ++i) colval[basis[i]] = t[i][cols];
    res.witness.assign(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      res.witness[j] = colval[col_of[j]];
      if (!nonneg[j]) res.witness[j] -= colval[col_of[j] + 1];
    }
  }
  return res;
}

bool lp_feasible(const LinearSystem& sys) { return lp_solve(sys).feasible; }

}  // namespace qehrhart
