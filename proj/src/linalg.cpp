#include "qehrhart/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qehrhart {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows[i][i] = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols) {
  if (cols.empty()) return RatMatrix();
  std::size_t m = cols.front().size();
  for (const auto& c : cols)
    if (c.size() != m) throw std::invalid_argument("ragged column list");
  RatMatrix a(m, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < m; ++i) a.rows[i][j] = cols[j][i];
  return a;
}

RatMatrix RatMatrix::from_int_columns(const std::vector<IntVector>& cols) {
  std::vector<RatVector> rc;
  rc.reserve(cols.size());
  for (const auto& c : cols) rc.push_back(to_rat_vector(c));
  return from_columns(rc);
}

IntVector primitive(const IntVector& v) {
  Integer g(0);
  for (const auto& x : v) g = gcd(g, x);
  if (sgn(g) == 0) throw std::domain_error("primitive of zero vector undefined");
  IntVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x / g);
  return r;
}

namespace {

// Row echelon form in place; returns pivot column per eliminated row.
std::vector<std::size_t> eliminate(RatMatrix& a) {
  std::size_t m = a.row_count(), n = a.col_count();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && sgn(a.rows[p][col]) == 0) ++p;
    if (p == m) continue;
    std::swap(a.rows[p], a.rows[row]);
    Rational inv = a.rows[row][col];
    for (std::size_t j = col; j < n; ++j) a.rows[row][j] /= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || sgn(a.rows[i][col]) == 0) continue;
      Rational f = a.rows[i][col];
      for (std::size_t j = col; j < n; ++j) a.rows[i][j] -= f * a.rows[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<RatVector> solve_exact(const RatMatrix& A, const RatVector& b) {
  std::size_t m = A.row_count(), n = A.col_count();
  if (b.size() != m) throw std::invalid_argument("rhs length mismatch");
  RatMatrix aug(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.rows[i][j] = A.rows[i][j];
    aug.rows[i][n] = b[i];
  }
  auto pivots = eliminate(aug);
  std::size_t r = 0;
  for (auto p : pivots)
    if (p < n) ++r;
  if (r < n) throw std::invalid_argument("columns not independent");
  // Any pivot in the rhs column marks an inconsistent row.
  for (auto p : pivots)
    if (p == n) return std::nullopt;
  for (std::size_t i = r; i < m; ++i)
    if (sgn(aug.rows[i][n]) != 0) return std::nullopt;
  RatVector x(n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = aug.rows[i][n];
  return x;
}

std::size_t rank(const RatMatrix& A) {
  RatMatrix copy = A;
  return eliminate(copy).size();
}

Rational determinant(const RatMatrix& A) {
  std::size_t n = A.row_count();
  if (n != A.col_count()) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix a = A;
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(a.rows[p][col]) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != col) {
      std::swap(a.rows[p], a.rows[col]);
      det = -det;
    }
    det *= a.rows[col][col];
    Rational inv = a.rows[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(a.rows[i][col]) == 0) continue;
      Rational f = a.rows[i][col] / inv;
      for (std::size_t j = col; j < n; ++j) a.rows[i][j] -= f * a.rows[col][j];
    }
  }
  return det;
}

RatVector kernel_vector(const RatMatrix& A) {
  std::size_t n = A.col_count();
  RatMatrix a = A;
  auto pivots = eliminate(a);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::size_t free_col = n;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) {
      free_col = j;
      break;
    }
  if (free_col == n) throw std::invalid_argument("matrix has trivial kernel");
  RatVector x(n, Rational(0));
  x[free_col] = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -a.rows[i][free_col];
  return x;
}

RatVector add(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector sub(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector scale(const Rational& c, const RatVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool lex_less(const RatVector& a, const RatVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Integer denominator_lcm(const RatVector& v) {
  Integer l(1);
  for (const auto& x : v) l = lcm(l, x.get_den());
  return l;
}

IntVector clear_denominators(const RatVector& v) {
  Integer l = denominator_lcm(v);
  IntVector r;
  r.reserve(v.size());
  for (const auto& x : v) {
    Rational y = x * Rational(l);
    r.push_back(y.get_num());
  }
  return r;
}

}  // namespace qehrhart
