#pragma once

#include <cstddef>
#include <optional>

#include "qehrhart/numbers.hpp"

namespace qehrhart {

// Dense rational matrix, row major.
struct RatMatrix {
  std::vector<RatVector> rows;

  RatMatrix() = default;
  RatMatrix(std::size_t m, std::size_t n) : rows(m, RatVector(n, Rational(0))) {}

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return rows.empty() ? 0 : rows.front().size(); }

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_columns(const std::vector<RatVector>& cols);
  static RatMatrix from_int_columns(const std::vector<IntVector>& cols);
};

// v divided by the gcd of its entries; signs untouched. Throws on the zero
// vector, whose direction is undefined.
IntVector primitive(const IntVector& v);

// Unique x with A x = b, or nullopt when the system is inconsistent.
// Requires linearly independent columns (throws otherwise).
std::optional<RatVector> solve_exact(const RatMatrix& A, const RatVector& b);

std::size_t rank(const RatMatrix& A);
Rational determinant(const RatMatrix& A);

// One nonzero vector x with A x = 0; requires a nontrivial kernel.
RatVector kernel_vector(const RatMatrix& A);

RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const Rational& c, const RatVector& v);
Rational dot(const RatVector& a, const RatVector& b);

bool lex_less(const RatVector& a, const RatVector& b);
bool lex_less(const IntVector& a, const IntVector& b);

// Smallest positive integer q with q*v integral, and the cleared vector.
Integer denominator_lcm(const RatVector& v);
IntVector clear_denominators(const RatVector& v);

}  // namespace qehrhart
