#pragma once

#include <vector>

#include "qehrhart/chapoton.hpp"
#include "qehrhart/oracle.hpp"
#include "qehrhart/polytope.hpp"
#include "qehrhart/xpoly.hpp"

namespace qehrhart {

struct PermStat {
  unsigned long descents;
  unsigned long major_index;
};

// One entry per permutation of {1..n}.
std::vector<PermStat> permutation_statistics(unsigned long n);

// Coefficients (in the descent power) of sum over permutations of
// x^descents * q^major_index.
std::vector<LaurentPoly> euler_mahonian(unsigned long n);

Polytope unit_cube(std::size_t d);

// Product formula for the cube polynomial: prod_j (1 - q^a_j y^a_j)/(1 - q^a_j)
// with y = (q-1)x + 1; equals (1 + qx)^d when all a_j = 1.
XPoly cube_closed_form(const IntegralForm& lam);

Polytope standard_simplex(std::size_t d);

// Transform of the standard-simplex vertex cone at vertex j (vertex 0 is the
// origin, vertex j >= 1 is e_j), by the product formula with the convention
// lambda_0 = 0: 1 / prod_{k != j} (1 - q^(lambda_k - lambda_j)).
QRatFn standard_simplex_rho(const IntegralForm& lam, std::size_t j);

// conv{0, e_1, e_1+e_2, ..., e_1+...+e_d}.
Polytope staircase_simplex(std::size_t d);

QRatFn staircase_rho(std::size_t d, std::size_t j);
XPoly staircase_closed_form(std::size_t d);
LaurentPoly staircase_count(std::size_t d, long t);  // Gaussian binomial [t+d, d]

// Compares sum_t [t+1]_q^n x^t against the Euler-Mahonian rational series,
// coefficient by coefficient up to x^truncation.
bool carlitz_check(unsigned long n, unsigned long truncation);

// {x in [0,1]^n : x_1 <= x_2/2 <= ... <= x_n/n}. The candidate vertex list is
// validated against the defining inequalities, extremality, and the exact
// facet system before being returned; validation failure throws.
Polytope lecture_hall_simplex(unsigned long n);

// Weighted counts E(q, t), t = 0..t_max, for the lecture hall simplex with the
// all-ones form, built by the dilation recursion and cross-checked entry by
// entry against the enumeration oracle; any mismatch throws.
struct LectureHallTable {
  unsigned long n;
  std::vector<LaurentPoly> counts;
};
LectureHallTable lecture_hall_recursion_table(unsigned long n, long t_max);

// The constituent family chap_{n,i}, i = 0..n, built from the q-difference
// equation for chap_{n,0} and the iterated sum for i >= 1.
struct LectureHallFamily {
  unsigned long n;
  std::vector<XPoly> members;
};
LectureHallFamily lecture_hall_family(unsigned long n);

// Verifies chap_{n,0}(1+qx) - chap_{n,0}(x) =
// ((q-1)x+1)^n sum_{j=0}^{n-1} q^{j+1} chap_{n-1,j}(x).
bool q_difference_check(const LectureHallFamily& fam, const LectureHallFamily& prev);

// chap_{n,0}(1/(1-q)): the generating function of the vertex cone at the
// origin, i.e. of lecture hall partitions with at most n parts.
QRatFn lecture_hall_limit(const LectureHallFamily& fam);

}  // namespace qehrhart
