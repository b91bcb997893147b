#pragma once

#include <cstddef>
#include <vector>

#include "qehrhart/conezeta.hpp"
#include "qehrhart/polytope.hpp"
#include "qehrhart/xpoly.hpp"

namespace qehrhart {

struct VertexContribution {
  std::size_t vertex;   // index into P.vertices
  Integer weight;       // lambda(p * v), the exponent of (q-1)x + 1
  QRatFn zeta;          // transform of the (shifted) vertex cone
};

struct ChapotonPolynomial {
  XPoly poly;
  IntegralForm lambda;
  int dim = 0;
  Integer period = 1;
  Integer residue = 0;
  std::vector<VertexContribution> vertex_data;

  long degree() const { return poly.degree(); }
  QRatFn leading_coefficient() const;
  QRatFn constant_term() const { return poly.coeff(0); }
};

// The polynomial (q-1)x + 1, whose value at x = [t]_q is q^t.
XPoly dilation_kernel();

// Full polynomial of a lattice polytope: sum over vertices of
// zeta_v * ((q-1)x + 1)^lambda(v). Requires denominator 1; rational polytopes
// go through constituents().
ChapotonPolynomial chapoton_polynomial(const Polytope& P, const IntegralForm& lam);

// The p quasipolynomial constituents of a rational polytope, indexed by
// residue r = 0..p-1; evaluating constituent r at [k]_q counts the points of
// (kp + r)P. A lattice polytope yields the single full polynomial.
std::vector<ChapotonPolynomial> constituents(const Polytope& P, const IntegralForm& lam);

// C(q, [k]_q).
QRatFn evaluate(const ChapotonPolynomial& C, long k);

// C(q, 1/(1-q)): the transform of the vertex cone at the unique vertex where
// the form vanishes, or zero when the form is positive on every vertex.
QRatFn evaluate_limit(const ChapotonPolynomial& C);

// Interior counterpart: coefficient k becomes (-1)^dim (-q)^k c_k(1/q).
// Evaluating the result at [t]_q sums q^lambda(m) over interior points of tP.
ChapotonPolynomial reciprocal(const ChapotonPolynomial& C);

}  // namespace qehrhart
