#pragma once

#include <cstddef>
#include <vector>

#include "qehrhart/polytope.hpp"
#include "qehrhart/qratfn.hpp"

namespace qehrhart {

// Simplicial cone with independent primitive generators, a rational apex
// shift, and per-generator openness: open_facets[i] means the facet opposite
// generator i is excluded, i.e. the coefficient of generator i must be > 0.
struct HalfOpenSimplicialCone {
  std::vector<IntVector> generators;
  std::vector<bool> open_facets;
  RatVector shift;
};

using ConeDecomposition = std::vector<HalfOpenSimplicialCone>;

// Placing triangulation of a pointed cone: every returned piece is a set of
// indices into the input generator list, linearly independent and spanning the
// same linear span; the pieces cover the cone and meet in common faces.
// Deterministic: generators are processed in lexicographic order.
std::vector<std::vector<int>> triangulate(const std::vector<IntVector>& generators);

// Marks facets open/closed across the triangulated pieces so they partition
// the cone exactly, using a symbolically perturbed interior reference
// direction.
ConeDecomposition half_open_decompose(const std::vector<IntVector>& generators,
                                      const std::vector<std::vector<int>>& pieces,
                                      const RatVector& shift);

// Triangulates and half-opens in one step.
ConeDecomposition decompose_cone(const std::vector<IntVector>& generators,
                                 const RatVector& shift);

// All lattice points shift + sum t_i g_i with t_i in [0,1) (closed facet) or
// (0,1] (open facet).
std::vector<IntVector> parallelepiped_points(const HalfOpenSimplicialCone& cone);

struct SpecializedTransform {
  QRatFn value;
  std::vector<Integer> denominator_factors;  // the exponents lambda(g)
};

// Integer-point transform of the cone specialized at z_i = q^{lambda_i}:
// (sum over parallelepiped points of q^lambda(m)) / prod_g (1 - q^lambda(g)).
SpecializedTransform specialize(const HalfOpenSimplicialCone& cone, const IntegralForm& lam);

// Transform of the vertex cone of P at vertex v, shifted by r*v; r = 0 yields
// the rho value entering the Chapoton polynomial.
QRatFn rho(const Polytope& P, std::size_t v, const IntegralForm& lam, const Integer& r);

// Transform of the relative interior of the vertex cone, via the reciprocity
// involution on the closed transform.
QRatFn rho_open(const Polytope& P, std::size_t v, const IntegralForm& lam);

// Reciprocity involution for cone transforms of the given rank.
QRatFn stanley_transform(const QRatFn& f, std::size_t rank);

}  // namespace qehrhart
