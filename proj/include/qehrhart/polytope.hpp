#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qehrhart/linalg.hpp"
#include "qehrhart/numbers.hpp"

namespace qehrhart {

// Integral linear form on the ambient lattice.
struct IntegralForm {
  IntVector coeffs;
};

Integer lambda_of(const IntegralForm& lam, const IntVector& x);
Rational lambda_of(const IntegralForm& lam, const RatVector& x);

struct Polytope {
  std::vector<RatVector> vertices;            // extremal points, lex sorted
  std::vector<std::pair<int, int>> edges;     // index pairs with i < j, sorted
  int dim = 0;                                // affine dimension
  Integer denominator = 1;                    // minimal p with p*v integral for all v

  std::size_t ambient_dim() const { return vertices.empty() ? 0 : vertices[0].size(); }
  std::vector<int> neighbors(std::size_t v) const;
};

// Drops non-extremal points, sorts vertices, computes dimension, denominator
// and the edge graph, all in exact arithmetic.
Polytope build_polytope(const std::vector<RatVector>& points);

// Tangent cone of P at a vertex, translated so the apex sits at the origin.
struct VertexCone {
  RatVector apex;
  std::vector<IntVector> generators;   // primitive edge directions, lex sorted
  std::vector<Integer> edge_labels;    // lambda(g) per generator when a form was supplied
};

VertexCone vertex_cone(const Polytope& P, std::size_t v);
VertexCone vertex_cone(const Polytope& P, std::size_t v, const IntegralForm& lam);

struct GenericityReport {
  bool ok = true;
  std::string message;
};

// The form must be nonnegative on every vertex and take distinct values on the
// endpoints of every edge.
GenericityReport check_generic_positive(const Polytope& P, const IntegralForm& lam);

class GenericityError : public std::runtime_error {
 public:
  explicit GenericityError(const std::string& what) : std::runtime_error(what) {}
};

void require_generic_positive(const Polytope& P, const IntegralForm& lam);

std::string point_str(const RatVector& v);

}  // namespace qehrhart
