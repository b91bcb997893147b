#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qehrhart/polytope.hpp"

using namespace qehrhart;

namespace {

RatVector pt(std::initializer_list<long> coords) {
  RatVector v;
  for (long c : coords) v.push_back(Rational(c));
  return v;
}

RatVector ptq(std::initializer_list<Rational> coords) { return RatVector(coords); }

bool has_edge(const Polytope& P, const RatVector& a, const RatVector& b) {
  auto ia = std::find(P.vertices.begin(), P.vertices.end(), a);
  auto ib = std::find(P.vertices.begin(), P.vertices.end(), b);
  REQUIRE(ia != P.vertices.end());
  REQUIRE(ib != P.vertices.end());
  int i = static_cast<int>(ia - P.vertices.begin());
  int j = static_cast<int>(ib - P.vertices.begin());
  if (i > j) std::swap(i, j);
  return std::find(P.edges.begin(), P.edges.end(), std::make_pair(i, j)) != P.edges.end();
}

}  // namespace

TEST_CASE("hull construction drops interior points and duplicates") {
  Polytope P = build_polytope({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1}),
                               ptq({Rational(1, 2), Rational(1, 2)}), pt({1, 1})});
  CHECK(P.vertices.size() == 4);
  CHECK(P.dim == 2);
  CHECK(P.denominator == 1);
  CHECK(P.edges.size() == 4);
  CHECK(has_edge(P, pt({0, 0}), pt({1, 0})));
  CHECK(has_edge(P, pt({0, 0}), pt({0, 1})));
  CHECK(has_edge(P, pt({1, 0}), pt({1, 1})));
  CHECK(has_edge(P, pt({0, 1}), pt({1, 1})));
  CHECK_FALSE(has_edge(P, pt({0, 0}), pt({1, 1})));
  CHECK_FALSE(has_edge(P, pt({1, 0}), pt({0, 1})));
}

TEST_CASE("midpoint relative interior does not disqualify an edge") {
  // The diagonal from (0,0) to (4,0) of this kite has its midpoint in the
  // interior, yet it is not an edge; the four boundary segments are.
  Polytope P = build_polytope({pt({0, 0}), pt({4, 0}), pt({1, 10}), pt({1, -10})});
  CHECK(P.vertices.size() == 4);
  CHECK(P.edges.size() == 4);
  CHECK_FALSE(has_edge(P, pt({0, 0}), pt({4, 0})));
  CHECK_FALSE(has_edge(P, pt({1, 10}), pt({1, -10})));
  CHECK(has_edge(P, pt({0, 0}), pt({1, 10})));
  CHECK(has_edge(P, pt({0, 0}), pt({1, -10})));
  CHECK(has_edge(P, pt({4, 0}), pt({1, 10})));
  CHECK(has_edge(P, pt({4, 0}), pt({1, -10})));
}

TEST_CASE("simplices have complete edge graphs") {
  Polytope P = build_polytope({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  CHECK(P.vertices.size() == 4);
  CHECK(P.dim == 3);
  CHECK(P.edges.size() == 6);
}

TEST_CASE("cross polytope adjacency omits antipodal pairs") {
  std::vector<RatVector> points;
  for (int j = 0; j < 3; ++j) {
    for (int s : {-1, 1}) {
      RatVector v(3, Rational(0));
      v[static_cast<std::size_t>(j)] = s;
      points.push_back(v);
    }
  }
  Polytope P = build_polytope(points);
  CHECK(P.vertices.size() == 6);
  CHECK(P.edges.size() == 12);
  for (std::size_t v = 0; v < 6; ++v) CHECK(P.neighbors(v).size() == 4);
  RatVector e0(3, Rational(0)), e0n(3, Rational(0));
  e0[0] = 1;
  e0n[0] = -1;
  CHECK_FALSE(has_edge(P, e0, e0n));
}

TEST_CASE("lower dimensional polytopes in higher ambient space") {
  Polytope seg = build_polytope({pt({0, 0, 0}), pt({2, 4, 6})});
  CHECK(seg.dim == 1);
  CHECK(seg.edges.size() == 1);

  Polytope tri = build_polytope({pt({0, 0, 1}), pt({1, 0, 1}), pt({0, 1, 1})});
  CHECK(tri.dim == 2);
  CHECK(tri.vertices.size() == 3);
  CHECK(tri.edges.size() == 3);

  Polytope point = build_polytope({pt({3, 5})});
  CHECK(point.dim == 0);
  CHECK(point.edges.empty());
}

TEST_CASE("denominator is the least common dilation") {
  CHECK(build_polytope({pt({0}), ptq({Rational(1, 2)})}).denominator == 2);
  CHECK(build_polytope({ptq({Rational(1, 3)}), ptq({Rational(2, 3)})}).denominator == 3);
  CHECK(build_polytope({ptq({Rational(1, 2), Rational(1, 3)}), pt({1, 1})}).denominator == 6);
  CHECK(build_polytope({pt({0, 0}), pt({2, 1})}).denominator == 1);
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(build_polytope({}), std::invalid_argument);
  CHECK_THROWS_AS(build_polytope({pt({1, 2}), pt({1})}), std::invalid_argument);
  CHECK_THROWS_AS(build_polytope({RatVector{}}), std::invalid_argument);
}

TEST_CASE("vertices are sorted lexicographically") {
  Polytope P = build_polytope({pt({1, 0}), pt({0, 1}), pt({0, 0})});
  CHECK(P.vertices[0] == pt({0, 0}));
  CHECK(P.vertices[1] == pt({0, 1}));
  CHECK(P.vertices[2] == pt({1, 0}));
}

TEST_CASE("vertex cones collect primitive edge directions") {
  Polytope P = build_polytope({pt({0, 0}), pt({1, 0}), pt({0, 1})});
  IntegralForm lam{{Integer(1), Integer(2)}};
  // Vertex index 1 is (0, 1) in lex order.
  VertexCone K = vertex_cone(P, 1, lam);
  CHECK(K.apex == pt({0, 1}));
  REQUIRE(K.generators.size() == 2);
  CHECK(K.generators[0] == IntVector{Integer(0), Integer(-1)});
  CHECK(K.generators[1] == IntVector{Integer(1), Integer(-1)});
  CHECK(K.edge_labels == std::vector<Integer>{Integer(-2), Integer(-1)});

  Polytope S = build_polytope({pt({0, 0}), pt({3, 0}), pt({0, 6})});
  VertexCone KS = vertex_cone(S, 0);
  CHECK(KS.generators[0] == IntVector{Integer(0), Integer(1)});
  CHECK(KS.generators[1] == IntVector{Integer(1), Integer(0)});
  CHECK(KS.edge_labels.empty());
}

TEST_CASE("cube vertex cones have one generator per incident edge") {
  std::vector<RatVector> corners;
  for (int mask = 0; mask < 8; ++mask) {
    corners.push_back(pt({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1}));
  }
  Polytope P = build_polytope(corners);
  CHECK(P.edges.size() == 12);
  for (std::size_t v = 0; v < 8; ++v) {
    CHECK(vertex_cone(P, v).generators.size() == 3);
  }
}

TEST_CASE("genericity check accepts separating forms") {
  Polytope square = build_polytope({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
  CHECK(check_generic_positive(square, IntegralForm{{Integer(1), Integer(1)}}).ok);
  CHECK(check_generic_positive(square, IntegralForm{{Integer(1), Integer(2)}}).ok);
}

TEST_CASE("genericity check rejects equal values on an edge") {
  Polytope square = build_polytope({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
  GenericityReport rep = check_generic_positive(square, IntegralForm{{Integer(1), Integer(0)}});
  CHECK_FALSE(rep.ok);
  CHECK(rep.message.find("same value") != std::string::npos);
  CHECK(rep.message.find("(0, 0)") != std::string::npos);
  CHECK(rep.message.find("(0, 1)") != std::string::npos);
  CHECK_THROWS_AS(require_generic_positive(square, IntegralForm{{Integer(1), Integer(0)}}),
                  GenericityError);
}

TEST_CASE("genericity check rejects negative vertex values") {
  Polytope tri = build_polytope({pt({0, 0}), pt({1, 0}), pt({0, 1})});
  GenericityReport rep = check_generic_positive(tri, IntegralForm{{Integer(-1), Integer(2)}});
  CHECK_FALSE(rep.ok);
  CHECK(rep.message.find("negative") != std::string::npos);
  CHECK(rep.message.find("(1, 0)") != std::string::npos);
}

TEST_CASE("non adjacent equal values are allowed") {
  // (1, 0) and (0, 1) are opposite corners of the square, not adjacent.
  Polytope square = build_polytope({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
  CHECK(check_generic_positive(square, IntegralForm{{Integer(1), Integer(1)}}).ok);
}

TEST_CASE("form evaluation") {
  IntegralForm lam{{Integer(1), Integer(2)}};
  CHECK(lambda_of(lam, IntVector{Integer(3), Integer(-1)}) == 1);
  CHECK(lambda_of(lam, ptq({Rational(1, 2), Rational(1, 4)})) == Rational(1));
  CHECK_THROWS(lambda_of(lam, IntVector{Integer(1)}));
}

TEST_CASE("point rendering") {
  CHECK(point_str(ptq({Rational(1, 2), Rational(-3)})) == "(1/2, -3)");
  CHECK(point_str(pt({7})) == "(7)");
}
