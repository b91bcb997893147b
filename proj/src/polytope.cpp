#include "qehrhart/polytope.hpp"

#include <algorithm>
#include <sstream>

#include "qehrhart/lp.hpp"

namespace qehrhart {

Integer lambda_of(const IntegralForm& lam, const IntVector& x) {
  if (lam.coeffs.size() != x.size()) throw std::invalid_argument("form/point length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += lam.coeffs[i] * x[i];
  return s;
}

Rational lambda_of(const IntegralForm& lam, const RatVector& x) {
  if (lam.coeffs.size() != x.size()) throw std::invalid_argument("form/point length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += Rational(lam.coeffs[i]) * x[i];
  return s;
}

std::vector<int> Polytope::neighbors(std::size_t v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == static_cast<int>(v)) out.push_back(b);
    if (b == static_cast<int>(v)) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// True when p is a convex combination of the given points.
bool in_hull(const RatVector& p, const std::vector<RatVector>& points) {
  if (points.empty()) return false;
  std::size_t d = p.size();
  LinearSystem sys(points.size());
  sys.mark_all_nonneg();
  {
    LinearConstraint row;
    row.coeffs.assign(points.size(), Rational(1));
    row.rel = Rel::Eq;
    row.rhs = Rational(1);
    sys.add(row);
  }
  for (std::size_t j = 0; j < d; ++j) {
    LinearConstraint row;
    row.coeffs.reserve(points.size());
    for (const auto& u : points) row.coeffs.push_back(u[j]);
    row.rel = Rel::Eq;
    row.rhs = p[j];
    sys.add(row);
  }
  return lp_feasible(sys);
}

// True when the segment between vertices a and b is a face: its midpoint has
// no convex representation putting weight outside {a, b}.
bool is_edge(const std::vector<RatVector>& verts, std::size_t a, std::size_t b) {
  std::size_t d = verts[0].size();
  RatVector mid(d);
  for (std::size_t j = 0; j < d; ++j) mid[j] = (verts[a][j] + verts[b][j]) / 2;

  LinearSystem sys(verts.size());
  sys.mark_all_nonneg();
  {
    LinearConstraint row;
    row.coeffs.assign(verts.size(), Rational(1));
    row.coeffs[a] = 0;
    row.coeffs[b] = 0;
    row.rel = Rel::Eq;
    row.rhs = Rational(1);
    sys.add(row);
  }
  for (std::size_t j = 0; j < d; ++j) {
    LinearConstraint row;
    row.coeffs.reserve(verts.size());
    for (const auto& u : verts) row.coeffs.push_back(u[j] - mid[j]);
    row.rel = Rel::Eq;
    row.rhs = 0;
    sys.add(row);
  }
  return !lp_feasible(sys);
}

}  // namespace

Polytope build_polytope(const std::vector<RatVector>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  std::size_t d = points[0].size();
  if (d == 0) throw std::invalid_argument("points must have positive length");
  for (const auto& p : points)
    if (p.size() != d) throw std::invalid_argument("points of unequal length");

  std::vector<RatVector> distinct = points;
  std::sort(distinct.begin(), distinct.end(),
            [](const RatVector& a, const RatVector& b) { return lex_less(a, b); });
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  Polytope P;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    std::vector<RatVector> others;
    others.reserve(distinct.size() - 1);
    for (std::size_t j = 0; j < distinct.size(); ++j)
      if (j != i) others.push_back(distinct[j]);
    if (!in_hull(distinct[i], others)) P.vertices.push_back(distinct[i]);
  }

  RatMatrix diffs;
  for (std::size_t i = 1; i < P.vertices.size(); ++i)
    diffs.rows.push_back(sub(P.vertices[i], P.vertices[0]));
  P.dim = static_cast<int>(rank(diffs));

  P.denominator = 1;
  for (const auto& v : P.vertices)
    for (const auto& c : v) P.denominator = lcm(P.denominator, c.get_den());

  for (std::size_t i = 0; i < P.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < P.vertices.size(); ++j)
      if (is_edge(P.vertices, i, j))
        P.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));

  return P;
}

VertexCone vertex_cone(const Polytope& P, std::size_t v) {
  VertexCone cone;
  cone.apex = P.vertices.at(v);
  for (int w : P.neighbors(v)) {
    RatVector dir = sub(P.vertices[w], cone.apex);
    cone.generators.push_back(primitive(clear_denominators(dir)));
  }
  std::sort(cone.generators.begin(), cone.generators.end(),
            [](const IntVector& a, const IntVector& b) { return lex_less(a, b); });
  cone.generators.erase(std::unique(cone.generators.begin(), cone.generators.end()),
                        cone.generators.end());
  return cone;
}

VertexCone vertex_cone(const Polytope& P, std::size_t v, const IntegralForm& lam) {
  VertexCone cone = vertex_cone(P, v);
  for (const auto& g : cone.generators) cone.edge_labels.push_back(lambda_of(lam, g));
  return cone;
}

std::string point_str(const RatVector& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << to_string(v[i]);
  }
  out << ")";
  return out.str();
}

GenericityReport check_generic_positive(const Polytope& P, const IntegralForm& lam) {
  GenericityReport rep;
  for (const auto& v : P.vertices) {
    Rational val = lambda_of(lam, v);
    if (sgn(val) < 0) {
      rep.ok = false;
      rep.message = "form is negative at vertex " + point_str(v) + " (value " +
                    to_string(val) + ")";
      return rep;
    }
  }
  for (const auto& [i, j] : P.edges) {
    Rational a = lambda_of(lam, P.vertices[i]);
    Rational b = lambda_of(lam, P.vertices[j]);
    if (a == b) {
      rep.ok = false;
      rep.message = "form takes the same value " + to_string(a) +
                    " on the adjacent vertices " + point_str(P.vertices[i]) + " and " +
                    point_str(P.vertices[j]);
      return rep;
    }
  }
  return rep;
}

void require_generic_positive(const Polytope& P, const IntegralForm& lam) {
  GenericityReport rep = check_generic_positive(P, lam);
  if (!rep.ok) throw GenericityError(rep.message);
}

}  // namespace qehrhart
