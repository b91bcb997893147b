#include "qehrhart/conezeta.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "qehrhart/lp.hpp"

namespace qehrhart {

namespace {

std::size_t span_rank(const std::vector<IntVector>& rays) {
  RatMatrix m;
  for (const auto& r : rays) m.rows.push_back(to_rat_vector(r));
  return rank(m);
}

bool in_span(const std::vector<IntVector>& rays, const IntVector& r) {
  std::vector<IntVector> ext = rays;
  ext.push_back(r);
  return span_rank(rays) == span_rank(ext);
}

void require_pointed(const std::vector<IntVector>& rays) {
  if (rays.empty()) return;
  std::size_t d = rays[0].size();
  LinearSystem sys(rays.size());
  sys.mark_all_nonneg();
  for (std::size_t j = 0; j < d; ++j) {
    LinearConstraint row;
    for (const auto& g : rays) row.coeffs.push_back(Rational(g[j]));
    row.rel = Rel::Eq;
    row.rhs = 0;
    sys.add(row);
  }
  LinearConstraint row;
  row.coeffs.assign(rays.size(), Rational(1));
  row.rel = Rel::Eq;
  row.rhs = Rational(1);
  sys.add(row);
  if (lp_feasible(sys)) throw std::invalid_argument("cone is not pointed");
}

RatVector piece_coords(const std::vector<IntVector>& rays, const std::vector<int>& piece,
                       const RatVector& target) {
  std::vector<IntVector> cols;
  cols.reserve(piece.size());
  for (int idx : piece) cols.push_back(rays[static_cast<std::size_t>(idx)]);
  auto sol = solve_exact(RatMatrix::from_int_columns(cols), target);
  if (!sol) throw std::logic_error("ray outside the span of a triangulation piece");
  return *sol;
}

}  // namespace

std::vector<std::vector<int>> triangulate(const std::vector<IntVector>& generators) {
  if (generators.empty()) return {};

  std::vector<IntVector> prim;
  std::vector<int> rep;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    IntVector p = primitive(generators[i]);
    if (std::find(prim.begin(), prim.end(), p) == prim.end()) {
      prim.push_back(p);
      rep.push_back(static_cast<int>(i));
    }
  }
  require_pointed(prim);

  std::vector<int> order(prim.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return lex_less(prim[static_cast<std::size_t>(a)], prim[static_cast<std::size_t>(b)]);
  });

  std::vector<std::vector<int>> pieces;
  std::vector<IntVector> processed;

  for (int ri : order) {
    const IntVector& r = prim[static_cast<std::size_t>(ri)];
    RatVector rq = to_rat_vector(r);
    if (pieces.empty()) {
      pieces.push_back({ri});
      processed.push_back(r);
      continue;
    }

    if (!in_span(processed, r)) {
      for (auto& piece : pieces) {
        piece.push_back(ri);
        std::sort(piece.begin(), piece.end());
      }
      processed.push_back(r);
      continue;
    }

    std::map<std::size_t, RatVector> coords;
    std::vector<std::size_t> containing;
    for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
      RatVector c = piece_coords(prim, pieces[pi], rq);
      bool inside = true;
      for (const auto& ci : c)
        if (sgn(ci) < 0) inside = false;
      coords.emplace(pi, std::move(c));
      if (inside) containing.push_back(pi);
    }

    if (!containing.empty()) {
      // Stellar subdivision at r of every piece whose closure contains it.
      std::vector<std::vector<int>> next;
      for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
        if (std::find(containing.begin(), containing.end(), pi) == containing.end()) {
          next.push_back(pieces[pi]);
          continue;
        }
        const RatVector& c = coords.at(pi);
        for (std::size_t i = 0; i < pieces[pi].size(); ++i) {
          if (sgn(c[i]) <= 0) continue;
          std::vector<int> sub = pieces[pi];
          sub[i] = ri;
          std::sort(sub.begin(), sub.end());
          next.push_back(sub);
        }
      }
      pieces = std::move(next);
    } else {
      // Beneath-beyond placement: cone r over every visible boundary facet.
      std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> facets;
      for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
        for (std::size_t i = 0; i < pieces[pi].size(); ++i) {
          std::vector<int> f = pieces[pi];
          f.erase(f.begin() + static_cast<long>(i));
          facets[f].emplace_back(pi, i);
        }
      }
      std::vector<std::vector<int>> fresh;
      for (const auto& [facet, owners] : facets) {
        if (owners.size() != 1) continue;
        auto [pi, i] = owners[0];
        if (sgn(coords.at(pi)[i]) >= 0) continue;
        std::vector<int> sub = facet;
        sub.push_back(ri);
        std::sort(sub.begin(), sub.end());
        fresh.push_back(sub);
      }
      if (fresh.empty()) throw std::logic_error("placement failed to find a visible facet");
      pieces.insert(pieces.end(), fresh.begin(), fresh.end());
    }
    processed.push_back(r);
  }

  for (auto& piece : pieces) {
    for (auto& idx : piece) idx = rep[static_cast<std::size_t>(idx)];
    std::sort(piece.begin(), piece.end());
  }
  std::sort(pieces.begin(), pieces.end());
  return pieces;
}

ConeDecomposition half_open_decompose(const std::vector<IntVector>& generators,
                                      const std::vector<std::vector<int>>& pieces,
                                      const RatVector& shift) {
  std::vector<IntVector> rays;
  for (const auto& piece : pieces)
    for (int idx : piece) {
      IntVector p = primitive(generators[static_cast<std::size_t>(idx)]);
      if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(p);
    }
  std::sort(rays.begin(), rays.end(),
            [](const IntVector& a, const IntVector& b) { return lex_less(a, b); });

  RatVector xi0(shift.size(), Rational(0));
  if (!rays.empty()) {
    xi0.assign(rays[0].size(), Rational(0));
    for (const auto& r : rays) xi0 = add(xi0, to_rat_vector(r));
  }

  ConeDecomposition out;
  for (const auto& piece : pieces) {
    HalfOpenSimplicialCone cone;
    cone.shift = shift;
    std::vector<int> sorted_piece = piece;
    std::sort(sorted_piece.begin(), sorted_piece.end());
    for (int idx : sorted_piece)
      cone.generators.push_back(primitive(generators[static_cast<std::size_t>(idx)]));

    RatMatrix A = RatMatrix::from_int_columns(cone.generators);
    auto c0 = solve_exact(A, xi0);
    if (!c0) throw std::logic_error("reference direction outside the span of a piece");
    std::vector<RatVector> cpert;
    cpert.reserve(rays.size());
    for (const auto& r : rays) {
      auto c = solve_exact(A, to_rat_vector(r));
      if (!c) throw std::logic_error("perturbation direction outside the span of a piece");
      cpert.push_back(*c);
    }

    for (std::size_t i = 0; i < cone.generators.size(); ++i) {
      int s = sgn((*c0)[i]);
      for (std::size_t l = 0; s == 0 && l < cpert.size(); ++l) s = sgn(cpert[l][i]);
      if (s == 0) throw std::logic_error("perturbed reference direction lies on a facet");
      cone.open_facets.push_back(s < 0);
    }
    out.push_back(std::move(cone));
  }
  return out;
}

ConeDecomposition decompose_cone(const std::vector<IntVector>& generators,
                                 const RatVector& shift) {
  if (generators.empty()) return {HalfOpenSimplicialCone{{}, {}, shift}};
  return half_open_decompose(generators, triangulate(generators), shift);
}

std::vector<IntVector> parallelepiped_points(const HalfOpenSimplicialCone& cone) {
  std::size_t d = cone.shift.size();
  std::vector<IntVector> out;

  if (cone.generators.empty()) {
    IntVector m(d);
    for (std::size_t j = 0; j < d; ++j) {
      if (cone.shift[j].get_den() != 1) return out;
      m[j] = cone.shift[j].get_num();
    }
    out.push_back(m);
    return out;
  }

  IntVector lo(d), hi(d);
  Integer volume = 1;
  for (std::size_t j = 0; j < d; ++j) {
    Rational a = cone.shift[j], b = cone.shift[j];
    for (const auto& g : cone.generators) {
      if (sgn(g[j]) < 0)
        a += Rational(g[j]);
      else
        b += Rational(g[j]);
    }
    lo[j] = ceil_int(a);
    hi[j] = floor_int(b);
    if (hi[j] < lo[j]) return out;
    volume *= hi[j] - lo[j] + 1;
  }
  if (volume > enumeration_box_limit())
    throw std::runtime_error("parallelepiped enumeration box exceeds QEHRHART_MAX_BOX");

  RatMatrix A = RatMatrix::from_int_columns(cone.generators);
  IntVector m = lo;
  while (true) {
    RatVector rhs(d);
    for (std::size_t j = 0; j < d; ++j) rhs[j] = Rational(m[j]) - cone.shift[j];
    auto t = solve_exact(A, rhs);
    if (t) {
      bool keep = true;
      for (std::size_t i = 0; i < t->size() && keep; ++i) {
        const Rational& ti = (*t)[i];
        if (cone.open_facets[i])
          keep = sgn(ti) > 0 && ti <= 1;
        else
          keep = sgn(ti) >= 0 && ti < 1;
      }
      if (keep) out.push_back(m);
    }
    std::size_t j = 0;
    while (j < d && m[j] == hi[j]) {
      m[j] = lo[j];
      ++j;
    }
    if (j == d) break;
    m[j] += 1;
  }
  std::sort(out.begin(), out.end(),
            [](const IntVector& a, const IntVector& b) { return lex_less(a, b); });
  return out;
}

SpecializedTransform specialize(const HalfOpenSimplicialCone& cone, const IntegralForm& lam) {
  SpecializedTransform out;
  LaurentPoly num;
  for (const auto& m : parallelepiped_points(cone))
    num.add_term(to_long(lambda_of(lam, m)), Rational(1));
  LaurentPoly den = LaurentPoly::one();
  for (const auto& g : cone.generators) {
    Integer a = lambda_of(lam, g);
    if (sgn(a) == 0)
      throw GenericityError("form not generic on cone generator " +
                            point_str(to_rat_vector(g)));
    out.denominator_factors.push_back(a);
    LaurentPoly factor = LaurentPoly::one();
    factor.add_term(to_long(a), Rational(-1));
    den *= factor;
  }
  out.value = QRatFn(num, den);
  return out;
}

QRatFn rho(const Polytope& P, std::size_t v, const IntegralForm& lam, const Integer& r) {
  VertexCone K = vertex_cone(P, v);
  RatVector shift = scale(Rational(r), P.vertices.at(v));
  QRatFn total;
  for (const auto& piece : decompose_cone(K.generators, shift))
    total += specialize(piece, lam).value;
  return total;
}

QRatFn stanley_transform(const QRatFn& f, std::size_t rank) {
  QRatFn s = f.substitute_q_inverse();
  return (rank % 2) ? -s : s;
}

QRatFn rho_open(const Polytope& P, std::size_t v, const IntegralForm& lam) {
  VertexCone K = vertex_cone(P, v);
  return stanley_transform(rho(P, v, lam, 0), span_rank(K.generators));
}

}  // namespace qehrhart
