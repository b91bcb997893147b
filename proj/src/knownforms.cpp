#include "qehrhart/knownforms.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "qehrhart/linalg.hpp"

namespace qehrhart {

namespace {

LaurentPoly one_minus_q_pow(long a) {
  LaurentPoly p = LaurentPoly::one();
  p.add_term(a, Rational(-1));
  return p;
}

long form_entry(const IntegralForm& lam, std::size_t j) {
  long a = to_long(lam.coeffs[j]);
  if (a <= 0) {
    throw std::invalid_argument("closed form requires strictly positive form entries");
  }
  return a;
}

}  // namespace

std::vector<PermStat> permutation_statistics(unsigned long n) {
  if (n > 9) {
    throw std::invalid_argument("permutation statistics capped at n = 9");
  }
  std::vector<unsigned long> perm(n);
  std::iota(perm.begin(), perm.end(), 1UL);
  std::vector<PermStat> out;
  do {
    unsigned long des = 0;
    unsigned long maj = 0;
    for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
      if (perm[i] > perm[i + 1]) {
        ++des;
        maj += i + 1;
      }
    }
    out.push_back(PermStat{des, maj});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<LaurentPoly> euler_mahonian(unsigned long n) {
  std::vector<LaurentPoly> coeffs(n == 0 ? 1 : n);
  for (const PermStat& s : permutation_statistics(n)) {
    coeffs[s.descents].add_term(static_cast<long>(s.major_index), Rational(1));
  }
  return coeffs;
}

Polytope unit_cube(std::size_t d) {
  std::vector<RatVector> points;
  points.reserve(std::size_t(1) << d);
  for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
    RatVector v(d, Rational(0));
    for (std::size_t j = 0; j < d; ++j) {
      if (mask & (std::size_t(1) << j)) v[j] = 1;
    }
    points.push_back(std::move(v));
  }
  return build_polytope(points);
}

XPoly cube_closed_form(const IntegralForm& lam) {
  const XPoly y = dilation_kernel();
  XPoly result(1);
  for (std::size_t j = 0; j < lam.coeffs.size(); ++j) {
    long a = form_entry(lam, j);
    XPoly factor =
        XPoly(1) - y.pow(static_cast<unsigned long>(a)) *
                       QRatFn(LaurentPoly::monomial(a, Rational(1)));
    result = result * factor * QRatFn(LaurentPoly::one(), one_minus_q_pow(a));
  }
  return result;
}

Polytope standard_simplex(std::size_t d) {
  std::vector<RatVector> points(d + 1, RatVector(d, Rational(0)));
  for (std::size_t j = 1; j <= d; ++j) points[j][j - 1] = 1;
  return build_polytope(points);
}

QRatFn standard_simplex_rho(const IntegralForm& lam, std::size_t j) {
  const std::size_t d = lam.coeffs.size();
  if (j > d) throw std::out_of_range("simplex vertex index out of range");
  auto entry = [&](std::size_t k) -> Integer {
    return k == 0 ? Integer(0) : lam.coeffs[k - 1];
  };
  LaurentPoly den = LaurentPoly::one();
  for (std::size_t k = 0; k <= d; ++k) {
    if (k == j) continue;
    den *= one_minus_q_pow(to_long(entry(k) - entry(j)));
  }
  return QRatFn(LaurentPoly::one(), den);
}

Polytope staircase_simplex(std::size_t d) {
  std::vector<RatVector> points(d + 1, RatVector(d, Rational(0)));
  for (std::size_t j = 1; j <= d; ++j) {
    for (std::size_t k = 0; k < j; ++k) points[j][k] = 1;
  }
  return build_polytope(points);
}

QRatFn staircase_rho(std::size_t d, std::size_t j) {
  if (j > d) throw std::out_of_range("simplex vertex index out of range");
  LaurentPoly den = LaurentPoly::one();
  for (std::size_t k = 0; k <= d; ++k) {
    if (k == j) continue;
    den *= one_minus_q_pow(static_cast<long>(k) - static_cast<long>(j));
  }
  return QRatFn(LaurentPoly::one(), den);
}

XPoly staircase_closed_form(std::size_t d) {
  XPoly result(1);
  for (std::size_t j = 1; j <= d; ++j) {
    XPoly factor =
        XPoly::x() * QRatFn(LaurentPoly::monomial(static_cast<long>(j), Rational(1))) +
        XPoly(q_bracket(static_cast<long>(j)));
    result = result * factor;
  }
  return result * QRatFn(LaurentPoly::one(), q_factorial(d));
}

LaurentPoly staircase_count(std::size_t d, long t) {
  if (t < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  return q_binomial(static_cast<unsigned long>(t) + d, d);
}

bool carlitz_check(unsigned long n, unsigned long truncation) {
  const std::vector<LaurentPoly> numerator = euler_mahonian(n);
  // Denominator prod_{j=0}^{n} (1 - x q^j), expanded in powers of x.
  std::vector<LaurentPoly> den{LaurentPoly::one()};
  for (unsigned long j = 0; j <= n; ++j) {
    std::vector<LaurentPoly> next(den.size() + 1);
    for (std::size_t i = 0; i < den.size(); ++i) {
      next[i] += den[i];
      next[i + 1] -= den[i] * LaurentPoly::monomial(static_cast<long>(j), Rational(1));
    }
    den = std::move(next);
  }
  // Power series division: series[t] * den[0] = numerator[t] - sum_{i>=1} ...
  std::vector<LaurentPoly> series(truncation + 1);
  for (unsigned long t = 0; t <= truncation; ++t) {
    LaurentPoly acc = t < numerator.size() ? numerator[t] : LaurentPoly();
    for (std::size_t i = 1; i < den.size() && i <= t; ++i) {
      acc -= den[i] * series[t - i];
    }
    series[t] = acc;  // den[0] == 1
    LaurentPoly expected =
        q_bracket(static_cast<long>(t) + 1).as_laurent().pow(n);
    if (series[t] != expected) return false;
  }
  return true;
}

namespace {

struct Facet {
  IntVector normal;  // inward: <normal, x> >= offset on the polytope
  Rational offset;

  bool operator<(const Facet& o) const {
    if (normal != o.normal) return lex_less(normal, o.normal);
    return offset < o.offset;
  }
  bool operator==(const Facet& o) const {
    return normal == o.normal && offset == o.offset;
  }
};

Facet simplex_facet(const Polytope& P, std::size_t opposite) {
  std::vector<RatVector> diffs;
  RatVector base;
  for (std::size_t k = 0; k < P.vertices.size(); ++k) {
    if (k == opposite) continue;
    if (base.empty()) {
      base = P.vertices[k];
    } else {
      diffs.push_back(sub(P.vertices[k], base));
    }
  }
  if (diffs.empty()) diffs.push_back(RatVector(P.ambient_dim(), Rational(0)));
  RatMatrix M;
  M.rows = diffs;
  RatVector normal = kernel_vector(M);
  Rational side = dot(normal, P.vertices[opposite]) - dot(normal, base);
  if (side == 0) throw std::logic_error("degenerate simplex facet");
  if (side < 0) {
    for (Rational& c : normal) c = -c;
  }
  IntVector primitive_normal = primitive(clear_denominators(normal));
  Rational offset = dot(to_rat_vector(primitive_normal), base);
  return Facet{std::move(primitive_normal), offset};
}

}  // namespace

Polytope lecture_hall_simplex(unsigned long n) {
  if (n == 0) throw std::invalid_argument("lecture hall simplex requires n >= 1");
  const std::size_t d = n;
  std::vector<RatVector> candidates;
  for (unsigned long k = 0; k <= n; ++k) {
    RatVector v(d, Rational(0));
    for (std::size_t i = d - k; i < d; ++i) {
      v[i] = make_rational(Integer(i + 1), Integer(n));
    }
    candidates.push_back(std::move(v));
  }
  for (const RatVector& v : candidates) {
    bool ok = v[0] >= 0 && v[d - 1] <= 1;
    for (std::size_t i = 0; i + 1 < d && ok; ++i) {
      ok = Rational(static_cast<long>(i) + 1) * v[i + 1] >=
           Rational(static_cast<long>(i) + 2) * v[i];
    }
    if (!ok) {
      throw std::runtime_error("lecture hall candidate " + point_str(v) +
                               " violates the defining inequalities");
    }
  }
  Polytope P = build_polytope(candidates);
  if (P.vertices.size() != n + 1 || P.dim != static_cast<long>(n)) {
    throw std::runtime_error("lecture hall candidate list is not the vertex set");
  }
  std::vector<Facet> found;
  for (std::size_t j = 0; j < P.vertices.size(); ++j) {
    found.push_back(simplex_facet(P, j));
  }
  std::vector<Facet> expected;
  {
    IntVector e1(d, Integer(0));
    e1[0] = 1;
    expected.push_back(Facet{e1, Rational(0)});
    for (std::size_t i = 1; i < d; ++i) {
      IntVector a(d, Integer(0));
      a[i] = Integer(i);
      a[i - 1] = -Integer(i + 1);
      expected.push_back(Facet{a, Rational(0)});
    }
    IntVector last(d, Integer(0));
    last[d - 1] = -1;
    expected.push_back(Facet{last, Rational(-1)});
  }
  std::sort(found.begin(), found.end());
  std::sort(expected.begin(), expected.end());
  if (found != expected) {
    throw std::runtime_error("lecture hall facet system does not match");
  }
  return P;
}

LectureHallTable lecture_hall_recursion_table(unsigned long n, long t_max) {
  if (n == 0 || t_max < 0) {
    throw std::invalid_argument("recursion table requires n >= 1 and t_max >= 0");
  }
  std::vector<Polytope> simplices;
  std::vector<IntegralForm> forms;
  for (unsigned long m = 1; m <= n; ++m) {
    simplices.push_back(lecture_hall_simplex(m));
    forms.push_back(IntegralForm{IntVector(m, Integer(1))});
  }
  auto oracle_value = [&](unsigned long m, long t) {
    return oracle_count(simplices[m - 1], forms[m - 1], t).sum;
  };
  std::vector<std::vector<LaurentPoly>> table(n + 1);
  for (long t = 0; t <= t_max; ++t) {
    LaurentPoly direct = oracle_value(1, t);
    // One part of size at most t: E_1(q, t) = 1 + q + ... + q^t.
    LaurentPoly expected;
    for (long s = 0; s <= t; ++s) expected.add_term(s, Rational(1));
    if (direct != expected) {
      throw std::runtime_error("lecture hall recursion mismatch at n = 1, t = " +
                               std::to_string(t));
    }
    table[1].push_back(direct);
  }
  for (unsigned long m = 2; m <= n; ++m) {
    table[m].push_back(LaurentPoly::one());
    if (oracle_value(m, 0) != LaurentPoly::one()) {
      throw std::runtime_error("lecture hall recursion mismatch at n = " +
                               std::to_string(m) + ", t = 0");
    }
    for (long t = 1; t <= t_max; ++t) {
      long j = (t - 1) / static_cast<long>(m);
      long i = t - j * static_cast<long>(m);
      long lower = j * static_cast<long>(m - 1) + i - 1;
      LaurentPoly value =
          table[m][t - 1] + LaurentPoly::monomial(t, Rational(1)) * table[m - 1][lower];
      if (value != oracle_value(m, t)) {
        throw std::runtime_error("lecture hall recursion mismatch at n = " +
                                 std::to_string(m) + ", t = " + std::to_string(t));
      }
      table[m].push_back(std::move(value));
    }
  }
  return LectureHallTable{n, std::move(table[n])};
}

namespace {

// Solves C(q, [k]_q) = R-data for a polynomial C of degree m in x with
// C(q, 0) = 1, given the polynomial R(x) with
// C(1 + qx) - C(x) = R(x): writing C = sum a_j x^j, the coefficient of x^j in
// C(1+qx) - C(x) is q^j sum_{k>j} binom(k, j) a_k + (q^j - 1) a_j, solved
// descending from j = m.
XPoly solve_q_difference(const XPoly& R) {
  const long m = R.degree();
  if (m < 1) throw std::logic_error("difference data must have positive degree");
  std::vector<QRatFn> a(static_cast<std::size_t>(m) + 1);
  for (long j = m; j >= 1; --j) {
    QRatFn acc = R.coeff(static_cast<std::size_t>(j));
    QRatFn correction;
    for (long k = j + 1; k <= m; ++k) {
      correction += QRatFn(Rational(binomial(Integer(k), static_cast<unsigned long>(j)))) *
                    a[static_cast<std::size_t>(k)];
    }
    acc -= QRatFn(LaurentPoly::monomial(j, Rational(1))) * correction;
    QRatFn divisor = QRatFn(LaurentPoly::monomial(j, Rational(1))) - QRatFn(1);
    a[static_cast<std::size_t>(j)] = acc / divisor;
  }
  a[0] = QRatFn(1);
  QRatFn tail;
  for (long k = 1; k <= m; ++k) tail += a[static_cast<std::size_t>(k)];
  if (tail != R.coeff(0)) {
    throw std::logic_error("difference equation is inconsistent at x^0");
  }
  return XPoly(std::move(a));
}

}  // namespace

LectureHallFamily lecture_hall_family(unsigned long n) {
  LectureHallFamily fam{0, {XPoly(1)}};
  for (unsigned long m = 1; m <= n; ++m) {
    XPoly sum;
    for (unsigned long j = 0; j < m; ++j) {
      sum += fam.members[j] * QRatFn(LaurentPoly::monomial(static_cast<long>(j) + 1,
                                                           Rational(1)));
    }
    XPoly R = dilation_kernel().pow(m) * sum;
    std::vector<XPoly> members{solve_q_difference(R)};
    for (unsigned long i = 1; i <= m; ++i) {
      members.push_back(members[i - 1] +
                        dilation_kernel().pow(m) * fam.members[i - 1] *
                            QRatFn(LaurentPoly::monomial(static_cast<long>(i),
                                                         Rational(1))));
    }
    fam = LectureHallFamily{m, std::move(members)};
  }
  return fam;
}

bool q_difference_check(const LectureHallFamily& fam, const LectureHallFamily& prev) {
  if (fam.n != prev.n + 1) {
    throw std::invalid_argument("families must be consecutive");
  }
  XPoly shifted_x = XPoly::x() * QRatFn::q() + XPoly(1);
  XPoly lhs = fam.members[0].compose(shifted_x) - fam.members[0];
  XPoly sum;
  for (unsigned long j = 0; j < fam.n; ++j) {
    sum += prev.members[j] * QRatFn(LaurentPoly::monomial(static_cast<long>(j) + 1,
                                                          Rational(1)));
  }
  return lhs == dilation_kernel().pow(fam.n) * sum;
}

QRatFn lecture_hall_limit(const LectureHallFamily& fam) {
  LaurentPoly one_minus_q = LaurentPoly::one();
  one_minus_q.add_term(1, Rational(-1));
  return fam.members[0].eval(QRatFn(LaurentPoly::one(), one_minus_q));
}

}  // namespace qehrhart
