#include "qehrhart/oracle.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "qehrhart/conezeta.hpp"
#include "qehrhart/lp.hpp"

namespace qehrhart {

namespace {

bool closed_member(const std::vector<RatVector>& verts, const IntVector& m) {
  std::size_t d = m.size();
  LinearSystem sys(verts.size());
  sys.mark_all_nonneg();
  LinearConstraint total;
  total.coeffs.assign(verts.size(), Rational(1));
  total.rel = Rel::Eq;
  total.rhs = Rational(1);
  sys.add(total);
  for (std::size_t j = 0; j < d; ++j) {
    LinearConstraint row;
    for (const auto& v : verts) row.coeffs.push_back(v[j]);
    row.rel = Rel::Eq;
    row.rhs = Rational(m[j]);
    sys.add(row);
  }
  return lp_feasible(sys);
}

// m lies in the relative interior iff it is a convex combination of all
// vertices with strictly positive weights; scaling reduces that to weights
// >= 1, i.e. a feasibility problem in the slack variables.
bool interior_member(const std::vector<RatVector>& verts, const IntVector& m) {
  std::size_t d = m.size();
  LinearSystem sys(verts.size());
  sys.mark_all_nonneg();
  for (std::size_t j = 0; j < d; ++j) {
    LinearConstraint row;
    Rational rhs = 0;
    for (const auto& v : verts) {
      Rational diff = v[j] - Rational(m[j]);
      row.coeffs.push_back(diff);
      rhs -= diff;
    }
    row.rel = Rel::Eq;
    row.rhs = rhs;
    sys.add(row);
  }
  return lp_feasible(sys);
}

}  // namespace

WeightedCount oracle_count(const Polytope& P, const IntegralForm& lam, long t, bool interior) {
  if (t < 0) throw std::invalid_argument("oracle dilation must be nonnegative");
  std::size_t d = P.ambient_dim();
  std::vector<RatVector> scaled;
  scaled.reserve(P.vertices.size());
  for (const auto& v : P.vertices) scaled.push_back(scale(Rational(t), v));

  IntVector lo(d), hi(d);
  Integer volume = 1;
  for (std::size_t j = 0; j < d; ++j) {
    Rational a = scaled[0][j], b = scaled[0][j];
    for (const auto& v : scaled) {
      if (v[j] < a) a = v[j];
      if (v[j] > b) b = v[j];
    }
    lo[j] = ceil_int(a);
    hi[j] = floor_int(b);
    volume *= hi[j] < lo[j] ? Integer(0) : hi[j] - lo[j] + 1;
  }
  if (volume > enumeration_box_limit())
    throw std::runtime_error("oracle enumeration box exceeds QEHRHART_MAX_BOX");

  WeightedCount out;
  out.t = t;
  if (sgn(volume) == 0) return out;

  IntVector m = lo;
  while (true) {
    bool member = interior ? interior_member(scaled, m) : closed_member(scaled, m);
    if (member) {
      out.sum.add_term(to_long(lambda_of(lam, m)), Rational(1));
      out.point_count += 1;
    }
    std::size_t j = 0;
    while (j < d && m[j] == hi[j]) {
      m[j] = lo[j];
      ++j;
    }
    if (j == d) break;
    m[j] += 1;
  }
  return out;
}

bool VerifyReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string VerifyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
  return "";
}

namespace {

void fail(CheckResult& check, const std::string& detail) {
  if (!check.passed) return;
  check.passed = false;
  check.detail = detail;
}

std::string residue_tag(const ChapotonPolynomial& C) {
  return "constituent r = " + to_string(C.residue);
}

}  // namespace

VerifyReport verify_battery(const Polytope& P, const IntegralForm& lam,
                            const std::vector<ChapotonPolynomial>& consts, long t_max) {
  VerifyReport rep;
  long p = to_long(P.denominator);

  CheckResult degree_check{"degree equals max lambda(p*vertex)", true, ""};
  CheckResult argmax_check{"unique maximizing vertex", true, ""};
  CheckResult leading_check{"leading coefficient factorization", true, ""};
  CheckResult constant_check{"constant term is 1", true, ""};
  CheckResult pole_check{"denominator poles are cyclotomic", true, ""};
  CheckResult limit_check{"limit evaluation matches zero-value vertex cone", true, ""};
  CheckResult closed_check{"closed dilation counts match enumeration", true, ""};
  CheckResult interior_check{"interior reciprocity matches enumeration", true, ""};
  CheckResult double_check{"double reciprocity is identity", true, ""};
  CheckResult q1_check{"q=1 specialization counts points", true, ""};

  Integer max_weight = 0;
  std::size_t argmax_count = 0;
  std::size_t argmax_vertex = 0;
  std::size_t zero_count = 0;
  std::size_t zero_vertex = 0;
  for (std::size_t v = 0; v < P.vertices.size(); ++v) {
    Rational wr = lambda_of(lam, P.vertices[v]) * Rational(P.denominator);
    Integer w = wr.get_num();
    if (v == 0 || w > max_weight) {
      max_weight = w;
      argmax_count = 1;
      argmax_vertex = v;
    } else if (w == max_weight) {
      ++argmax_count;
    }
    if (sgn(w) == 0) {
      ++zero_count;
      zero_vertex = v;
    }
  }
  if (argmax_count != 1)
    fail(argmax_check, std::to_string(argmax_count) + " vertices attain the maximum");

  long pole_bound = 2;
  for (std::size_t v = 0; v < P.vertices.size(); ++v) {
    VertexCone K = vertex_cone(P, v, lam);
    for (const auto& a : K.edge_labels) pole_bound = std::max(pole_bound, to_long(abs(a)));
  }

  for (const auto& C : consts) {
    if (C.degree() != to_long(max_weight))
      fail(degree_check, residue_tag(C) + " has degree " + std::to_string(C.degree()) +
                             ", expected " + to_string(max_weight));

    QRatFn expected_leading =
        (QRatFn::q() - QRatFn(1)).pow(to_long(max_weight)) *
        rho(P, argmax_vertex, lam, C.residue);
    if (argmax_count == 1 && C.leading_coefficient() != expected_leading)
      fail(leading_check, residue_tag(C) + " leading coefficient mismatch");

    if (C.residue == 0 && !C.constant_term().is_one())
      fail(constant_check, residue_tag(C) + " constant term " + C.constant_term().str());

    for (long k = 0; k <= C.degree(); ++k) {
      PoleReport poles = pole_orders(C.poly.coeff(static_cast<std::size_t>(k)), pole_bound);
      if (!poles.remainder_constant())
        fail(pole_check, residue_tag(C) + " coefficient of x^" + std::to_string(k) +
                             " has non-cyclotomic denominator part " + poles.remainder.str());
    }

    QRatFn expected_limit =
        zero_count == 1 ? rho(P, zero_vertex, lam, C.residue) : QRatFn();
    if (zero_count <= 1 && evaluate_limit(C) != expected_limit)
      fail(limit_check, residue_tag(C) + " limit " + evaluate_limit(C).str() +
                            ", expected " + expected_limit.str());

    ChapotonPolynomial R = reciprocal(C);
    if (reciprocal(R).poly != C.poly) fail(double_check, residue_tag(C));

    long r = to_long(C.residue);
    for (long k = 0; k * p + r <= t_max; ++k) {
      long t = k * p + r;
      WeightedCount truth = oracle_count(P, lam, t, false);
      QRatFn value = evaluate(C, k);
      if (value != QRatFn(truth.sum)) {
        fail(closed_check, residue_tag(C) + " disagrees with enumeration at t = " +
                               std::to_string(t));
        continue;
      }
      if (evaluate_at_q1(value) != Rational(truth.point_count))
        fail(q1_check,
             residue_tag(C) + " q=1 value differs from point count at t = " + std::to_string(t));
    }

    for (long k = 1; k * p - r <= t_max; ++k) {
      long t = k * p - r;
      if (t < 1) continue;
      WeightedCount truth = oracle_count(P, lam, t, true);
      QRatFn value = evaluate(R, k);
      if (value != QRatFn(truth.sum)) {
        fail(interior_check, residue_tag(C) + " interior value disagrees at t = " +
                                 std::to_string(t));
        continue;
      }
      if (evaluate_at_q1(value) != Rational(truth.point_count))
        fail(q1_check, residue_tag(C) + " q=1 interior value differs from point count at t = " +
                           std::to_string(t));
    }
  }

  rep.checks = {degree_check, argmax_check, leading_check, constant_check, pole_check,
                limit_check,  closed_check, interior_check, double_check,  q1_check};
  return rep;
}

VerifyReport verify_polytope(const Polytope& P, const IntegralForm& lam, long t_max) {
  return verify_battery(P, lam, constituents(P, lam), t_max);
}

}  // namespace qehrhart
