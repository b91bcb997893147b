#include "qehrhart/chapoton.hpp"

#include <algorithm>
#include <stdexcept>

namespace qehrhart {

QRatFn ChapotonPolynomial::leading_coefficient() const {
  if (poly.is_zero()) return QRatFn();
  return poly.coeff(static_cast<std::size_t>(poly.degree()));
}

XPoly dilation_kernel() {
  LaurentPoly qm1 = LaurentPoly::q();
  qm1.add_term(0, Rational(-1));
  return XPoly::x() * QRatFn(qm1) + XPoly(1);
}

namespace {

ChapotonPolynomial assemble(const Polytope& P, const IntegralForm& lam, const Integer& r) {
  require_generic_positive(P, lam);
  ChapotonPolynomial C;
  C.lambda = lam;
  C.dim = P.dim;
  C.period = P.denominator;
  C.residue = r;

  XPoly kernel = dilation_kernel();
  for (std::size_t v = 0; v < P.vertices.size(); ++v) {
    VertexContribution vc;
    vc.vertex = v;
    Rational w = lambda_of(lam, P.vertices[v]) * Rational(P.denominator);
    if (w.get_den() != 1) throw std::logic_error("lambda(p*v) is not integral");
    vc.weight = w.get_num();
    vc.zeta = rho(P, v, lam, r);
    C.poly += kernel.pow(static_cast<unsigned long>(to_long(vc.weight))) * vc.zeta;
    C.vertex_data.push_back(std::move(vc));
  }
  return C;
}

}  // namespace

ChapotonPolynomial chapoton_polynomial(const Polytope& P, const IntegralForm& lam) {
  if (P.denominator != 1)
    throw std::invalid_argument(
        "polytope has denominator > 1; use constituents() for rational polytopes");
  return assemble(P, lam, 0);
}

std::vector<ChapotonPolynomial> constituents(const Polytope& P, const IntegralForm& lam) {
  std::vector<ChapotonPolynomial> out;
  long p = to_long(P.denominator);
  out.reserve(static_cast<std::size_t>(p));
  for (long r = 0; r < p; ++r) out.push_back(assemble(P, lam, r));
  return out;
}

QRatFn evaluate(const ChapotonPolynomial& C, long k) { return C.poly.eval(q_bracket(k)); }

QRatFn evaluate_limit(const ChapotonPolynomial& C) {
  LaurentPoly one_minus_q = LaurentPoly::one();
  one_minus_q.add_term(1, Rational(-1));
  return C.poly.eval(QRatFn(LaurentPoly::one(), one_minus_q));
}

ChapotonPolynomial reciprocal(const ChapotonPolynomial& C) {
  ChapotonPolynomial R = C;
  std::vector<QRatFn> coeffs;
  bool odd_dim = (C.dim % 2) != 0;
  QRatFn minus_q = -QRatFn::q();
  QRatFn power(1);
  for (std::size_t k = 0; k <= static_cast<std::size_t>(std::max<long>(C.poly.degree(), 0)); ++k) {
    QRatFn c = C.poly.coeff(k).substitute_q_inverse() * power;
    coeffs.push_back(odd_dim ? -c : c);
    power *= minus_q;
  }
  R.poly = XPoly(std::move(coeffs));
  R.vertex_data.clear();
  return R;
}

}  // namespace qehrhart
