#include "qehrhart/qratfn.hpp"

#include <sstream>
#include <stdexcept>

namespace qehrhart {

QRatFn::QRatFn(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  long vn = num.min_exp(), vd = den.min_exp();
  LaurentPoly n0 = num.shifted(-vn);
  LaurentPoly d0 = den.shifted(-vd);
  LaurentPoly g = poly_gcd(n0, d0);
  if (!g.is_one()) {
    n0 = poly_div_exact(n0, g);
    d0 = poly_div_exact(d0, g);
  }
  Rational s;
  den_ = make_integer_primitive(d0, &s);
  num_ = (n0 * s).shifted(vn - vd);
}

LaurentPoly QRatFn::as_laurent() const {
  if (!den_.is_one()) throw std::domain_error("value is not a Laurent polynomial");
  return num_;
}

QRatFn QRatFn::substitute_q_inverse() const {
  return QRatFn(num_.substitute_q_inverse(), den_.substitute_q_inverse());
}

Rational QRatFn::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (sgn(d) == 0) throw std::domain_error("evaluation at a pole");
  if (sgn(x) == 0 && !num_.is_zero() && num_.min_exp() < 0)
    throw std::domain_error("evaluation at a pole");
  return num_.eval(x) / d;
}

QRatFn QRatFn::operator-() const {
  QRatFn r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

QRatFn operator+(const QRatFn& a, const QRatFn& b) {
  return QRatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRatFn operator-(const QRatFn& a, const QRatFn& b) {
  return QRatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QRatFn operator*(const QRatFn& a, const QRatFn& b) {
  return QRatFn(a.num_ * b.num_, a.den_ * b.den_);
}

QRatFn operator/(const QRatFn& a, const QRatFn& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return QRatFn(a.num_ * b.den_, a.den_ * b.num_);
}

QRatFn QRatFn::pow(long k) const {
  if (k < 0) return (QRatFn(1) / *this).pow(-k);
  QRatFn r(1), base = *this;
  unsigned long e = static_cast<unsigned long>(k);
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

std::string QRatFn::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.str();
  if (num_.term_count() > 1) n = "(" + n + ")";
  return n + "/(" + den_.str() + ")";
}

std::string QRatFn::latex() const {
  if (den_.is_one()) return num_.latex();
  return "\\frac{" + num_.latex() + "}{" + den_.latex() + "}";
}

QRatFn q_bracket(long t) {
  LaurentPoly num = LaurentPoly::monomial(t, Rational(1));
  num.add_term(0, Rational(-1));
  LaurentPoly den = LaurentPoly::q();
  den.add_term(0, Rational(-1));
  return QRatFn(num, den);
}

LaurentPoly q_binomial(unsigned long n, unsigned long k) {
  if (k > n) return LaurentPoly();
  std::vector<LaurentPoly> row{LaurentPoly::one()};
  for (unsigned long m = 1; m <= n; ++m) {
    std::vector<LaurentPoly> next(m + 1);
    next[0] = LaurentPoly::one();
    next[m] = LaurentPoly::one();
    for (unsigned long j = 1; j < m; ++j)
      next[j] = row[j - 1] + LaurentPoly::q().pow(j) * row[j];
    row = std::move(next);
  }
  return row[k];
}

LaurentPoly q_factorial(unsigned long n) {
  LaurentPoly r = LaurentPoly::one();
  for (unsigned long j = 1; j <= n; ++j) {
    LaurentPoly bracket;
    for (unsigned long e = 0; e < j; ++e) bracket.add_term(static_cast<long>(e), Rational(1));
    r *= bracket;
  }
  return r;
}

PoleReport pole_orders(const QRatFn& f, long max_order) {
  PoleReport rep;
  LaurentPoly d = f.den();
  std::vector<LaurentPoly> phi;
  for (long n = 1; n <= max_order && !d.is_constant(); ++n) {
    LaurentPoly p = LaurentPoly::monomial(n, Rational(1));
    p.add_term(0, Rational(-1));
    for (long k = 1; k < n; ++k)
      if (n % k == 0) p = poly_div_exact(p, phi[static_cast<std::size_t>(k - 1)]);
    phi.push_back(p);
    long mult = 0;
    while (true) {
      PolyDivMod dm = poly_divmod(d, p);
      if (!dm.rem.is_zero()) break;
      d = dm.quot;
      ++mult;
    }
    if (mult > 0) rep.orders.push_back({n, mult});
  }
  rep.remainder = d;
  return rep;
}

Rational evaluate_at_q1(const QRatFn& f) {
  if (f.is_zero()) return Rational(0);
  LaurentPoly qm1 = LaurentPoly::q();
  qm1.add_term(0, Rational(-1));
  LaurentPoly n = f.num().shifted(-f.num().min_exp());
  LaurentPoly d = f.den();
  long a = 0, b = 0;
  while (sgn(n.eval(Rational(1))) == 0) {
    n = poly_div_exact(n, qm1);
    ++a;
  }
  while (sgn(d.eval(Rational(1))) == 0) {
    d = poly_div_exact(d, qm1);
    ++b;
  }
  if (a < b) throw std::domain_error("pole at q = 1");
  if (a > b) return Rational(0);
  return n.eval(Rational(1)) / d.eval(Rational(1));
}

}  // namespace qehrhart
