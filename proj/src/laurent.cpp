#include "qehrhart/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qehrhart {

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (sgn(constant) != 0) c_[0] = constant;
}

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}

LaurentPoly LaurentPoly::monomial(long exp, const Rational& coeff) {
  LaurentPoly p;
  if (sgn(coeff) != 0) p.c_[exp] = coeff;
  return p;
}

bool LaurentPoly::is_one() const {
  return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
  return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

bool LaurentPoly::is_polynomial() const { return c_.empty() || c_.begin()->first >= 0; }

long LaurentPoly::min_exp() const {
  if (c_.empty()) throw std::domain_error("exponent range of zero polynomial");
  return c_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (c_.empty()) throw std::domain_error("exponent range of zero polynomial");
  return c_.rbegin()->first;
}

Rational LaurentPoly::coeff(long exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::leading_coeff() const { return c_.rbegin()->second; }

void LaurentPoly::add_term(long exp, const Rational& value) {
  if (sgn(value) == 0) return;
  auto it = c_.find(exp);
  if (it == c_.end()) {
    c_[exp] = value;
    return;
  }
  it->second += value;
  if (sgn(it->second) == 0) c_.erase(it);
}

LaurentPoly LaurentPoly::shifted(long dexp) const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[e + dexp] = v;
  return r;
}

LaurentPoly LaurentPoly::substitute_q_inverse() const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[-e] = v;
  return r;
}

Rational LaurentPoly::eval(const Rational& x) const {
  Rational s(0);
  for (const auto& [e, v] : c_) s += v * pow_rational(x, e);
  return s;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[e] = -v;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, v] : o.c_) add_term(e, v);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, v] : o.c_) add_term(e, -v);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, va] : a.c_)
    for (const auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
  LaurentPoly r;
  if (sgn(c) == 0) return r;
  for (const auto& [e, v] : c_) r.c_[e] = v * c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned long k) const {
  LaurentPoly r = one(), base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

namespace {

std::string coeff_prefix(const Rational& a, bool with_star) {
  // |a| as a factor; 1 disappears, non-integers get parenthesized.
  Rational v = abs(a);
  if (v == 1 && with_star) return "";
  std::string s = to_string(v);
  if (v.get_den() != 1) s = "(" + s + ")";
  return with_star ? s + "*" : s;
}

}  // namespace

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [e, v] = *it;
    if (first) {
      if (sgn(v) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(v) < 0 ? " - " : " + ");
    }
    if (e == 0)
      out << coeff_prefix(v, false);
    else
      out << coeff_prefix(v, true) << (e == 1 ? "q" : "q^" + std::to_string(e));
  }
  return out.str();
}

std::string LaurentPoly::latex() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [e, v] = *it;
    if (first) {
      if (sgn(v) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(v) < 0 ? " - " : " + ");
    }
    Rational a = abs(v);
    std::string cs;
    if (a.get_den() != 1)
      cs = "\\tfrac{" + to_string(a.get_num()) + "}{" + to_string(a.get_den()) + "}";
    else if (a != 1 || e == 0)
      cs = to_string(a);
    out << cs;
    if (e == 1)
      out << "q";
    else if (e != 0)
      out << "q^{" << e << "}";
  }
  return out.str();
}

PolyDivMod poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (!a.is_polynomial() || !b.is_polynomial())
    throw std::domain_error("division requires genuine polynomials");
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  PolyDivMod r;
  r.rem = a;
  long db = b.max_exp();
  Rational lb = b.leading_coeff();
  while (!r.rem.is_zero() && r.rem.max_exp() >= db) {
    long e = r.rem.max_exp() - db;
    Rational f = r.rem.leading_coeff() / lb;
    r.quot.add_term(e, f);
    r.rem -= b.shifted(e) * f;
  }
  return r;
}

LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  PolyDivMod d = poly_divmod(a, b);
  if (!d.rem.is_zero()) throw std::domain_error("polynomial division with remainder");
  return d.quot;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a, y = b;
  while (!y.is_zero()) {
    LaurentPoly r = poly_divmod(x, y).rem;
    if (!r.is_zero()) r = r * (Rational(1) / r.leading_coeff());
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return make_integer_primitive(x);
}

LaurentPoly make_integer_primitive(const LaurentPoly& p, Rational* factor_out) {
  if (p.is_zero()) throw std::domain_error("no primitive form of the zero polynomial");
  Integer den_lcm(1), num_gcd(0);
  for (const auto& [e, v] : p.terms()) den_lcm = lcm(den_lcm, v.get_den());
  for (const auto& [e, v] : p.terms()) {
    Rational scaled = v * Rational(den_lcm);
    num_gcd = gcd(num_gcd, scaled.get_num());
  }
  Rational s = make_rational(den_lcm, num_gcd);
  if (sgn(p.leading_coeff()) < 0) s = -s;
  if (factor_out) *factor_out = s;
  return p * s;
}

LaurentPoly cyclotomic(long n) {
  if (n < 1) throw std::domain_error("cyclotomic index must be positive");
  std::vector<LaurentPoly> phi(static_cast<std::size_t>(n) + 1);
  for (long k = 1; k <= n; ++k) {
    LaurentPoly p = LaurentPoly::monomial(k, Rational(1));
    p.add_term(0, Rational(-1));  // q^k - 1
    for (long d = 1; d < k; ++d)
      if (k % d == 0) p = poly_div_exact(p, phi[d]);
    phi[k] = p;
  }
  return phi[n];
}

}  // namespace qehrhart
