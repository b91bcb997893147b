#pragma once

#include <map>
#include <string>

#include "qehrhart/numbers.hpp"

namespace qehrhart {

// Laurent polynomial in q with rational coefficients. Zero coefficients are
// never stored, so the zero polynomial is the empty support and structural
// equality is mathematical equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& constant);
  explicit LaurentPoly(long constant);
  static LaurentPoly monomial(long exp, const Rational& coeff);
  static LaurentPoly one() { return LaurentPoly(1); }
  static LaurentPoly q() { return monomial(1, Rational(1)); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_polynomial() const;  // no negative exponents
  long min_exp() const;        // requires nonzero
  long max_exp() const;        // requires nonzero
  Rational coeff(long exp) const;
  Rational leading_coeff() const;  // coefficient of max_exp
  std::size_t term_count() const { return c_.size(); }
  const std::map<long, Rational>& terms() const { return c_; }

  void add_term(long exp, const Rational& value);

  LaurentPoly shifted(long dexp) const;      // multiply by q^dexp
  LaurentPoly substitute_q_inverse() const;  // q -> 1/q
  Rational eval(const Rational& x) const;    // x != 0 when negative exponents occur

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator*(const Rational& c) const;
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

  LaurentPoly pow(unsigned long k) const;

  std::string str() const;  // expanded form, exponents descending
  std::string latex() const;

 private:
  std::map<long, Rational> c_;
};

// Division with remainder for genuine polynomials (no negative exponents).
struct PolyDivMod {
  LaurentPoly quot, rem;
};
PolyDivMod poly_divmod(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b);

// Monic Euclid on genuine polynomials; result normalized to integer
// coefficients with content 1 and positive leading coefficient.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Scale to integer coefficients with content 1 and positive leading
// coefficient; the applied factor s (result = s * p) is reported so callers
// can rescale a paired numerator.
LaurentPoly make_integer_primitive(const LaurentPoly& p, Rational* factor_out = nullptr);

// nth cyclotomic polynomial, computed by exact division of q^n - 1.
LaurentPoly cyclotomic(long n);

}  // namespace qehrhart
