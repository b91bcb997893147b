#include "qehrhart/numbers.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qehrhart {

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Integer n(text, 10);
      return Rational(n);
    }
    Integer num(text.substr(0, slash), 10);
    Integer den(text.substr(slash + 1), 10);
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: \"" + text + "\"");
  }
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& n) { return n.get_str(); }

Integer floor_int(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Integer ceil_int(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer g;
  mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer binomial(const Integer& n, unsigned long k) {
  if (sgn(n) < 0) throw std::domain_error("binomial with negative top index");
  Integer b;
  mpz_bin_ui(b.get_mpz_t(), n.get_mpz_t(), k);
  return b;
}

Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (sgn(base) == 0 && exp < 0) throw std::domain_error("0 raised to a negative power");
  unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  return exp < 0 ? make_rational(den, num) : make_rational(num, den);
}

long to_long(const Integer& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("integer out of machine range");
  return n.get_si();
}

RatVector to_rat_vector(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

Integer enumeration_box_limit() {
  static const Integer limit = [] {
    if (const char* env = std::getenv("QEHRHART_MAX_BOX")) {
      try {
        Integer v(env, 10);
        if (sgn(v) > 0) return v;
      } catch (const std::invalid_argument&) {
      }
      throw std::invalid_argument("QEHRHART_MAX_BOX must be a positive integer");
    }
    return Integer(10000000);
  }();
  return limit;
}

}  // namespace qehrhart
