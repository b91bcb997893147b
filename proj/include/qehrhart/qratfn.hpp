#pragma once

#include <string>
#include <vector>

#include "qehrhart/laurent.hpp"
#include "qehrhart/numbers.hpp"

namespace qehrhart {

// Element of Q(q), kept in a canonical form so that structural equality
// coincides with equality as functions: the denominator is an integer-primitive
// polynomial with positive leading coefficient and nonzero constant term, the
// numerator is a Laurent polynomial coprime to it.
class QRatFn {
 public:
  QRatFn() : num_(), den_(LaurentPoly::one()) {}
  QRatFn(const Rational& c) : num_(c), den_(LaurentPoly::one()) {}
  QRatFn(long c) : QRatFn(Rational(c)) {}
  explicit QRatFn(const LaurentPoly& num) : num_(num), den_(LaurentPoly::one()) {}
  QRatFn(const LaurentPoly& num, const LaurentPoly& den);

  static QRatFn q() { return QRatFn(LaurentPoly::q()); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  // The value as a Laurent polynomial; throws unless the denominator is 1.
  LaurentPoly as_laurent() const;

  QRatFn substitute_q_inverse() const;
  Rational eval(const Rational& x) const;

  QRatFn operator-() const;
  QRatFn& operator+=(const QRatFn& o) { return *this = *this + o; }
  QRatFn& operator-=(const QRatFn& o) { return *this = *this - o; }
  QRatFn& operator*=(const QRatFn& o) { return *this = *this * o; }
  QRatFn& operator/=(const QRatFn& o) { return *this = *this / o; }

  friend QRatFn operator+(const QRatFn& a, const QRatFn& b);
  friend QRatFn operator-(const QRatFn& a, const QRatFn& b);
  friend QRatFn operator*(const QRatFn& a, const QRatFn& b);
  friend QRatFn operator/(const QRatFn& a, const QRatFn& b);
  friend bool operator==(const QRatFn& a, const QRatFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QRatFn& a, const QRatFn& b) { return !(a == b); }

  QRatFn pow(long k) const;

  std::string str() const;
  std::string latex() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

// [t]_q = (q^t - 1)/(q - 1); a polynomial 1 + q + ... + q^{t-1} for t >= 0.
QRatFn q_bracket(long t);

// Gaussian binomial coefficient; zero when k > n.
LaurentPoly q_binomial(unsigned long n, unsigned long k);

// [n]_q! = prod_{j=1}^{n} (1 + q + ... + q^{j-1}).
LaurentPoly q_factorial(unsigned long n);

struct PoleOrder {
  long order;
  long multiplicity;
};

// Cyclotomic factorization of the denominator by trial division.  The
// remainder is the unfactored part; a constant remainder means every pole is a
// root of unity of one of the listed orders.
struct PoleReport {
  std::vector<PoleOrder> orders;
  LaurentPoly remainder;
  bool remainder_constant() const { return remainder.is_constant(); }
};

PoleReport pole_orders(const QRatFn& f, long max_order = 128);

// Limit of f at q = 1, cancelling matched powers of (q - 1).  Throws on a
// genuine pole.
Rational evaluate_at_q1(const QRatFn& f);

}  // namespace qehrhart
