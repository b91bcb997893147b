#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qehrhart/qratfn.hpp"

namespace qehrhart {

// Polynomial in x with QRatFn coefficients.
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(const QRatFn& c) : c_{c} { trim(); }
  explicit XPoly(long c) : XPoly(QRatFn(c)) {}
  explicit XPoly(std::vector<QRatFn> coeffs) : c_(std::move(coeffs)) { trim(); }

  static XPoly x();

  bool is_zero() const { return c_.empty(); }
  // Degree in x; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  QRatFn coeff(std::size_t k) const { return k < c_.size() ? c_[k] : QRatFn(); }
  const std::vector<QRatFn>& coefficients() const { return c_; }

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  XPoly& operator*=(const XPoly& o) { return *this = *this * o; }

  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  XPoly operator*(const QRatFn& s) const;
  friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

  XPoly pow(unsigned long k) const;

  // Substitutes another polynomial for x.
  XPoly compose(const XPoly& inner) const;
  QRatFn eval(const QRatFn& x) const;

  // Applies q -> 1/q to every coefficient.
  XPoly substitute_q_inverse() const;

  std::string str() const;
  std::string latex() const;

 private:
  void trim();
  std::vector<QRatFn> c_;
};

}  // namespace qehrhart
