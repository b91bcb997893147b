#include "qehrhart/xpoly.hpp"

#include <sstream>

namespace qehrhart {

void XPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPoly XPoly::x() {
  XPoly p;
  p.c_ = {QRatFn(0), QRatFn(1)};
  return p;
}

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  XPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, QRatFn());
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

XPoly XPoly::operator*(const QRatFn& s) const {
  XPoly r = *this;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

XPoly XPoly::pow(unsigned long k) const {
  XPoly r(1), base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

XPoly XPoly::compose(const XPoly& inner) const {
  XPoly r;
  for (std::size_t k = c_.size(); k-- > 0;) r = r * inner + XPoly(c_[k]);
  return r;
}

QRatFn XPoly::eval(const QRatFn& x) const {
  QRatFn r;
  for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
  return r;
}

XPoly XPoly::substitute_q_inverse() const {
  XPoly r = *this;
  for (auto& c : r.c_) c = c.substitute_q_inverse();
  r.trim();
  return r;
}

namespace {

std::string term_str(const QRatFn& c, std::size_t k, bool latex_mode) {
  std::string xpart;
  if (k == 1)
    xpart = "x";
  else if (k >= 2)
    xpart = latex_mode ? "x^{" + std::to_string(k) + "}" : "x^" + std::to_string(k);
  std::string cs = latex_mode ? c.latex() : c.str();
  if (k == 0) return cs;
  if (c.is_one()) return xpart;
  if (c == QRatFn(-1)) return "-" + xpart;
  return latex_mode ? cs + " " + xpart : cs + "*" + xpart;
}

std::string render(const std::vector<QRatFn>& coeffs, bool latex_mode) {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k].is_zero()) continue;
    std::string piece = term_str(coeffs[k], k, latex_mode);
    if (first) {
      out << piece;
      first = false;
    } else if (!piece.empty() && piece[0] == '-') {
      out << " - " << piece.substr(1);
    } else {
      out << " + " << piece;
    }
  }
  if (first) return "0";
  return out.str();
}

}  // namespace

std::string XPoly::str() const { return render(c_, false); }

std::string XPoly::latex() const { return render(c_, true); }

}  // namespace qehrhart
