#ifndef CFHANKEL_SERIES_HPP
#define CFHANKEL_SERIES_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace cfhankel {

// Formal power series in x, exact Scalar coefficients, truncated after x^order.
// Coefficients at negative indices read as 0; reading past the truncation
// order is an error rather than a silent 0.
class PowerSeries {
 public:
  PowerSeries(const Ring& ring, long long order)
      : ring_(ring), coeffs_(static_cast<std::size_t>(check_order(order)) + 1, Scalar::zero(ring)) {}

  PowerSeries(const Ring& ring, std::vector<Scalar> coeffs)
      : ring_(ring), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw ParamOutOfRangeError("series needs at least the constant term");
  }

  static PowerSeries one(const Ring& ring, long long order) {
    PowerSeries s(ring, order);
    s.coeffs_[0] = Scalar::one(ring);
    return s;
  }

  const Ring& ring() const { return ring_; }
  long long order() const { return static_cast<long long>(coeffs_.size()) - 1; }

  const Scalar& coeff(long long n) const {
    if (n < 0) return zero_;
    if (n >= static_cast<long long>(coeffs_.size()))
      throw InsufficientOrderError("series truncated at order " + std::to_string(order()) +
                                   ", coefficient " + std::to_string(n) + " requested");
    return coeffs_[static_cast<std::size_t>(n)];
  }

  void set_coeff(long long n, Scalar c) {
    if (n < 0 || n >= static_cast<long long>(coeffs_.size()))
      throw IndexOutOfRangeError("coefficient index out of range");
    coeffs_[static_cast<std::size_t>(n)] = std::move(c);
  }

  PowerSeries truncated(long long new_order) const {
    if (new_order > order()) throw InsufficientOrderError("cannot extend a truncated series");
    PowerSeries s(ring_, new_order);
    for (long long n = 0; n <= new_order; ++n) s.coeffs_[static_cast<std::size_t>(n)] = coeff(n);
    return s;
  }

  friend PowerSeries operator+(const PowerSeries& x, const PowerSeries& y) {
    long long ord = std::min(x.order(), y.order());
    PowerSeries r(combined_ring(x, y), ord);
    for (long long n = 0; n <= ord; ++n) r.coeffs_[static_cast<std::size_t>(n)] = x.coeff(n) + y.coeff(n);
    return r;
  }
  friend PowerSeries operator-(const PowerSeries& x, const PowerSeries& y) {
    long long ord = std::min(x.order(), y.order());
    PowerSeries r(combined_ring(x, y), ord);
    for (long long n = 0; n <= ord; ++n) r.coeffs_[static_cast<std::size_t>(n)] = x.coeff(n) - y.coeff(n);
    return r;
  }
  friend PowerSeries operator*(const PowerSeries& x, const PowerSeries& y) {
    long long ord = std::min(x.order(), y.order());
    PowerSeries r(combined_ring(x, y), ord);
    for (long long n = 0; n <= ord; ++n) {
      Scalar acc = Scalar::zero(r.ring_);
      for (long long i = 0; i <= n; ++i) {
        if (x.coeff(i).is_zero() || y.coeff(n - i).is_zero()) continue;
        acc += x.coeff(i) * y.coeff(n - i);
      }
      r.coeffs_[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return r;
  }
  friend PowerSeries operator*(const Scalar& c, const PowerSeries& x) {
    PowerSeries r(ring_union(c.ring(), x.ring_), x.order());
    for (long long n = 0; n <= x.order(); ++n) r.coeffs_[static_cast<std::size_t>(n)] = c * x.coeff(n);
    return r;
  }

  // Multiplication by x^k; coefficients pushed past the truncation order drop.
  PowerSeries shifted_up(long long k) const {
    if (k < 0) throw ParamOutOfRangeError("negative shift");
    PowerSeries r(ring_, order());
    for (long long n = k; n <= order(); ++n) r.coeffs_[static_cast<std::size_t>(n)] = coeff(n - k);
    return r;
  }

  // Division by x^k; requires the k low-order coefficients to vanish.
  PowerSeries shifted_down(long long k) const {
    if (k < 0) throw ParamOutOfRangeError("negative shift");
    for (long long n = 0; n < k && n <= order(); ++n)
      if (!coeff(n).is_zero())
        throw InexactDivisionError("series not divisible by the requested power of x");
    if (order() < k) throw InsufficientOrderError("series too short for the requested shift");
    PowerSeries r(ring_, order() - k);
    for (long long n = 0; n <= r.order(); ++n) r.coeffs_[static_cast<std::size_t>(n)] = coeff(n + k);
    return r;
  }

  friend bool operator==(const PowerSeries& x, const PowerSeries& y) {
    if (x.order() != y.order()) return false;
    for (long long n = 0; n <= x.order(); ++n)
      if (x.coeff(n) != y.coeff(n)) return false;
    return true;
  }
  friend bool operator!=(const PowerSeries& x, const PowerSeries& y) { return !(x == y); }

  bool equals_to_order(const PowerSeries& y, long long ord) const {
    for (long long n = 0; n <= ord; ++n)
      if (coeff(n) != y.coeff(n)) return false;
    return true;
  }

 private:
  static long long check_order(long long order) {
    if (order < 0) throw ParamOutOfRangeError("negative series order");
    return order;
  }
  static Ring combined_ring(const PowerSeries& x, const PowerSeries& y) {
    return ring_union(x.ring_, y.ring_);
  }

  Ring ring_;
  std::vector<Scalar> coeffs_;
  inline static const Scalar zero_{};
};

// t(x) = 1/s(x) for a series with constant term 1, to the same order.
inline PowerSeries series_reciprocal(const PowerSeries& s) {
  if (!s.coeff(0).is_one())
    throw NonUnitConstantTermError("series reciprocal needs constant term 1");
  PowerSeries t(s.ring(), s.order());
  t.set_coeff(0, Scalar::one(s.ring()));
  for (long long n = 1; n <= s.order(); ++n) {
    Scalar acc = Scalar::zero(s.ring());
    for (long long j = 1; j <= n; ++j) {
      if (s.coeff(j).is_zero() || t.coeff(n - j).is_zero()) continue;
      acc += s.coeff(j) * t.coeff(n - j);
    }
    t.set_coeff(n, -acc);
  }
  return t;
}

// Polynomial in x over Scalar, coefficients stored by ascending power with no
// trailing zeros.
class XPoly {
 public:
  explicit XPoly(const Ring& ring = Ring()) : ring_(ring) {}

  XPoly(const Ring& ring, std::vector<Scalar> ascending) : ring_(ring), coeffs_(std::move(ascending)) {
    normalize();
  }

  static XPoly zero(const Ring& ring) { return XPoly(ring); }
  static XPoly one(const Ring& ring) { return constant(Scalar::one(ring), ring); }
  static XPoly constant(const Scalar& c, const Ring& ring) {
    XPoly p(ring);
    if (!c.is_zero()) p.coeffs_.push_back(c);
    return p;
  }
  static XPoly monomial(const Ring& ring, const Scalar& c, long long e) {
    if (e < 0) throw ParamOutOfRangeError("negative power of x");
    XPoly p(ring);
    if (c.is_zero()) return p;
    p.coeffs_.assign(static_cast<std::size_t>(e) + 1, Scalar::zero(ring));
    p.coeffs_.back() = c;
    return p;
  }
  static XPoly x(const Ring& ring) { return monomial(ring, Scalar::one(ring), 1); }

  const Ring& ring() const { return ring_; }
  long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const Scalar& coeff(long long j) const {
    if (j < 0 || j >= static_cast<long long>(coeffs_.size())) return zero_;
    return coeffs_[static_cast<std::size_t>(j)];
  }

  friend XPoly operator+(const XPoly& x, const XPoly& y) {
    XPoly r(ring_union(x.ring_, y.ring_));
    long long d = std::max(x.degree(), y.degree());
    for (long long j = 0; j <= d; ++j) r.coeffs_.push_back(x.coeff(j) + y.coeff(j));
    r.normalize();
    return r;
  }
  friend XPoly operator-(const XPoly& x, const XPoly& y) {
    XPoly r(ring_union(x.ring_, y.ring_));
    long long d = std::max(x.degree(), y.degree());
    for (long long j = 0; j <= d; ++j) r.coeffs_.push_back(x.coeff(j) - y.coeff(j));
    r.normalize();
    return r;
  }
  XPoly operator-() const {
    XPoly r(ring_);
    for (const Scalar& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
  }
  friend XPoly operator*(const XPoly& x, const XPoly& y) {
    XPoly r(ring_union(x.ring_, y.ring_));
    if (x.is_zero() || y.is_zero()) return r;
    r.coeffs_.assign(static_cast<std::size_t>(x.degree() + y.degree()) + 1, Scalar::zero(r.ring_));
    for (long long i = 0; i <= x.degree(); ++i) {
      if (x.coeff(i).is_zero()) continue;
      for (long long j = 0; j <= y.degree(); ++j) {
        if (y.coeff(j).is_zero()) continue;
        r.coeffs_[static_cast<std::size_t>(i + j)] += x.coeff(i) * y.coeff(j);
      }
    }
    r.normalize();
    return r;
  }
  friend XPoly operator*(const Scalar& c, const XPoly& p) {
    XPoly r(ring_union(c.ring(), p.ring_));
    if (c.is_zero()) return r;
    for (const Scalar& pc : p.coeffs_) r.coeffs_.push_back(c * pc);
    r.normalize();
    return r;
  }

  XPoly shifted_up(long long k) const {
    if (k < 0) throw ParamOutOfRangeError("negative shift");
    if (is_zero()) return *this;
    XPoly r(ring_);
    r.coeffs_.assign(static_cast<std::size_t>(k), Scalar::zero(ring_));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
  }

  // x^s * p(1/x): coefficient of x^{s-j} is coeff(j).  Needs s >= degree.
  XPoly reversed(long long s) const {
    if (s < degree()) throw ParamOutOfRangeError("reversal shift below the degree");
    XPoly r(ring_);
    if (is_zero()) return r;
    r.coeffs_.assign(static_cast<std::size_t>(s) + 1, Scalar::zero(ring_));
    for (long long j = 0; j <= degree(); ++j)
      r.coeffs_[static_cast<std::size_t>(s - j)] = coeff(j);
    r.normalize();
    return r;
  }

  Scalar eval(const Scalar& v) const {
    Scalar acc = Scalar::zero(ring_union(ring_, v.ring()));
    for (long long j = degree(); j >= 0; --j) acc = acc * v + coeff(j);
    return acc;
  }

  Scalar at_zero() const { return coeffs_.empty() ? zero_ : coeffs_[0]; }

  friend bool operator==(const XPoly& x, const XPoly& y) {
    if (x.degree() != y.degree()) return false;
    for (long long j = 0; j <= x.degree(); ++j)
      if (x.coeff(j) != y.coeff(j)) return false;
    return true;
  }
  friend bool operator!=(const XPoly& x, const XPoly& y) { return !(x == y); }

  std::string str() const {
    std::string out;
    for (long long j = degree(); j >= 0; --j) {
      const Scalar& c = coeff(j);
      if (c.is_zero()) continue;
      std::string cs = c.str();
      bool composite = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
      bool neg = !composite && !cs.empty() && cs[0] == '-';
      std::string mag = neg ? cs.substr(1) : cs;
      std::string piece;
      if (j == 0) {
        piece = composite ? "(" + cs + ")" : mag;
      } else {
        std::string xs = (j == 1) ? "x" : "x^" + std::to_string(j);
        if (composite)
          piece = "(" + cs + ")*" + xs;
        else if (mag == "1")
          piece = xs;
        else
          piece = mag + "*" + xs;
      }
      if (out.empty())
        out += (neg ? "-" : "") + piece;
      else
        out += (neg ? " - " : " + ") + piece;
    }
    return out.empty() ? "0" : out;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  Ring ring_;
  std::vector<Scalar> coeffs_;
  inline static const Scalar zero_{};
};

// p(x)*s(x) as a series to s's order; used for remainder checks like
// B_k(x)f(x) - A_k(x).
inline PowerSeries poly_times_series(const XPoly& p, const PowerSeries& s) {
  PowerSeries r(ring_union(p.ring(), s.ring()), s.order());
  for (long long n = 0; n <= s.order(); ++n) {
    Scalar acc = Scalar::zero(r.ring());
    for (long long j = 0; j <= std::min<long long>(p.degree(), n); ++j) {
      if (p.coeff(j).is_zero()) continue;
      acc += p.coeff(j) * s.coeff(n - j);
    }
    r.set_coeff(n, std::move(acc));
  }
  return r;
}

}  // namespace cfhankel

#endif
