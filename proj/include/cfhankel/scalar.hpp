#ifndef CFHANKEL_SCALAR_HPP
#define CFHANKEL_SCALAR_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "ring.hpp"

namespace cfhankel {

// Exponent vector with the total degree cached in slot 0, so that plain
// lexicographic comparison of the vector is exactly the graded-lex order.
using Exponent = std::uint16_t;
using Monomial = std::vector<Exponent>;

namespace detail {

inline Monomial mono_const(int vars) { return Monomial(static_cast<std::size_t>(vars) + 1, 0); }

inline Monomial mono_var(int vars, int v, long long e) {
  Monomial m = mono_const(vars);
  m[0] = static_cast<Exponent>(e);
  m[static_cast<std::size_t>(v) + 1] = static_cast<Exponent>(e);
  return m;
}

inline Monomial mono_mul(const Monomial& x, const Monomial& y) {
  Monomial r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = static_cast<Exponent>(x[i] + y[i]);
  return r;
}

inline bool mono_divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

inline Monomial mono_div(const Monomial& m, const Monomial& d) {
  Monomial r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = static_cast<Exponent>(m[i] - d[i]);
  return r;
}

inline bool mono_is_const(const Monomial& m) { return m[0] == 0; }

}  // namespace detail

// Sparse multivariate polynomial over Rational with a fixed indeterminate
// universe.  Terms are kept in strictly decreasing graded-lex order with no
// zero coefficients, so equality is plain structural equality.
class Scalar {
 public:
  struct Term {
    Monomial mon;
    Rational coeff;
  };

  Scalar() = default;  // zero over the empty ring

  explicit Scalar(const Rational& c, const Ring& ring = Ring()) : ring_(ring) {
    if (!c.is_zero()) terms_.push_back({detail::mono_const(ring.vars()), c});
  }

  static Scalar zero(const Ring& ring) { return Scalar(Rational(0), ring); }
  static Scalar one(const Ring& ring) { return Scalar(Rational(1), ring); }
  static Scalar constant(const Rational& c, const Ring& ring) { return Scalar(c, ring); }

  static Scalar var(const Ring& ring, int v, long long e = 1) {
    if (v < 0 || v >= ring.vars()) throw IndexOutOfRangeError("variable index out of range");
    if (e < 0) throw ParamOutOfRangeError("negative exponent");
    if (e == 0) return one(ring);
    if (e > 60000) throw ParamOutOfRangeError("exponent too large");
    Scalar s;
    s.ring_ = ring;
    s.terms_.push_back({detail::mono_var(ring.vars(), v, e), Rational(1)});
    return s;
  }

  static Scalar a(const Ring& ring, int j) { return var(ring, ring.a_var(j)); }
  static Scalar q(const Ring& ring) { return var(ring, ring.q_var()); }
  static Scalar u(const Ring& ring) { return var(ring, ring.u_var()); }

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && detail::mono_is_const(terms_[0].mon));
  }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].coeff.is_one(); }
  bool is_single_term() const { return terms_.size() == 1; }

  Rational rational_value() const {
    if (!is_constant()) throw ParamOutOfRangeError("scalar is not constant");
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
  }

  long long degree() const { return terms_.empty() ? -1 : terms_[0].mon[0]; }

  // Re-embeds this value into a ring containing every variable of its own.
  Scalar promoted(const Ring& target) const {
    if (ring_ == target) return *this;
    if (!target.contains(ring_))
      throw RingMismatchError("scalar does not embed into the requested indeterminate set");
    Scalar out;
    out.ring_ = target;
    out.terms_.reserve(terms_.size());
    const int src_a = ring_.a_count();
    for (const Term& t : terms_) {
      Monomial m = detail::mono_const(target.vars());
      m[0] = t.mon[0];
      for (int j = 0; j < src_a; ++j) m[static_cast<std::size_t>(j) + 1] = t.mon[static_cast<std::size_t>(j) + 1];
      if (ring_.has_q()) m[static_cast<std::size_t>(target.q_var()) + 1] = t.mon[static_cast<std::size_t>(ring_.q_var()) + 1];
      if (ring_.has_u()) m[static_cast<std::size_t>(target.u_var()) + 1] = t.mon[static_cast<std::size_t>(ring_.u_var()) + 1];
      out.terms_.push_back({std::move(m), t.coeff});
    }
    // Same graded-lex order before and after: q and u sit past every a-slot
    // in both rings, and relative variable order is preserved.
    return out;
  }

  Scalar operator-() const {
    Scalar out(*this);
    for (Term& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    auto [a, b] = aligned(x, y);
    return merge(a, b, false);
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    auto [a, b] = aligned(x, y);
    return merge(a, b, true);
  }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    auto [a, b] = aligned(x, y);
    return product(a, b);
  }
  friend Scalar operator*(const Scalar& x, const Rational& c) {
    Scalar out;
    out.ring_ = x.ring_;
    if (c.is_zero()) return out;
    out.terms_ = x.terms_;
    for (Term& t : out.terms_) t.coeff *= c;
    return out;
  }
  friend Scalar operator*(const Rational& c, const Scalar& x) { return x * c; }

  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  Scalar pow(long long e) const {
    if (e < 0) throw ParamOutOfRangeError("negative scalar power");
    if (e == 0) return one(ring_);
    if (terms_.size() == 1) {
      Scalar out;
      out.ring_ = ring_;
      Monomial m(terms_[0].mon.size());
      for (std::size_t i = 0; i < m.size(); ++i) {
        long long v = static_cast<long long>(terms_[0].mon[i]) * e;
        if (v > 60000) throw ParamOutOfRangeError("exponent too large");
        m[i] = static_cast<Exponent>(v);
      }
      out.terms_.push_back({std::move(m), terms_[0].coeff.pow(e)});
      return out;
    }
    Scalar base = *this, acc = one(ring_);
    while (e > 0) {
      if (e & 1) acc *= base;
      if (e >>= 1) base *= base;
    }
    return acc;
  }

  // Exact polynomial quotient num / den; throws InexactDivisionError when den
  // does not divide num in the polynomial ring.
  static Scalar exact_div(const Scalar& num, const Scalar& den) {
    if (den.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    auto [n, d] = aligned(num, den);
    if (n.is_zero()) return zero(n.ring_);
    if (d.is_constant()) {
      Rational inv = d.terms_[0].coeff.inverse();
      return n * inv;
    }
    std::map<Monomial, Rational, std::greater<Monomial>> rem;
    for (const Term& t : n.terms_) rem.emplace(t.mon, t.coeff);
    Scalar out;
    out.ring_ = n.ring_;
    const Term& lead = d.terms_.front();
    while (!rem.empty()) {
      auto top = rem.begin();
      if (!detail::mono_divides(lead.mon, top->first))
        throw InexactDivisionError("inexact polynomial division");
      Monomial qm = detail::mono_div(top->first, lead.mon);
      Rational qc = top->second / lead.coeff;
      for (const Term& t : d.terms_) {
        Monomial m = detail::mono_mul(qm, t.mon);
        Rational c = qc * t.coeff;
        auto [it, inserted] = rem.try_emplace(m, -c);
        if (!inserted) {
          it->second -= c;
          if (it->second.is_zero()) rem.erase(it);
        }
      }
      out.terms_.push_back({std::move(qm), std::move(qc)});
    }
    // Leading monomials strictly decrease, so the quotient is already sorted.
    return out;
  }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    if (x.ring_ == y.ring_) return equal_terms(x, y);
    Ring common = ring_union(x.ring_, y.ring_);
    return equal_terms(x.promoted(common), y.promoted(common));
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  // Grammar: sum of terms, each a '*'-separated product of rational literals
  // and declared variables with optional ^exponent.  No parentheses.
  static Scalar parse(const Ring& ring, std::string_view text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar expression");
    Scalar total = zero(ring);
    std::size_t i = 0;
    while (i < s.size()) {
      int sign = 1;
      while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -sign;
        ++i;
      }
      std::size_t j = i;
      while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
      if (j == i) throw ParseError("dangling sign in scalar expression");
      total += parse_term(ring, s.substr(i, j - i)) * Rational(sign);
      i = j;
    }
    return total;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
      bool neg = t.coeff.sign() < 0;
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      Rational mag = t.coeff.abs();
      std::string vars;
      for (std::size_t v = 1; v < t.mon.size(); ++v) {
        if (t.mon[v] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += ring_.var_name(static_cast<int>(v) - 1);
        if (t.mon[v] != 1) vars += "^" + std::to_string(t.mon[v]);
      }
      if (vars.empty()) {
        out += mag.str();
      } else if (mag.is_one()) {
        out += vars;
      } else {
        out += mag.str() + "*" + vars;
      }
    }
    return out;
  }

 private:
  static bool equal_terms(const Scalar& x, const Scalar& y) {
    if (x.terms_.size() != y.terms_.size()) return false;
    for (std::size_t i = 0; i < x.terms_.size(); ++i)
      if (x.terms_[i].mon != y.terms_[i].mon || x.terms_[i].coeff != y.terms_[i].coeff)
        return false;
    return true;
  }

  static std::pair<Scalar, Scalar> aligned(const Scalar& x, const Scalar& y) {
    if (x.ring_ == y.ring_) return {x, y};
    if (x.ring_.contains(y.ring_)) return {x, y.promoted(x.ring_)};
    if (y.ring_.contains(x.ring_)) return {x.promoted(y.ring_), y};
    Ring u = ring_union(x.ring_, y.ring_);
    return {x.promoted(u), y.promoted(u)};
  }

  static Scalar merge(const Scalar& x, const Scalar& y, bool subtract) {
    Scalar out;
    out.ring_ = x.ring_;
    out.terms_.reserve(x.terms_.size() + y.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < x.terms_.size() || j < y.terms_.size()) {
      bool take_x;
      if (i == x.terms_.size())
        take_x = false;
      else if (j == y.terms_.size())
        take_x = true;
      else if (x.terms_[i].mon == y.terms_[j].mon) {
        Rational c = subtract ? x.terms_[i].coeff - y.terms_[j].coeff
                              : x.terms_[i].coeff + y.terms_[j].coeff;
        if (!c.is_zero()) out.terms_.push_back({x.terms_[i].mon, std::move(c)});
        ++i;
        ++j;
        continue;
      } else
        take_x = x.terms_[i].mon > y.terms_[j].mon;
      if (take_x) {
        out.terms_.push_back(x.terms_[i]);
        ++i;
      } else {
        out.terms_.push_back({y.terms_[j].mon, subtract ? -y.terms_[j].coeff : y.terms_[j].coeff});
        ++j;
      }
    }
    return out;
  }

  static Scalar product(const Scalar& x, const Scalar& y) {
    Scalar out;
    out.ring_ = x.ring_;
    if (x.is_zero() || y.is_zero()) return out;
    if (y.terms_.size() == 1) return scaled_by_term(x, y.terms_[0]);
    if (x.terms_.size() == 1) return scaled_by_term(y, x.terms_[0]);
    const std::size_t raw = x.terms_.size() * y.terms_.size();
    if (raw <= (std::size_t{1} << 22)) {
      std::vector<Term> prod;
      prod.reserve(raw);
      for (const Term& tx : x.terms_)
        for (const Term& ty : y.terms_)
          prod.push_back({detail::mono_mul(tx.mon, ty.mon), tx.coeff * ty.coeff});
      std::sort(prod.begin(), prod.end(),
                [](const Term& a, const Term& b) { return a.mon > b.mon; });
      for (Term& t : prod) {
        if (!out.terms_.empty() && out.terms_.back().mon == t.mon) {
          out.terms_.back().coeff += t.coeff;
          if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
          out.terms_.push_back(std::move(t));
        }
      }
      return out;
    }
    // Very large products: accumulate in a map so memory tracks the combined
    // result, not the raw cross product.
    std::map<Monomial, Rational, std::greater<Monomial>> acc;
    for (const Term& tx : x.terms_)
      for (const Term& ty : y.terms_) {
        Monomial m = detail::mono_mul(tx.mon, ty.mon);
        Rational c = tx.coeff * ty.coeff;
        auto [it, inserted] = acc.try_emplace(std::move(m), c);
        if (!inserted) {
          it->second += c;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) out.terms_.push_back({m, std::move(c)});
    return out;
  }

  static Scalar scaled_by_term(const Scalar& x, const Term& t) {
    Scalar out;
    out.ring_ = x.ring_;
    out.terms_.reserve(x.terms_.size());
    for (const Term& tx : x.terms_)
      out.terms_.push_back({detail::mono_mul(tx.mon, t.mon), tx.coeff * t.coeff});
    return out;  // multiplying by one monomial preserves graded-lex order
  }

  static Scalar parse_term(const Ring& ring, std::string_view term) {
    Scalar value = one(ring);
    std::size_t i = 0;
    while (i <= term.size()) {
      std::size_t j = i;
      while (j < term.size() && term[j] != '*') ++j;
      std::string_view factor = term.substr(i, j - i);
      if (factor.empty()) throw ParseError("empty factor in scalar expression");
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        value *= Scalar(Rational::parse(factor), ring);
      } else {
        auto caret = factor.find('^');
        std::string_view name = factor.substr(0, caret);
        long long e = 1;
        if (caret != std::string_view::npos) {
          std::string_view es = factor.substr(caret + 1);
          if (es.empty()) throw ParseError("missing exponent");
          e = 0;
          for (char c : es) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
              throw ParseError("bad exponent in scalar expression");
            e = e * 10 + (c - '0');
            if (e > 60000) throw ParseError("exponent too large");
          }
        }
        auto v = ring.find_var(name);
        if (!v)
          throw ParseError("unknown indeterminate '" + std::string(name) +
                           "' for the declared universe");
        value *= var(ring, *v, e);
      }
      if (j == term.size()) break;
      i = j + 1;
      if (i == term.size()) throw ParseError("trailing '*' in scalar expression");
    }
    return value;
  }

  Ring ring_;
  std::vector<Term> terms_;
};

}  // namespace cfhankel

#endif
