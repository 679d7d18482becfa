#ifndef CFHANKEL_RATIONAL_HPP
#define CFHANKEL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace cfhankel {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Always normalized: lowest terms, denominator >= 1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long long n) : v_(static_cast<std::int64_t>(n)) {}
  explicit Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = Value(num);
    v_ /= Value(den);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational operator-() const { return Rational(Value(-v_)); }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(Value(x.v_ + y.v_));
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return Rational(Value(x.v_ - y.v_));
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(Value(x.v_ * y.v_));
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) throw DivisionByZeroError("rational division by zero");
    return Rational(Value(x.v_ / y.v_));
  }

  Rational& operator+=(const Rational& y) { v_ += y.v_; return *this; }
  Rational& operator-=(const Rational& y) { v_ -= y.v_; return *this; }
  Rational& operator*=(const Rational& y) { v_ *= y.v_; return *this; }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    return Rational(denominator(), numerator());
  }

  // x^e for integer e; negative e inverts first.
  Rational pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational base = *this, acc = Rational(1);
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
  friend bool operator!=(const Rational& x, const Rational& y) { return x.v_ != y.v_; }
  friend bool operator<(const Rational& x, const Rational& y) { return x.v_ < y.v_; }
  friend bool operator<=(const Rational& x, const Rational& y) { return x.v_ <= y.v_; }
  friend bool operator>(const Rational& x, const Rational& y) { return x.v_ > y.v_; }
  friend bool operator>=(const Rational& x, const Rational& y) { return x.v_ >= y.v_; }

  // Accepts "n", "-n", "n/d" with optional leading +; nothing else.
  static Rational parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
    std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
    return Rational(parse_int(ns), parse_int(ds));
  }

  std::string str() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
  }

 private:
  using Value = boost::multiprecision::cpp_rational;
  explicit Rational(Value v) : v_(std::move(v)) {}

  static BigInt parse_int(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw ParseError("bad integer literal '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j])))
        throw ParseError("bad integer literal '" + s + "'");
    return BigInt(s);
  }

  Value v_;
};

// Exact binomial coefficient; zero outside 0 <= k <= n.
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt r(1);
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

// Parity of C(n, 2) for the sign bookkeeping of Hankel evaluations.
inline int parity_choose2(long long n) {
  return static_cast<int>(((n * (n - 1)) / 2) & 1);
}

}  // namespace cfhankel

#endif
