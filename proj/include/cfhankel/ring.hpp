#ifndef CFHANKEL_RING_HPP
#define CFHANKEL_RING_HPP

#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace cfhankel {

// Indeterminate universe a polynomial computation runs over, declared up
// front: a_0 .. a_{A-1}, then optionally q, then optionally u.  Variable
// indices are dense in that order, which keeps exponent vectors fixed-width.
class Ring {
 public:
  Ring() = default;
  explicit Ring(int a_count, bool with_q = false, bool with_u = false)
      : a_count_(a_count), q_(with_q), u_(with_u) {
    if (a_count < 0) throw ParamOutOfRangeError("negative indeterminate count");
  }

  int a_count() const { return a_count_; }
  bool has_q() const { return q_; }
  bool has_u() const { return u_; }
  int vars() const { return a_count_ + (q_ ? 1 : 0) + (u_ ? 1 : 0); }

  int a_var(int j) const {
    if (j < 0 || j >= a_count_)
      throw IndexOutOfRangeError("indeterminate a" + std::to_string(j) +
                                 " not declared (declared a-count " +
                                 std::to_string(a_count_) + ")");
    return j;
  }
  int q_var() const {
    if (!q_) throw IndexOutOfRangeError("indeterminate q not declared");
    return a_count_;
  }
  int u_var() const {
    if (!u_) throw IndexOutOfRangeError("indeterminate u not declared");
    return a_count_ + (q_ ? 1 : 0);
  }

  std::string var_name(int v) const {
    if (v < 0 || v >= vars()) throw IndexOutOfRangeError("variable index out of range");
    if (v < a_count_) return "a" + std::to_string(v);
    if (q_ && v == a_count_) return "q";
    return "u";
  }

  std::optional<int> find_var(std::string_view name) const {
    if (name == "q") return q_ ? std::optional<int>(q_var()) : std::nullopt;
    if (name == "u") return u_ ? std::optional<int>(u_var()) : std::nullopt;
    if (name.size() >= 2 && name[0] == 'a') {
      int j = 0;
      for (std::size_t i = 1; i < name.size(); ++i) {
        char c = name[i];
        if (c < '0' || c > '9') return std::nullopt;
        j = j * 10 + (c - '0');
        if (j > 1'000'000) return std::nullopt;
      }
      if (j < a_count_) return j;
    }
    return std::nullopt;
  }

  // True when every variable of `sub` exists here under the same name.
  bool contains(const Ring& sub) const {
    return sub.a_count_ <= a_count_ && (!sub.q_ || q_) && (!sub.u_ || u_);
  }

  friend bool operator==(const Ring& x, const Ring& y) {
    return x.a_count_ == y.a_count_ && x.q_ == y.q_ && x.u_ == y.u_;
  }
  friend bool operator!=(const Ring& x, const Ring& y) { return !(x == y); }

  friend Ring ring_union(const Ring& x, const Ring& y) {
    return Ring(x.a_count_ > y.a_count_ ? x.a_count_ : y.a_count_, x.q_ || y.q_,
                x.u_ || y.u_);
  }

 private:
  int a_count_ = 0;
  bool q_ = false;
  bool u_ = false;
};

}  // namespace cfhankel

#endif
