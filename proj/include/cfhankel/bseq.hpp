#ifndef CFHANKEL_BSEQ_HPP
#define CFHANKEL_BSEQ_HPP

#include <cctype>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace cfhankel {

// Index sequences b_{-1}, b_0, ..., b_K with b_{-1} = -1, b_0 = 0,
// non-decreasing, and no value repeated three times (b_{k+2} - b_k >= 1).
// The power sequence of the matching C-fraction is m_n = b_{n+1} - b_{n-1}.

inline bool bseq_values_valid(const std::vector<long long>& v, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (v.size() < 2) return fail("need at least b_-1 and b_0");
  if (v[0] != -1) return fail("b_-1 must be -1");
  if (v[1] != 0) return fail("b_0 must be 0");
  for (std::size_t i = 2; i < v.size(); ++i)
    if (v[i] < v[i - 1])
      return fail("not non-decreasing at b_" + std::to_string(i - 1));
  for (std::size_t i = 0; i + 2 < v.size(); ++i)
    if (v[i + 2] - v[i] < 1)
      return fail("value " + std::to_string(v[i]) + " occurs three times");
  return true;
}

class BSeq {
 public:
  // values must start with b_-1 = -1, b_0 = 0.
  explicit BSeq(std::vector<long long> values) : v_(std::move(values)) {
    std::string why;
    if (!bseq_values_valid(v_, &why)) throw InvalidBSeqError("invalid b-sequence: " + why);
  }

  static BSeq parse(std::string_view text) {
    std::vector<long long> v;
    std::string cur;
    auto flush = [&] {
      if (cur.empty()) throw ParseError("empty entry in b-sequence list");
      char* end = nullptr;
      long long x = std::strtoll(cur.c_str(), &end, 10);
      if (end != cur.c_str() + cur.size()) throw ParseError("bad integer '" + cur + "'");
      v.push_back(x);
      cur.clear();
    };
    for (char c : text) {
      if (c == ',') {
        flush();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) flush();
    return BSeq(std::move(v));
  }

  // largest defined index K
  long long K() const { return static_cast<long long>(v_.size()) - 2; }

  long long b(long long k) const {
    if (k < -1 || k > K())
      throw IndexOutOfRangeError("b_" + std::to_string(k) + " undefined (K = " +
                                 std::to_string(K()) + ")");
    return v_[static_cast<std::size_t>(k + 1)];
  }

  const std::vector<long long>& values() const { return v_; }

  // m_n = b_{n+1} - b_{n-1} for n = 0..K-1
  std::vector<long long> powers() const {
    std::vector<long long> m;
    for (long long n = 0; n + 1 <= K(); ++n) m.push_back(b(n + 1) - b(n - 1));
    return m;
  }

  // Distinct values B_0 < B_1 < ... taken by b_0..b_K.
  std::vector<long long> distinct_values() const {
    std::vector<long long> out;
    for (long long k = 0; k <= K(); ++k)
      if (out.empty() || b(k) != out.back()) out.push_back(b(k));
    return out;
  }

  int multiplicity(long long value) const {
    int c = 0;
    for (long long k = 0; k <= K(); ++k)
      if (b(k) == value) ++c;
    return c;
  }

  // Largest k with b_k = value, or -2 when absent.
  long long last_index_of(long long value) const {
    for (long long k = K(); k >= 0; --k)
      if (b(k) == value) return k;
    return -2;
  }

  bool contains_value(long long value) const { return last_index_of(value) >= 0; }

 private:
  std::vector<long long> v_;
};

inline std::vector<long long> bseq_to_powers(const BSeq& b) { return b.powers(); }

// Inverting m_n = b_{n+1} - b_{n-1} need not produce a valid b-sequence, so
// the result carries a validity flag instead of throwing.
struct BSeqCandidate {
  std::vector<long long> values;  // starts with b_-1 = -1
  bool valid = false;
  std::string reason;
};

inline BSeqCandidate powers_to_bseq(const std::vector<long long>& m) {
  if (m.empty()) throw ParamOutOfRangeError("empty power sequence");
  BSeqCandidate out;
  out.values = {-1, 0};
  for (long long mk : m) {
    if (mk < 1) throw ParamOutOfRangeError("powers must be positive");
    out.values.push_back(out.values[out.values.size() - 2] + mk);
  }
  out.valid = bseq_values_valid(out.values, &out.reason);
  return out;
}

}  // namespace cfhankel

#endif
