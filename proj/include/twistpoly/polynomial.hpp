#pragma once

// Exact sparse arithmetic in Z[A, A^-1, K1, K2, ..., M]: the coefficient ring
// of the arrow polynomial. A is Laurent; the K_i and M are ordinary commuting
// variables. d denotes -A^2 - A^-2 and is always kept expanded in A.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "twistpoly/errors.hpp"

namespace twistpoly {

using Int = boost::multiprecision::cpp_int;

// Monomial in the non-coefficient variables. k_vec is sparse, sorted by
// index, multiplicities >= 1; m_exp >= 0.
struct MonomialKey {
  int a_exp = 0;
  int m_exp = 0;
  std::vector<std::pair<int, int>> k_vec;

  friend bool operator==(const MonomialKey&, const MonomialKey&) = default;

  // Canonical term order: a_exp ascending, then m_exp, then k_vec
  // lexicographically. Rendering and JSON both follow this order.
  friend bool operator<(const MonomialKey& x, const MonomialKey& y) {
    if (x.a_exp != y.a_exp) return x.a_exp < y.a_exp;
    if (x.m_exp != y.m_exp) return x.m_exp < y.m_exp;
    return x.k_vec < y.k_vec;
  }

  int k_degree() const {
    int deg = 0;
    for (auto [i, j] : k_vec) deg += i * j;
    return deg;
  }
};

class ArrowPolynomial {
 public:
  ArrowPolynomial() = default;

  static ArrowPolynomial constant(Int c) {
    ArrowPolynomial p;
    p.add_term({}, std::move(c));
    return p;
  }

  static ArrowPolynomial one() { return constant(1); }

  static ArrowPolynomial a_power(int e, Int c = 1) {
    ArrowPolynomial p;
    p.add_term(MonomialKey{e, 0, {}}, std::move(c));
    return p;
  }

  static ArrowPolynomial k_var(int i, int j = 1) {
    ArrowPolynomial p;
    p.add_term(MonomialKey{0, 0, {{i, j}}}, 1);
    return p;
  }

  static ArrowPolynomial m_power(int e) {
    ArrowPolynomial p;
    p.add_term(MonomialKey{0, e, {}}, 1);
    return p;
  }

  // (-A^2 - A^-2)^l, expanded.
  static ArrowPolynomial d_power(int l) {
    if (l < 0) throw Error("d_power: negative exponent");
    ArrowPolynomial d;
    d.add_term(MonomialKey{2, 0, {}}, -1);
    d.add_term(MonomialKey{-2, 0, {}}, -1);
    ArrowPolynomial acc = one();
    for (int i = 0; i < l; ++i) acc = acc * d;
    return acc;
  }

  void add_term(MonomialKey key, Int coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.try_emplace(std::move(key), std::move(coeff));
    if (!fresh) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<MonomialKey, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const ArrowPolynomial&, const ArrowPolynomial&) = default;

  ArrowPolynomial& operator+=(const ArrowPolynomial& q) {
    for (const auto& [key, c] : q.terms_) add_term(key, c);
    return *this;
  }

  ArrowPolynomial& operator-=(const ArrowPolynomial& q) {
    for (const auto& [key, c] : q.terms_) add_term(key, -c);
    return *this;
  }

  friend ArrowPolynomial operator+(ArrowPolynomial p, const ArrowPolynomial& q) { return p += q; }
  friend ArrowPolynomial operator-(ArrowPolynomial p, const ArrowPolynomial& q) { return p -= q; }

  ArrowPolynomial operator-() const {
    ArrowPolynomial p;
    for (const auto& [key, c] : terms_) p.terms_.emplace(key, -c);
    return p;
  }

  friend ArrowPolynomial operator*(const ArrowPolynomial& p, const ArrowPolynomial& q) {
    ArrowPolynomial r;
    for (const auto& [kp, cp] : p.terms_)
      for (const auto& [kq, cq] : q.terms_) r.add_term(mul_keys(kp, kq), cp * cq);
    return r;
  }

  ArrowPolynomial& operator*=(const ArrowPolynomial& q) { return *this = *this * q; }

  // (-A^3)^{-w} * this. The factor is the single monomial (-1)^w A^{-3w},
  // which is its own inverse pattern, so one formula covers both signs of w.
  ArrowPolynomial normalize_by_writhe(int w) const {
    ArrowPolynomial factor = a_power(-3 * w, (w % 2 == 0) ? 1 : -1);
    return *this * factor;
  }

  // K_i -> 1 and M^m -> M^m d^{n_max - m} with n_max = max M-exponent:
  // the denominator-free form of substituting d^-1 M for M. Returns the
  // polynomial together with n_max (the cleared power of d).
  std::pair<ArrowPolynomial, int> specialize_jones() const {
    int n_max = max_m_degree();
    ArrowPolynomial q;
    for (const auto& [key, c] : terms_) {
      ArrowPolynomial t;
      t.add_term(MonomialKey{key.a_exp, key.m_exp, {}}, c);
      q += t * d_power(n_max - key.m_exp);
    }
    return {q, n_max};
  }

  ArrowPolynomial specialize_jones_scaled() const {
    return d_power(1) * specialize_jones().first;
  }

  // Set of k-degrees (sum of index * multiplicity) over all terms.
  std::set<int> k_degree_set() const {
    std::set<int> out;
    for (const auto& [key, c] : terms_) out.insert(key.k_degree());
    return out;
  }

  int max_m_degree() const {
    int m = 0;
    for (const auto& [key, c] : terms_) m = std::max(m, key.m_exp);
    return m;
  }

  bool contains_m() const { return max_m_degree() > 0; }

  // Text form, canonical order: terms joined by " + " / " - ", factors
  // space-separated, unit coefficients and unit exponents omitted.
  // Example: "A^-6 K1 + A^-4 - A^-2 K1".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
      bool neg = c < 0;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      Int mag = neg ? Int(-c) : c;
      std::vector<std::string> factors;
      if (key.a_exp != 0)
        factors.push_back(key.a_exp == 1 ? "A" : "A^" + std::to_string(key.a_exp));
      for (auto [i, j] : key.k_vec) {
        std::string f = "K" + std::to_string(i);
        if (j != 1) f += "^" + std::to_string(j);
        factors.push_back(f);
      }
      if (key.m_exp != 0)
        factors.push_back(key.m_exp == 1 ? "M" : "M^" + std::to_string(key.m_exp));
      std::string body;
      if (mag != 1 || factors.empty()) body = mag.str();
      for (const auto& f : factors) {
        if (!body.empty()) body += " ";
        body += f;
      }
      out += body;
    }
    return out;
  }

  // {"terms":[{"c":...,"a":...,"k":{"i":j,...},"m":...},...]} in canonical
  // order. Coefficients that fit in 64 bits are JSON numbers, anything
  // larger is a decimal string.
  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [key, c] : terms_) {
      nlohmann::ordered_json t;
      if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        t["c"] = static_cast<std::int64_t>(c);
      else
        t["c"] = c.str();
      t["a"] = key.a_exp;
      nlohmann::ordered_json k = nlohmann::ordered_json::object();
      for (auto [i, j] : key.k_vec) k[std::to_string(i)] = j;
      t["k"] = k;
      t["m"] = key.m_exp;
      terms.push_back(std::move(t));
    }
    return nlohmann::ordered_json{{"terms", std::move(terms)}};
  }

  // Inverse of str(). Accepts any term order and repeated factors
  // (exponents accumulate); whitespace between factors is optional.
  static ArrowPolynomial parse(const std::string& text);

 private:
  static MonomialKey mul_keys(const MonomialKey& x, const MonomialKey& y) {
    MonomialKey r;
    r.a_exp = x.a_exp + y.a_exp;
    r.m_exp = x.m_exp + y.m_exp;
    auto ix = x.k_vec.begin(), iy = y.k_vec.begin();
    while (ix != x.k_vec.end() || iy != y.k_vec.end()) {
      if (iy == y.k_vec.end() || (ix != x.k_vec.end() && ix->first < iy->first)) {
        r.k_vec.push_back(*ix++);
      } else if (ix == x.k_vec.end() || iy->first < ix->first) {
        r.k_vec.push_back(*iy++);
      } else {
        r.k_vec.emplace_back(ix->first, ix->second + iy->second);
        ++ix, ++iy;
      }
    }
    return r;
  }

  std::map<MonomialKey, Int> terms_;
};

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : s_(text) {}

  ArrowPolynomial run() {
    ArrowPolynomial out;
    skip_ws();
    int sign = read_sign_opt();
    out += term(sign);
    skip_ws();
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      out += term(c == '+' ? 1 : -1);
      skip_ws();
    }
    return out;
  }

 private:
  ArrowPolynomial term(int sign) {
    Int coeff = 1;
    bool have_any = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coeff = Int(read_digits());
      have_any = true;
    }
    MonomialKey key;
    std::map<int, int> ks;
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (c == 'A') {
        ++pos_;
        key.a_exp += read_exp_opt(true);
        have_any = true;
      } else if (c == 'K') {
        ++pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("K needs an index");
        int i = to_int(read_digits());
        if (i < 1) fail("K index must be >= 1");
        ks[i] += read_exp_opt(false);
        have_any = true;
      } else if (c == 'M') {
        ++pos_;
        key.m_exp += read_exp_opt(false);
        have_any = true;
      } else {
        break;
      }
    }
    if (!have_any) fail("empty term");
    for (auto [i, j] : ks) {
      if (j < 0) fail("negative K exponent");
      if (j > 0) key.k_vec.emplace_back(i, j);
    }
    if (key.m_exp < 0) fail("negative M exponent");
    ArrowPolynomial p;
    p.add_term(std::move(key), sign * coeff);
    return p;
  }

  // '^' int for A (negative allowed), '^' uint for K/M; defaults to 1.
  int read_exp_opt(bool allow_negative) {
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      int sign = 1;
      if (allow_negative && pos_ < s_.size() && s_[pos_] == '-') {
        sign = -1;
        ++pos_;
      }
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent digits");
      return sign * to_int(read_digits());
    }
    return 1;
  }

  int read_sign_opt() {
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      char c = s_[pos_++];
      skip_ws();
      return c == '-' ? -1 : 1;
    }
    return 1;
  }

  std::string read_digits() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  int to_int(const std::string& digits) {
    if (digits.size() > 9) fail("exponent too large");
    return std::stoi(digits);
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw SyntaxError(1, static_cast<int>(pos_) + 1, "polynomial: " + msg);
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace detail

inline ArrowPolynomial ArrowPolynomial::parse(const std::string& text) {
  bool blank = true;
  for (char c : text)
    if (c != ' ' && c != '\t') blank = false;
  if (blank) throw SyntaxError(1, 1, "polynomial: empty input");
  return detail::PolyParser(text).run();
}

}  // namespace twistpoly
