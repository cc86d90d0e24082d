#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "../perm.hpp"  // BigInt
#include "group.hpp"

namespace genus::sol {

using Coeff = BigInt;

// Finitely supported integer combination of elements of G.
class RingElem {
public:
  using Terms = std::map<GElem, Coeff>;

  RingElem() = default;
  RingElem(const GElem& g, Coeff c = 1) { add_term(g, std::move(c)); }

  static RingElem zero() { return {}; }
  static RingElem one() { return RingElem(GElem::identity()); }
  static RingElem integer(Coeff c) { return RingElem(GElem::identity(), std::move(c)); }
  // g - 1
  static RingElem minus_one(const GElem& g) { return RingElem(g) - one(); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  void add_term(const GElem& g, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Coeff coefficient(const GElem& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  Coeff abs_coefficient_sum() const {
    Coeff s = 0;
    for (const auto& [g, c] : terms_) s += c < 0 ? Coeff(-c) : c;
    return s;
  }

  RingElem& operator+=(const RingElem& o) {
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
  }
  RingElem& operator-=(const RingElem& o) {
    for (const auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
  }
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  RingElem operator-() const { return RingElem() - *this; }

  friend RingElem operator*(const Coeff& k, const RingElem& r) {
    RingElem out;
    if (k == 0) return out;
    for (const auto& [g, c] : r.terms_) out.terms_.emplace(g, k * c);
    return out;
  }

  friend RingElem operator*(const RingElem& x, const RingElem& y) {
    RingElem out;
    for (const auto& [g, c] : x.terms_) {
      for (const auto& [h, d] : y.terms_) out.add_term(g * h, c * d);
    }
    return out;
  }

  // Left multiplication by a group element.
  friend RingElem operator*(const GElem& g, const RingElem& r) {
    RingElem out;
    for (const auto& [h, c] : r.terms_) out.add_term(g * h, c);
    return out;
  }

  // Canonical text: terms in increasing GElem order, "c*g" with unit
  // coefficients elided; zero is "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [g, c] : terms_) {
      const bool neg = c < 0;
      const Coeff mag = neg ? Coeff(-c) : c;
      if (first) {
        if (neg) s += '-';
      } else {
        s += neg ? " - " : " + ";
      }
      first = false;
      if (g.is_identity()) {
        s += mag.str();
      } else {
        if (mag != 1) s += mag.str() + "*";
        s += g.to_string();
      }
    }
    return s;
  }

  friend bool operator==(const RingElem&, const RingElem&) = default;

private:
  Terms terms_;
};

namespace detail {

class RingParser {
public:
  explicit RingParser(std::string_view s) : s_(s) {}

  RingElem parse() {
    RingElem r;
    skip();
    if (peek() == '0' && rest_is_zero()) return r;
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++i_;
      skip();
    }
    r += signed_term(negate);
    skip();
    while (i_ < s_.size()) {
      char op = s_[i_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++i_;
      skip();
      r += signed_term(op == '-');
      skip();
    }
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("ring element parse error at offset " + std::to_string(i_) +
                                ": " + msg + " in '" + std::string(s_) + "'");
  }

  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool rest_is_zero() const {
    std::size_t j = i_ + 1;
    while (j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j]))) ++j;
    return j == s_.size();
  }

  std::string digits() {
    std::string d;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) d += s_[i_++];
    if (d.empty()) fail("expected digits");
    return d;
  }

  std::int64_t small_int() {
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++i_;
    }
    auto d = digits();
    if (d.size() > 15) fail("integer too large");
    auto v = std::stoll(d);
    return neg ? -v : v;
  }

  RingElem signed_term(bool negate) {
    Coeff c = 1;
    GElem g;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = i_;
      c = Coeff(digits());
      skip();
      if (peek() == '*') {
        ++i_;
        skip();
        g = gelem();
      } else if (peek() == '.') {
        if (c != 1) fail("only the identity '1' may start a product");
        i_ = start;
        c = 1;
        g = gelem();
      }
    } else {
      g = gelem();
    }
    return RingElem(g, negate ? Coeff(-c) : c);
  }

  GElem gelem() {
    GElem g = factor();
    while (peek() == '.') {
      ++i_;
      g = g * factor();
    }
    return g;
  }

  GElem factor() {
    char c = peek();
    if (c == '1') {
      ++i_;
      return GElem::identity();
    }
    if (c == 'v' || c == 'a') {
      ++i_;
      if (peek() != '[') fail("expected '['");
      ++i_;
      skip();
      GElem g;
      if (c == 'v') {
        std::vector<BasisVec> bs;
        if (peek() != ']') {
          for (;;) {
            skip();
            char k = peek();
            if (k != 'e' && k != 'f') fail("expected basis vector e<i> or f<i>");
            ++i_;
            std::int64_t idx = small_int();
            bs.push_back({idx, k == 'e' ? Kind::E : Kind::F});
            skip();
            if (peek() != '+') break;
            ++i_;
          }
        }
        g = GElem::vec(FinVec::from_support(std::move(bs)));
      } else {
        std::vector<std::int64_t> invs;
        if (peek() != ']') {
          for (;;) {
            skip();
            invs.push_back(small_int());
            skip();
            if (peek() != ',') break;
            ++i_;
          }
        }
        g = GElem::of(QElem(std::move(invs), 0));
      }
      if (peek() != ']') fail("expected ']'");
      ++i_;
      return g;
    }
    if (c == 't') {
      ++i_;
      std::int64_t k = 1;
      if (peek() == '^') {
        ++i_;
        k = small_int();
      }
      return GElem::of(QElem::t(k));
    }
    fail("expected a group element factor");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace detail

// Parses the text form, e.g. "3*v[e0+f-2].a[1,3].t^2 - t^-1 + 5". Factors of
// a product may appear in any order and are multiplied left to right.
inline RingElem parse_ring_elem(std::string_view text) { return detail::RingParser(text).parse(); }

inline GElem parse_gelem(std::string_view text) {
  RingElem r = parse_ring_elem(text);
  if (r.size() != 1 || r.terms().begin()->second != 1) {
    throw std::invalid_argument("expected a single group element: '" + std::string(text) + "'");
  }
  return r.terms().begin()->first;
}

}  // namespace genus::sol
