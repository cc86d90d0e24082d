#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

namespace genus::sol {

enum class Kind : std::uint8_t { E = 0, F = 1 };

// Basis vector e_i or f_i of V. Ordered by index, then kind.
struct BasisVec {
  std::int64_t index = 0;
  Kind kind = Kind::E;

  static BasisVec e(std::int64_t i) { return {i, Kind::E}; }
  static BasisVec f(std::int64_t i) { return {i, Kind::F}; }

  BasisVec swapped() const { return {index, kind == Kind::E ? Kind::F : Kind::E}; }

  std::string to_string() const {
    return (kind == Kind::E ? "e" : "f") + std::to_string(index);
  }

  friend auto operator<=>(const BasisVec&, const BasisVec&) = default;
};

class QElem;

// Element of V = F_2-span of {e_i, f_i}, stored as its sorted support.
class FinVec {
public:
  FinVec() = default;
  FinVec(std::initializer_list<BasisVec> bs) {
    for (const auto& b : bs) *this += FinVec::single(b);
  }

  static FinVec single(BasisVec b) {
    FinVec v;
    v.support_.push_back(b);
    return v;
  }

  static FinVec from_support(std::vector<BasisVec> s) {
    std::sort(s.begin(), s.end());
    FinVec v;
    // Repeated entries cancel in pairs.
    for (std::size_t i = 0; i < s.size();) {
      std::size_t j = i;
      while (j < s.size() && s[j] == s[i]) ++j;
      if ((j - i) % 2 == 1) v.support_.push_back(s[i]);
      i = j;
    }
    return v;
  }

  const std::vector<BasisVec>& support() const noexcept { return support_; }
  bool is_zero() const noexcept { return support_.empty(); }
  bool contains(BasisVec b) const { return std::binary_search(support_.begin(), support_.end(), b); }

  FinVec& operator+=(const FinVec& o) {
    std::vector<BasisVec> out;
    std::set_symmetric_difference(support_.begin(), support_.end(), o.support_.begin(),
                                  o.support_.end(), std::back_inserter(out));
    support_ = std::move(out);
    return *this;
  }
  friend FinVec operator+(FinVec a, const FinVec& b) { return a += b; }

  // Linear right action of q (defined with QElem below).
  FinVec acted(const QElem& q) const;

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < support_.size(); ++i) {
      if (i) s += '+';
      s += support_[i].to_string();
    }
    return s;
  }

  friend auto operator<=>(const FinVec&, const FinVec&) = default;
  friend bool operator==(const FinVec&, const FinVec&) = default;

private:
  std::vector<BasisVec> support_;
};

// Element a_S t^k of <a, t> = C_2 wr C_inf, where a_S is the product of the
// commuting involutions a_i (i in S) and a_i swaps e_i with f_i.
//
// Since t^k a_i t^-k = a_{i-k}:
//   (a_S t^k)(a_T t^m) = a_{S ^ (T-k)} t^{k+m},   (a_S t^k)^-1 = a_{S+k} t^-k.
class QElem {
public:
  QElem() = default;
  QElem(std::vector<std::int64_t> invs, std::int64_t shift) : shift_(shift) {
    std::sort(invs.begin(), invs.end());
    for (std::size_t i = 0; i < invs.size();) {
      std::size_t j = i;
      while (j < invs.size() && invs[j] == invs[i]) ++j;
      if ((j - i) % 2 == 1) invs_.push_back(invs[i]);
      i = j;
    }
  }

  static QElem a() { return QElem({0}, 0); }
  static QElem a_i(std::int64_t i) { return QElem({i}, 0); }
  static QElem t(std::int64_t k = 1) { return QElem({}, k); }

  const std::vector<std::int64_t>& invs() const noexcept { return invs_; }
  std::int64_t shift() const noexcept { return shift_; }
  bool is_identity() const noexcept { return invs_.empty() && shift_ == 0; }

  QElem operator*(const QElem& o) const {
    std::vector<std::int64_t> moved;
    moved.reserve(o.invs_.size());
    for (auto i : o.invs_) moved.push_back(i - shift_);
    QElem r;
    std::set_symmetric_difference(invs_.begin(), invs_.end(), moved.begin(), moved.end(),
                                  std::back_inserter(r.invs_));
    r.shift_ = shift_ + o.shift_;
    return r;
  }

  QElem inverse() const {
    QElem r;
    for (auto i : invs_) r.invs_.push_back(i + shift_);
    r.shift_ = -shift_;
    return r;
  }

  // b . a_S t^k: swap at S, then shift by k.
  BasisVec act(BasisVec b) const {
    if (std::binary_search(invs_.begin(), invs_.end(), b.index)) b = b.swapped();
    b.index += shift_;
    return b;
  }

  std::string to_string() const {
    std::string s;
    if (!invs_.empty()) {
      s += "a[";
      for (std::size_t i = 0; i < invs_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(invs_[i]);
      }
      s += ']';
    }
    if (shift_ != 0) {
      if (!s.empty()) s += '.';
      s += "t^" + std::to_string(shift_);
    }
    return s;
  }

  friend auto operator<=>(const QElem&, const QElem&) = default;
  friend bool operator==(const QElem&, const QElem&) = default;

private:
  std::vector<std::int64_t> invs_;
  std::int64_t shift_ = 0;
};

inline FinVec FinVec::acted(const QElem& q) const {
  std::vector<BasisVec> s;
  s.reserve(support_.size());
  for (const auto& b : support_) s.push_back(q.act(b));
  return from_support(std::move(s));
}

// Element v.q of G = V x| <a, t> with conjugation q^-1 v q = v.q, so
//   (v, q)(w, r) = (v + w.q^-1, qr),   (v, q)^-1 = (v.q, q^-1).
struct GElem {
  FinVec v;
  QElem q;

  static GElem identity() { return {}; }
  static GElem vec(FinVec x) { return {std::move(x), QElem()}; }
  static GElem basis(BasisVec b) { return vec(FinVec::single(b)); }
  static GElem of(QElem x) { return {FinVec(), std::move(x)}; }

  bool is_identity() const { return v.is_zero() && q.is_identity(); }

  GElem operator*(const GElem& o) const { return {v + o.v.acted(q.inverse()), q * o.q}; }

  GElem inverse() const { return {v.acted(q), q.inverse()}; }

  GElem conjugate_by(const GElem& g) const { return g.inverse() * *this * g; }

  // Canonical text, e.g. "v[e0+f-2].a[1,3].t^2"; identity is "1".
  std::string to_string() const {
    std::string s;
    if (!v.is_zero()) s = "v[" + v.to_string() + "]";
    std::string qs = q.to_string();
    if (!qs.empty()) {
      if (!s.empty()) s += '.';
      s += qs;
    }
    return s.empty() ? "1" : s;
  }

  friend auto operator<=>(const GElem&, const GElem&) = default;
  friend bool operator==(const GElem&, const GElem&) = default;
};

}  // namespace genus::sol
