#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "../lambda.hpp"
#include "group.hpp"
#include "ring.hpp"

namespace genus::sol {

// p_i = i-th prime, p_1 = 2.
inline std::uint64_t nth_prime(std::size_t i) {
  if (i < 1) throw std::invalid_argument("prime index starts at 1");
  static const std::vector<std::uint64_t> table = [] {
    constexpr std::size_t limit = 1'000'000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> ps;
    for (std::size_t n = 2; n <= limit; ++n) {
      if (composite[n]) continue;
      ps.push_back(n);
      for (std::size_t m = n * n; m <= limit; m += n) composite[m] = true;
    }
    return ps;
  }();
  if (i > table.size()) throw std::out_of_range("prime index beyond table");
  return table[i - 1];
}

inline Coeff primorial(std::size_t count) {
  Coeff p = 1;
  for (std::size_t j = 1; j <= count; ++j) p *= nth_prime(j);
  return p;
}

// c_j for j >= 1: c_{2n-1} = e_n, c_{2n} = f_n when lambda(n) = 0, swapped
// when lambda(n) = 1.
inline BasisVec c_vector(const LambdaSeq& lambda, std::int64_t j) {
  if (j < 1) throw std::invalid_argument("c_vector index must be >= 1");
  const std::int64_t n = (j + 1) / 2;
  const bool odd = j % 2 == 1;
  const bool flip = lambda.bit(n) == 1;
  return (odd != flip) ? BasisVec::e(n) : BasisVec::f(n);
}

// Least level i >= 1 with b in H_{lambda,i}.
inline std::int64_t entry_level(const LambdaSeq& lambda, BasisVec b) {
  if (b.index <= 0) return std::max<std::int64_t>(1, -b.index);
  const std::int64_t n = b.index;
  return c_vector(lambda, 2 * n - 1) == b ? 2 * n - 1 : 2 * n;
}

// H_{lambda,i} = <e_0, f_0, ..., e_-i, f_-i, c_1, ..., c_i>.
struct HSub {
  LambdaSeq lambda;
  std::int64_t level = 1;
  std::vector<BasisVec> gens;  // sorted
};

inline HSub h_gens(const LambdaSeq& lambda, std::int64_t i) {
  if (i < 1) throw std::invalid_argument("chain level must be >= 1");
  HSub h{lambda, i, {}};
  for (std::int64_t j = 0; j <= i; ++j) {
    h.gens.push_back(BasisVec::e(-j));
    h.gens.push_back(BasisVec::f(-j));
  }
  for (std::int64_t j = 1; j <= i; ++j) h.gens.push_back(c_vector(lambda, j));
  std::sort(h.gens.begin(), h.gens.end());
  return h;
}

inline bool h_contains(const LambdaSeq& lambda, std::int64_t i, const FinVec& v) {
  return std::all_of(v.support().begin(), v.support().end(),
                     [&](BasisVec b) { return entry_level(lambda, b) <= i; });
}

// Least i0 with v in H_{lambda,i} for all i >= i0.
inline std::int64_t h_entry_index(const LambdaSeq& lambda, const FinVec& v) {
  std::int64_t i0 = 1;
  for (const auto& b : v.support()) i0 = std::max(i0, entry_level(lambda, b));
  return i0;
}

// N_m = kernel of the residue-sum map V -> F_2^m sending e_i and f_i to the
// unit vector at i mod m. It is invariant under a and t and has index 2^m.
struct NormalN {
  std::int64_t period = 1;

  explicit NormalN(std::int64_t m) : period(m) {
    if (m < 1) throw std::invalid_argument("period must be >= 1");
  }

  std::size_t residue_of(std::int64_t index) const {
    return static_cast<std::size_t>(((index % period) + period) % period);
  }

  std::vector<bool> residue(const FinVec& v) const {
    std::vector<bool> r(static_cast<std::size_t>(period), false);
    for (const auto& b : v.support()) r[residue_of(b.index)] = !r[residue_of(b.index)];
    return r;
  }

  bool contains(const FinVec& v) const {
    auto r = residue(v);
    return std::none_of(r.begin(), r.end(), [](bool x) { return x; });
  }

  // Residues hit by the generators of H_{lambda,i}; the image of N H_{lambda,i}
  // under the residue map is spanned by these unit vectors.
  std::vector<bool> covered(const LambdaSeq& lambda, std::int64_t i) const {
    std::vector<bool> c(static_cast<std::size_t>(period), false);
    for (const auto& b : h_gens(lambda, i).gens) c[residue_of(b.index)] = true;
    return c;
  }
};

// Right coset test: g g'^-1 in H_{lambda,i} (or in N H_{lambda,i}).
inline bool coset_eq(const LambdaSeq& lambda, std::int64_t i, const GElem& g, const GElem& gp,
                     const std::optional<NormalN>& n = std::nullopt) {
  GElem d = g * gp.inverse();
  if (!d.q.is_identity()) return false;
  if (!n) return h_contains(lambda, i, d.v);
  auto r = n->residue(d.v);
  auto cov = n->covered(lambda, i);
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] && !cov[k]) return false;
  }
  return true;
}

struct CosetWitness {
  std::int64_t level = 0;
  GElem representative;
  Coeff sum = 0;               // integer coefficient sum of the class
  std::uint64_t sum_mod_p = 0;
};

struct EvalResult {
  bool zero = true;
  std::optional<CosetWitness> witness;
};

namespace detail {

struct CosetKey {
  QElem q;
  std::vector<BasisVec> outside;  // support outside the chain generators
  std::vector<bool> residue;      // uncovered residues, when N is given

  friend auto operator<=>(const CosetKey&, const CosetKey&) = default;
};

struct CosetClass {
  GElem representative;
  Coeff sum = 0;
};

// Classes of supp(r) under right H_{lambda,i}- (or N H_{lambda,i}-) cosets, in
// order of first representative.
inline std::map<CosetKey, CosetClass> coset_classes(const LambdaSeq& lambda, std::int64_t i,
                                                    const RingElem& r,
                                                    const std::optional<NormalN>& n) {
  std::map<CosetKey, CosetClass> classes;
  std::vector<bool> cov;
  if (n) cov = n->covered(lambda, i);
  for (const auto& [g, c] : r.terms()) {
    CosetKey key{g.q, {}, {}};
    if (n) {
      auto res = n->residue(g.v);
      for (std::size_t k = 0; k < res.size(); ++k) key.residue.push_back(res[k] && !cov[k]);
    } else {
      for (const auto& b : g.v.support()) {
        if (entry_level(lambda, b) > i) key.outside.push_back(b);
      }
    }
    auto [it, inserted] = classes.try_emplace(std::move(key), CosetClass{g, 0});
    it->second.sum += c;
  }
  return classes;
}

inline std::uint64_t mod_p(const Coeff& c, std::uint64_t p) {
  Coeff m = c % p;
  if (m < 0) m += p;
  return static_cast<std::uint64_t>(m);
}

}  // namespace detail

// u_i r in U_i = F_{p_i}[H_i \ G] (or its quotient by U_i (N - 1)).
inline EvalResult eval_u(const LambdaSeq& lambda, std::int64_t i, const RingElem& r,
                         const std::optional<NormalN>& n = std::nullopt) {
  if (i < 1) throw std::invalid_argument("chain level must be >= 1");
  const std::uint64_t p = nth_prime(static_cast<std::size_t>(i));
  for (const auto& [key, cls] : detail::coset_classes(lambda, i, r, n)) {
    auto m = detail::mod_p(cls.sum, p);
    if (m != 0) return {false, CosetWitness{i, cls.representative, cls.sum, m}};
  }
  return {};
}

// Classes of supp(r) modulo V: same QElem part. Returns the first class with
// nonzero integer sum, if any.
inline std::optional<CosetWitness> v_class_defect(const RingElem& r) {
  std::map<QElem, detail::CosetClass> classes;
  for (const auto& [g, c] : r.terms()) {
    auto [it, inserted] = classes.try_emplace(g.q, detail::CosetClass{g, 0});
    it->second.sum += c;
  }
  for (const auto& [q, cls] : classes) {
    if (cls.sum != 0) return CosetWitness{0, cls.representative, cls.sum, 0};
  }
  return std::nullopt;
}

// r in (V - 1)ZG iff every V-coset class of supp(r) has coefficient sum 0.
inline bool in_V_ideal(const RingElem& r) { return !v_class_defect(r).has_value(); }

// Least level from which the H_{lambda,i}-classes of supp(r) coincide with
// its V-classes.
inline std::int64_t support_bound(const LambdaSeq& lambda, const RingElem& r) {
  std::map<QElem, FinVec> rep;
  std::int64_t bound = 1;
  for (const auto& [g, c] : r.terms()) {
    auto [it, inserted] = rep.try_emplace(g.q, g.v);
    if (!inserted) bound = std::max(bound, h_entry_index(lambda, g.v + it->second));
  }
  return bound;
}

struct Membership {
  bool member = true;
  std::int64_t levels_checked = 0;
  std::optional<CosetWitness> witness;
};

// r in J_lambda = intersection over i of (H_{lambda,i} - 1)ZG + p_i ZG.
//
// For i >= support_bound the H-classes are the V-classes, and a nonzero
// integer sum is divisible by only finitely many p_i; so membership is
// equivalent to u_i r = 0 for i < support_bound plus zero V-class sums.
inline Membership in_J(const LambdaSeq& lambda, const RingElem& r) {
  Membership m;
  m.levels_checked = support_bound(lambda, r);
  for (std::int64_t i = 1; i <= m.levels_checked; ++i) {
    auto e = eval_u(lambda, i, r);
    if (!e.zero) {
      m.member = false;
      m.witness = e.witness;
      return m;
    }
  }
  if (auto d = v_class_defect(r)) {
    m.member = false;
    // Least level beyond the bound whose prime does not divide the sum.
    for (std::int64_t i = m.levels_checked + 1;; ++i) {
      auto e = eval_u(lambda, i, r);
      if (!e.zero) {
        m.witness = e.witness;
        break;
      }
    }
  }
  return m;
}

// r in J_lambda + (N - 1)ZG, via the annihilator of u_lambda modulo
// D = sum_i U_i (N - 1): u_i r must vanish modulo U_i (N - 1) for every i and
// vanish outright for all large i. Since N H_{lambda,i} = V once
// i >= period - 1, only finitely many levels need the N-test.
inline Membership in_I(const LambdaSeq& lambda, const NormalN& n, const RingElem& r) {
  Membership m;
  m.levels_checked = std::max({support_bound(lambda, r), n.period - 1, std::int64_t{1}});
  for (std::int64_t i = 1; i <= m.levels_checked; ++i) {
    auto e = eval_u(lambda, i, r, n);
    if (!e.zero) {
      m.member = false;
      m.witness = e.witness;
      return m;
    }
  }
  if (auto d = v_class_defect(r)) {
    m.member = false;
    m.witness = d;
  }
  return m;
}

// Least level i and coset class with u_i r != 0, for r outside J_lambda.
inline CosetWitness residual_witness(const LambdaSeq& lambda, const RingElem& r) {
  auto m = in_J(lambda, r);
  if (m.member) throw std::invalid_argument("residual_witness called on a member of J_lambda");
  return *m.witness;
}

// g(alpha, beta, n) = product of a_m over m >= 1 with alpha(m) != beta(m) and
// 2m - 1 <= n; conjugation by it carries H_{alpha,i} onto H_{beta,i}, i <= n.
inline GElem conjugator(const LambdaSeq& alpha, const LambdaSeq& beta, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("conjugator level must be >= 0");
  std::vector<std::int64_t> ms;
  for (std::int64_t m = 1; 2 * m - 1 <= n; ++m) {
    if (alpha.bit(m) != beta.bit(m)) ms.push_back(m);
  }
  return GElem::of(QElem(std::move(ms), 0));
}

// The sequence gamma with H_{gamma,i} = H_{lambda,i}^g for g in <a_1, a_2, ...>.
inline LambdaSeq translate_lambda(const LambdaSeq& lambda, const GElem& g) {
  if (!g.v.is_zero() || g.q.shift() != 0 ||
      std::any_of(g.q.invs().begin(), g.q.invs().end(), [](auto i) { return i < 1; })) {
    throw std::invalid_argument("translation needs g in <a_1, a_2, ...>");
  }
  LambdaSeq out = lambda;
  for (auto m : g.q.invs()) out = out.with_bit(m, 1 - lambda.bit(m));
  return out;
}

// Generators of H_{lambda,i}^g (images under the linear action of g's
// QElem part), sorted.
inline std::vector<BasisVec> conjugated_gens(const LambdaSeq& lambda, std::int64_t i, const GElem& g) {
  std::vector<BasisVec> out;
  for (const auto& b : h_gens(lambda, i).gens) out.push_back(g.q.act(b));
  std::sort(out.begin(), out.end());
  return out;
}

inline int decode_bit(const LambdaSeq& lambda, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("decode index must be >= 1");
  RingElem r = primorial(static_cast<std::size_t>(2 * n - 2)) *
               RingElem::minus_one(GElem::basis(BasisVec::e(n)));
  return in_J(lambda, r).member ? 0 : 1;
}

inline std::string decode_prefix(const LambdaSeq& lambda, std::size_t length) {
  if (length < 1) throw std::invalid_argument("decode length must be >= 1");
  std::string s;
  for (std::size_t n = 1; n <= length; ++n) {
    s += decode_bit(lambda, static_cast<std::int64_t>(n)) ? '1' : '0';
  }
  return s;
}

}  // namespace genus::sol
