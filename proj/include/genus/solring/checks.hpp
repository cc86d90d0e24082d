#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "../report.hpp"
#include "../rng.hpp"
#include "modules.hpp"

namespace genus::sol {

// Random elements for sampled checks. Indices stay in a small window so that
// classes actually collide.
struct SampleShape {
  std::int64_t min_index = -3;
  std::int64_t max_index = 4;
  std::int64_t max_shift = 2;
  std::size_t max_terms = 4;
  std::int64_t max_coeff = 3;
};

inline BasisVec random_basis(Rng& rng, const SampleShape& sh = {}) {
  return {uniform_int(rng, sh.min_index, sh.max_index),
          uniform_below(rng, 2) ? Kind::F : Kind::E};
}

inline FinVec random_vec(Rng& rng, const SampleShape& sh = {}) {
  std::vector<BasisVec> s;
  auto k = uniform_below(rng, 4);
  for (std::uint64_t j = 0; j < k; ++j) s.push_back(random_basis(rng, sh));
  return FinVec::from_support(std::move(s));
}

inline QElem random_qelem(Rng& rng, const SampleShape& sh = {}) {
  std::vector<std::int64_t> invs;
  auto k = uniform_below(rng, 3);
  for (std::uint64_t j = 0; j < k; ++j) invs.push_back(uniform_int(rng, sh.min_index, sh.max_index));
  return QElem(std::move(invs), uniform_int(rng, -sh.max_shift, sh.max_shift));
}

inline GElem random_gelem(Rng& rng, const SampleShape& sh = {}) {
  // Pure vectors often, so that V-classes are nontrivial.
  QElem q = uniform_below(rng, 3) == 0 ? QElem() : random_qelem(rng, sh);
  return {random_vec(rng, sh), std::move(q)};
}

inline RingElem random_ring_elem(Rng& rng, const SampleShape& sh = {}) {
  RingElem r;
  auto terms = 1 + uniform_below(rng, sh.max_terms);
  for (std::uint64_t j = 0; j < terms; ++j) {
    std::int64_t c = uniform_int(rng, 1, sh.max_coeff);
    if (uniform_below(rng, 2)) c = -c;
    r.add_term(random_gelem(rng, sh), c);
  }
  return r;
}

// (p_1 ... p_{i-1}) (h - 1) s with h in H_{lambda,i}: a member of J_lambda.
inline RingElem random_J_elem(const LambdaSeq& lambda, Rng& rng, const SampleShape& sh = {}) {
  const auto i = uniform_int(rng, 1, 6);
  const auto gens = h_gens(lambda, i).gens;
  std::vector<BasisVec> pick;
  auto k = 1 + uniform_below(rng, 2);
  for (std::uint64_t j = 0; j < k; ++j) pick.push_back(gens[uniform_below(rng, gens.size())]);
  GElem h = GElem::vec(FinVec::from_support(std::move(pick)));
  return primorial(static_cast<std::size_t>(i - 1)) * RingElem::minus_one(h) *
         random_ring_elem(rng, sh);
}

// A random element of N_m: sums of e_j + f_j and of x_j + y_{j+m}.
inline FinVec random_N_vec(const NormalN& n, Rng& rng, const SampleShape& sh = {}) {
  FinVec v;
  auto k = 1 + uniform_below(rng, 2);
  for (std::uint64_t j = 0; j < k; ++j) {
    BasisVec b = random_basis(rng, sh);
    if (uniform_below(rng, 2)) {
      v += FinVec{b, b.swapped()};
    } else {
      BasisVec c{b.index + n.period * uniform_int(rng, -1, 1), uniform_below(rng, 2) ? Kind::F : Kind::E};
      v += FinVec{b} + FinVec{c};
    }
  }
  return v;
}

inline RingElem random_N_elem(const NormalN& n, Rng& rng, const SampleShape& sh = {}) {
  return RingElem::minus_one(GElem::vec(random_N_vec(n, rng, sh))) * random_ring_elem(rng, sh);
}

// Sample kinds for the membership comparisons.
enum class SampleKind { Random, JMember, NMember, Mixed, NearMiss };

inline const char* to_string(SampleKind k) {
  switch (k) {
    case SampleKind::Random: return "random";
    case SampleKind::JMember: return "J*random";
    case SampleKind::NMember: return "(N-1)*random";
    case SampleKind::Mixed: return "J+(N-1)";
    case SampleKind::NearMiss: return "near-miss";
  }
  return "?";
}

// Draws a sample of the given kind; J-members are taken for `lambda`, and
// N-members need `n`.
inline RingElem draw_sample(SampleKind kind, const LambdaSeq& lambda, const std::optional<NormalN>& n,
                            Rng& rng) {
  switch (kind) {
    case SampleKind::Random: return random_ring_elem(rng);
    case SampleKind::JMember: return random_J_elem(lambda, rng);
    case SampleKind::NMember:
      return n ? random_N_elem(*n, rng) : random_J_elem(lambda, rng);
    case SampleKind::Mixed: {
      RingElem r = random_J_elem(lambda, rng);
      if (n) r += random_N_elem(*n, rng);
      return r;
    }
    case SampleKind::NearMiss: {
      RingElem r = uniform_below(rng, 2) || !n ? random_J_elem(lambda, rng) : random_N_elem(*n, rng);
      // Perturb by a single term, or use one prime factor too few.
      switch (uniform_below(rng, 3)) {
        case 0: r.add_term(random_gelem(rng), uniform_below(rng, 2) ? 1 : -1); break;
        case 1: {
          const auto i = uniform_int(rng, 2, 6);
          BasisVec b = c_vector(lambda, uniform_int(rng, 1, 2 * i));
          r += primorial(static_cast<std::size_t>(i - 2)) *
               RingElem::minus_one(GElem::basis(b.swapped()));
          break;
        }
        default: r.add_term(GElem::basis(random_basis(rng)), 2); break;
      }
      return r;
    }
  }
  return {};
}

inline SampleKind sample_kind(std::size_t k) {
  static constexpr SampleKind kinds[] = {SampleKind::Random, SampleKind::JMember,
                                         SampleKind::NMember, SampleKind::Mixed,
                                         SampleKind::NearMiss};
  return kinds[k % 5];
}

// gamma = beta on positions m with 2m - 1 <= k, alpha elsewhere.
struct GammaConstruction {
  std::int64_t k = 0;
  GElem g;
  LambdaSeq gamma;
};

inline GammaConstruction build_gamma(const LambdaSeq& alpha, const LambdaSeq& beta,
                                     const NormalN& n) {
  GammaConstruction c;
  c.k = n.period - 1;
  c.g = conjugator(alpha, beta, c.k);
  c.gamma = translate_lambda(alpha, c.g);
  return c;
}

// First i in [1, bound] with N H_{gamma,i} != N H_{beta,i}, compared through
// residue images.
inline std::optional<std::int64_t> hypothesis_violation(const LambdaSeq& gamma, const LambdaSeq& beta,
                                                        const NormalN& n, std::int64_t bound) {
  for (std::int64_t i = 1; i <= bound; ++i) {
    if (n.covered(gamma, i) != n.covered(beta, i)) return i;
  }
  return std::nullopt;
}

inline Check verify_annihilator_equality(const LambdaSeq& alpha, const LambdaSeq& beta,
                                         const NormalN& n, std::size_t samples, std::uint64_t seed) {
  return timed_check("ideal equality " + alpha.to_string() + "/" + beta.to_string() +
                         " m=" + std::to_string(n.period),
                     [&](Check& c) {
    auto con = build_gamma(alpha, beta, n);
    const std::int64_t bound = std::max<std::int64_t>(n.period + 2, 2 * con.k + 4);
    c.details = {{"alpha", alpha.to_string()},
                 {"beta", beta.to_string()},
                 {"gamma", con.gamma.prefix(static_cast<std::size_t>(
                               std::max<std::int64_t>(1, con.gamma.support_end() - 1)))},
                 {"period", n.period},
                 {"k", con.k},
                 {"conjugator", con.g.to_string()}};
    if (auto v = hypothesis_violation(con.gamma, beta, n, bound)) {
      c.status = Status::Fail;
      c.details["hypothesis_violated_at"] = *v;
      return;
    }
    Rng rng(seed);
    std::size_t agree = 0, members = 0;
    json disagreements = json::array();
    for (std::size_t s = 0; s < samples; ++s) {
      auto kind = sample_kind(s);
      // Alternate the side used to manufacture members.
      const LambdaSeq& side = (s / 5) % 2 == 0 ? con.gamma : beta;
      RingElem r = draw_sample(kind, side, n, rng);
      bool in_gamma = in_I(con.gamma, n, r).member;
      bool in_beta = in_I(beta, n, r).member;
      if (in_gamma == in_beta) {
        ++agree;
        members += in_gamma ? 1 : 0;
      } else if (disagreements.size() < 5) {
        disagreements.push_back({{"r", r.to_string()}, {"kind", to_string(kind)},
                                 {"in_I_gamma", in_gamma}, {"in_I_beta", in_beta}});
      }
    }
    c.details["samples"] = samples;
    c.details["agreements"] = agree;
    c.details["members"] = members;
    c.details["disagreements"] = disagreements;
    c.status = agree == samples ? Status::Pass : Status::Fail;
  });
}

// J_gamma = g^-1 J_alpha for gamma = translate_lambda(alpha, g): sampled
// check that r in J_gamma iff g r in J_alpha.
inline Check translate_check(const LambdaSeq& alpha, const GElem& g, std::size_t samples,
                             std::uint64_t seed) {
  return timed_check("translate " + alpha.to_string() + " by " + g.to_string(), [&](Check& c) {
    LambdaSeq gamma = translate_lambda(alpha, g);
    Rng rng(seed);
    std::size_t agree = 0, members = 0;
    json disagreements = json::array();
    static constexpr SampleKind kinds[] = {SampleKind::Random, SampleKind::JMember,
                                           SampleKind::NearMiss};
    for (std::size_t s = 0; s < samples; ++s) {
      auto kind = kinds[s % 3];
      RingElem r = draw_sample(kind, (s / 3) % 2 == 0 ? gamma : alpha, std::nullopt, rng);
      bool lhs = in_J(gamma, r).member;
      bool rhs = in_J(alpha, g * r).member;
      if (lhs == rhs) {
        ++agree;
        members += lhs ? 1 : 0;
      } else if (disagreements.size() < 5) {
        disagreements.push_back({{"r", r.to_string()}, {"in_J_gamma", lhs}, {"in_J_alpha_gr", rhs}});
      }
    }
    c.details = {{"alpha", alpha.to_string()},
                 {"g", g.to_string()},
                 {"samples", samples},
                 {"agreements", agree},
                 {"members", members},
                 {"disagreements", disagreements}};
    c.status = agree == samples ? Status::Pass : Status::Fail;
  });
}

// H_{alpha,i}^g = H_{beta,i} for i = 1..n with g = conjugator(alpha, beta, n).
inline Check conjugator_check(const LambdaSeq& alpha, const LambdaSeq& beta, std::int64_t n) {
  return timed_check("conjugator " + alpha.to_string() + "->" + beta.to_string() +
                         " n=" + std::to_string(n),
                     [&](Check& c) {
    GElem g = conjugator(alpha, beta, n);
    json bad = json::array();
    for (std::int64_t i = 1; i <= n; ++i) {
      if (conjugated_gens(alpha, i, g) != h_gens(beta, i).gens) bad.push_back(i);
    }
    c.details = {{"alpha", alpha.to_string()}, {"beta", beta.to_string()}, {"n", n},
                 {"g", g.to_string()}, {"failing_levels", bad}};
    c.status = bad.empty() ? Status::Pass : Status::Fail;
  });
}

inline Check decode_check(const LambdaSeq& lambda, std::size_t length) {
  return timed_check("decode " + lambda.to_string(), [&](Check& c) {
    std::string decoded = decode_prefix(lambda, length);
    std::string expected = lambda.prefix(length);
    c.details = {{"lambda", lambda.to_string()}, {"length", length},
                 {"decoded", decoded}, {"expected", expected}};
    c.status = decoded == expected ? Status::Pass : Status::Fail;
  });
}

}  // namespace genus::sol
