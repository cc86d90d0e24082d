#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsgs.hpp"
#include "budget.hpp"
#include "lambda.hpp"
#include "portrait.hpp"
#include "report.hpp"
#include "rng.hpp"

namespace genus {

// Fixed instance of the tree construction: arity 5, top groups Alt(5)
// generated by alpha = (1 2 3) and beta = (1 2 3 4 5), exponent 30.
struct WreathSpec {
  static constexpr std::size_t arity = 5;
  static constexpr std::uint64_t exponent = 30;
  static Perm alpha() { return Perm::from_cycles(arity, {{1, 2, 3}}); }
  static Perm beta() { return Perm::from_cycles(arity, {{1, 2, 3, 4, 5}}); }
};

// Elements of <gens> by breadth-first closure, identity first. Only for small
// groups.
inline std::vector<Perm> enumerate_closure(const GenSet& g) {
  std::vector<Perm> elems{Perm::identity(g.degree)};
  std::set<Perm> seen{elems.front()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : g.gens) {
      Perm y = elems[i].then(s);
      if (seen.insert(y).second) elems.push_back(std::move(y));
    }
  }
  return elems;
}

inline const std::vector<Perm>& alt5_elements() {
  static const std::vector<Perm> elems =
      enumerate_closure(GenSet(5, {WreathSpec::alpha(), WreathSpec::beta()}));
  return elems;
}

inline Portrait rooted_aut(const Perm& sigma, std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("rooted automorphism needs depth >= 1");
  Portrait p(depth);
  p.set_label("", sigma);
  return p;
}

using PermSequence = std::function<Perm(std::size_t)>;

// Directed automorphism along the spine 1^k: fixes level 1, section at "1" is
// the directed automorphism of the shifted sequence, section at "2" is
// rooted by seq(1). Hence vertex 1^{k-1}2 carries seq(k).
inline Portrait directed_aut(const PermSequence& seq, std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("directed automorphism needs depth >= 1");
  Portrait p(depth);
  for (std::size_t k = 1; k < depth; ++k) {
    p.set_label(std::string(k - 1, '1') + '2', seq(k));
  }
  return p;
}

inline Perm alpha_at(const LambdaSeq& lambda, std::size_t k) {
  return lambda.bit(static_cast<std::int64_t>(k)) == 0 ? WreathSpec::alpha() : WreathSpec::beta();
}

inline Perm beta_at(const LambdaSeq& lambda, std::size_t k) {
  return lambda.bit(static_cast<std::int64_t>(k)) == 0 ? WreathSpec::beta() : WreathSpec::alpha();
}

struct GammaGenerators {
  Portrait xi, eta, a, b;

  std::array<Portrait, 4> portraits() const { return {xi, eta, a, b}; }

  GenSet perms() const {
    Perm x = xi.to_perm();
    std::size_t d = x.degree();
    return GenSet(d, {std::move(x), eta.to_perm(), a.to_perm(), b.to_perm()});
  }
};

inline GammaGenerators gamma_generators(const LambdaSeq& lambda, std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("gamma generators need depth >= 1");
  return GammaGenerators{
      rooted_aut(alpha_at(lambda, 0), depth),
      rooted_aut(beta_at(lambda, 0), depth),
      directed_aut([&](std::size_t k) { return alpha_at(lambda, k); }, depth),
      directed_aut([&](std::size_t k) { return beta_at(lambda, k); }, depth),
  };
}

// |W_n| = 60^((5^n - 1)/4) for W_n acting on 5^n leaves.
inline BigInt wreath_order(std::size_t depth) {
  BigInt r = 1;
  for (std::size_t i = 0; i < Portrait::internal_count(depth); ++i) r *= 60;
  return r;
}

// alpha and beta placed at the vertices 1^l, l < depth; these generate W_n.
inline std::vector<Portrait> wreath_generator_portraits(std::size_t depth) {
  std::vector<Portrait> gens;
  for (std::size_t l = 0; l < depth; ++l) {
    for (const Perm& s : {WreathSpec::alpha(), WreathSpec::beta()}) {
      Portrait p(depth);
      p.set_label(std::string(l, '1'), s);
      gens.push_back(std::move(p));
    }
  }
  return gens;
}

inline GenSet to_genset(const std::vector<Portrait>& ps, std::size_t depth) {
  std::vector<Perm> perms;
  for (const auto& p : ps) perms.push_back(p.to_perm());
  return GenSet(Portrait::level_size(depth), std::move(perms));
}

inline Portrait level_project(const Portrait& p, std::size_t n) { return p.project(n); }

inline bool level_kernel_contains(const Portrait& p, std::size_t n) {
  return level_project(p, n).is_identity();
}

inline std::string to_decimal(const BigInt& n) { return n.str(); }

inline Check density_check(const LambdaSeq& lambda, std::size_t depth,
                           const Deadline& deadline = {}) {
  return timed_check("density depth " + std::to_string(depth), [&](Check& c) {
    if (depth < 1) throw std::invalid_argument("density check needs depth >= 1");
    auto gens = gamma_generators(lambda, depth).perms();
    BigInt order = bsgs_build(gens, deadline).order();
    BigInt expected = wreath_order(depth);
    c.details = {{"lambda", lambda.to_string()},
                 {"depth", depth},
                 {"order", to_decimal(order)},
                 {"expected", to_decimal(expected)}};
    c.status = order == expected ? Status::Pass : Status::Fail;
  });
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

// Level stabilizer St(n) of W_m against the 30^n-th powers: every sampled
// power must lie in St(n), and their normal closure must have order
// |W_m| / |W_n|.
inline Check power_closure_check(std::size_t m, std::size_t n, std::size_t samples,
                                 std::uint64_t seed, const Deadline& deadline = {}) {
  return timed_check("power closure m=" + std::to_string(m) + " n=" + std::to_string(n),
                     [&](Check& c) {
    if (n > m || m < 1) throw std::invalid_argument("power closure needs 1 <= m and n <= m");
    const std::uint64_t e = ipow(WreathSpec::exponent, n);
    Rng rng(seed);
    auto sample = wreath_generator_portraits(m);
    for (std::size_t i = 0; i < samples; ++i) {
      sample.push_back(random_portrait(m, rng, alt5_elements()));
    }
    std::vector<Perm> powers;
    std::size_t outside = 0;
    for (const auto& x : sample) {
      Portrait y = x.pow(e);
      if (!level_kernel_contains(y, n)) ++outside;
      powers.push_back(y.to_perm());
    }
    const BigInt expected = wreath_order(m) / wreath_order(n);
    c.details = {{"m", m},
                 {"n", n},
                 {"power", e},
                 {"sampled", sample.size()},
                 {"powers_outside_kernel", outside},
                 {"expected_order", to_decimal(expected)}};
    if (outside > 0) {
      c.status = Status::Fail;
      return;
    }
    try {
      auto closure = normal_closure(to_genset(wreath_generator_portraits(m), m), powers, deadline);
      BigInt order = group_order(closure, deadline);
      c.details["closure_order"] = to_decimal(order);
      c.details["closure_generators"] = closure.gens.size();
      if (order == expected) {
        c.status = Status::Pass;
      } else {
        // The sample only certifies a lower bound on the closure.
        c.status = order < expected ? Status::Inconclusive : Status::Fail;
      }
    } catch (const BudgetExceeded& ex) {
      c.status = Status::Inconclusive;
      c.details["reason"] = ex.what();
    }
  });
}

// An automorphism of Alt(5) = <alpha, beta>, given by the images of the two
// generators, together with an element of Sym(5) inducing it by conjugation.
struct Alt5Automorphism {
  Perm alpha_image;
  Perm beta_image;
  Perm conjugator;

  bool is_identity() const {
    return alpha_image == WreathSpec::alpha() && beta_image == WreathSpec::beta();
  }
};

struct AutSearchResult {
  std::optional<Alt5Automorphism> witness;
  std::size_t automorphism_count = 0;
  bool matches_conjugation = false;
};

namespace detail {

struct Alt5Table {
  std::vector<Perm> elems;
  std::map<Perm, std::size_t> index;
  std::vector<std::size_t> parent;
  std::vector<int> via;  // 0: alpha, 1: beta

  Alt5Table() {
    const std::array<Perm, 2> gens{WreathSpec::alpha(), WreathSpec::beta()};
    elems.push_back(Perm::identity(5));
    index[elems[0]] = 0;
    parent.push_back(0);
    via.push_back(-1);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (int s = 0; s < 2; ++s) {
        Perm y = elems[i].then(gens[static_cast<std::size_t>(s)]);
        if (index.emplace(y, elems.size()).second) {
          elems.push_back(std::move(y));
          parent.push_back(i);
          via.push_back(s);
        }
      }
    }
  }

  // Images of all elements under the map alpha -> x, beta -> y extended along
  // the spanning tree; empty if the map is not a bijective homomorphism.
  std::vector<Perm> extend(const Perm& x, const Perm& y) const {
    const std::array<const Perm*, 2> img_gen{&x, &y};
    std::vector<Perm> img(elems.size());
    img[0] = Perm::identity(5);
    for (std::size_t i = 1; i < elems.size(); ++i) {
      img[i] = img[parent[i]].then(*img_gen[static_cast<std::size_t>(via[i])]);
    }
    const std::array<Perm, 2> gens{WreathSpec::alpha(), WreathSpec::beta()};
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t s = 0; s < 2; ++s) {
        std::size_t j = index.at(elems[i].then(gens[s]));
        if (img[j] != img[i].then(*img_gen[s])) return {};
      }
    }
    std::set<Perm> distinct(img.begin(), img.end());
    if (distinct.size() != elems.size()) return {};
    return img;
  }
};

inline const Alt5Table& alt5_table() {
  static const Alt5Table table;
  return table;
}

inline std::vector<Perm> sym5_elements() {
  std::vector<Perm::point_type> pts{1, 2, 3, 4, 5};
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(pts));
  } while (std::next_permutation(pts.begin(), pts.end()));
  return out;
}

}  // namespace detail

// Brute-force search over all maps alpha -> x, beta -> y (x, y in Alt(5))
// that extend to automorphisms. Cross-checked against conjugation by Sym(5).
inline AutSearchResult aut_alt5_search(const Perm& source, const Perm& target) {
  const auto& table = detail::alt5_table();
  if (!table.index.contains(source) || !table.index.contains(target)) {
    throw std::invalid_argument("aut_alt5_search inputs must lie in Alt(5)");
  }

  struct Found {
    Alt5Automorphism aut;
    std::vector<Perm> images;
  };
  std::vector<Found> autos;
  for (const auto& x : table.elems) {
    for (const auto& y : table.elems) {
      auto img = table.extend(x, y);
      if (!img.empty()) autos.push_back({{x, y, Perm::identity(5)}, std::move(img)});
    }
  }

  std::map<std::pair<Perm, Perm>, Perm> by_conjugation;
  for (const auto& c : detail::sym5_elements()) {
    by_conjugation.emplace(std::pair{WreathSpec::alpha().conjugate_by(c),
                                     WreathSpec::beta().conjugate_by(c)},
                           c);
  }

  AutSearchResult result;
  result.automorphism_count = autos.size();
  result.matches_conjugation = by_conjugation.size() == autos.size();
  for (auto& f : autos) {
    auto it = by_conjugation.find({f.aut.alpha_image, f.aut.beta_image});
    if (it == by_conjugation.end()) {
      result.matches_conjugation = false;
    } else {
      f.aut.conjugator = it->second;
    }
  }

  std::stable_partition(autos.begin(), autos.end(),
                        [](const Found& f) { return f.aut.is_identity(); });
  const std::size_t src = table.index.at(source);
  for (const auto& f : autos) {
    if (f.images[src] == target) {
      result.witness = f.aut;
      break;
    }
  }
  return result;
}

// Locates the first index k where mu and nu differ, reads the labels the
// construction places there (vertex 1^{k-1}2 of a for k >= 1, the root of xi
// for k = 0) and certifies that no automorphism of Alt(5) relates them.
inline Check distinguish_pair(const LambdaSeq& mu, const LambdaSeq& nu, std::size_t depth) {
  return timed_check("distinguish " + mu.to_string() + " vs " + nu.to_string(), [&](Check& c) {
    std::optional<std::size_t> first;
    for (std::size_t k = 0; k < depth; ++k) {
      if (mu.bit(static_cast<std::int64_t>(k)) != nu.bit(static_cast<std::int64_t>(k))) {
        first = k;
        break;
      }
    }
    if (!first) throw std::invalid_argument("indistinguishable prefix");
    const std::size_t k = *first;
    auto gm = gamma_generators(mu, depth);
    auto gn = gamma_generators(nu, depth);
    const std::string vertex = k == 0 ? std::string() : std::string(k - 1, '1') + '2';
    const Portrait& src_m = k == 0 ? gm.xi : gm.a;
    const Portrait& src_n = k == 0 ? gn.xi : gn.a;
    Portrait sm = src_m.section(vertex);
    Portrait sn = src_n.section(vertex);

    auto rooted = [](const Portrait& p) {
      return p.depth() >= 1 && rooted_aut(p.label(""), p.depth()) == p;
    };
    const bool both_rooted = rooted(sm) && rooted(sn);
    const std::uint64_t om = both_rooted ? sm.label("").order() : 0;
    const std::uint64_t on = both_rooted ? sn.label("").order() : 0;
    const bool orders_ok = (om == 3 && on == 5) || (om == 5 && on == 3);
    AutSearchResult search;
    if (both_rooted) search = aut_alt5_search(sm.label(""), sn.label(""));

    c.details = {{"mu", mu.to_string()},
                 {"nu", nu.to_string()},
                 {"depth", depth},
                 {"index", k},
                 {"vertex", vertex},
                 {"generator", k == 0 ? "xi" : "a"},
                 {"sections_rooted", both_rooted},
                 {"section_orders", {om, on}},
                 {"automorphisms", search.automorphism_count},
                 {"witness_found", search.witness.has_value()}};
    c.status = both_rooted && orders_ok && !search.witness && search.automorphism_count == 120
                   ? Status::Pass
                   : Status::Fail;
  });
}

inline Check condition_check() {
  return timed_check("conditions", [](Check& c) {
    const Perm a = WreathSpec::alpha(), b = WreathSpec::beta();
    GenSet alt5(5, {a, b});
    const bool two_transitive = is_k_transitive(alt5, 2);

    GenSet p(10, {direct_sum(a, b), direct_sum(b, a)});
    const BigInt p_order = group_order(p);
    const BigInt p_derived = group_order(derived_subgroup(p));

    bool phi_ok = true;
    json phi = json::array();
    for (int bit : {0, 1}) {
      // alpha_n, beta_n for lambda_n = bit
      LambdaSeq l({bit == 1}, 0);
      BigInt ord = group_order(GenSet(5, {alpha_at(l, 0), beta_at(l, 0)}));
      phi.push_back({{"lambda_n", bit}, {"image_order", to_decimal(ord)}});
      phi_ok = phi_ok && ord == 60;
    }
    c.details = {{"alt5_two_transitive", two_transitive},
                 {"P_order", to_decimal(p_order)},
                 {"P_derived_order", to_decimal(p_derived)},
                 {"phi_images", phi}};
    c.status = two_transitive && p_order == 3600 && p_derived == p_order && phi_ok
                   ? Status::Pass
                   : Status::Fail;
  });
}

}  // namespace genus
