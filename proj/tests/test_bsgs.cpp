#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "genus/bsgs.hpp"
#include "genus/treewreath.hpp"
#include "oracles.hpp"

using genus::BigInt;
using genus::GenSet;
using genus::Perm;
using genus::parse_perm;

namespace {

const Perm kAlpha = parse_perm("(1 2 3)", 5);
const Perm kBeta = parse_perm("(1 2 3 4 5)", 5);

Perm random_perm(genus::Rng& rng, std::size_t degree) {
  std::vector<Perm::point_type> pts(degree);
  for (std::size_t i = 0; i < degree; ++i) pts[i] = static_cast<Perm::point_type>(i + 1);
  for (std::size_t i = degree; i > 1; --i) std::swap(pts[i - 1], pts[genus::uniform_below(rng, i)]);
  return Perm::from_images(pts);
}

}  // namespace

TEST_CASE("bsgs orders match brute-force closure", "[bsgs]") {
  // Frozen from oracle::closure: |<(123),(12345)>| = 60, |<(12),(12345)>| = 120.
  REQUIRE(oracle::closure(5, {kAlpha, kBeta}).size() == 60);
  REQUIRE(oracle::closure(5, {parse_perm("(1 2)", 5), kBeta}).size() == 120);

  CHECK(genus::group_order(GenSet(5, {kAlpha, kBeta})) == 60);
  CHECK(genus::group_order(GenSet(5, {Perm::identity(5)})) == 1);
  CHECK(genus::group_order(GenSet(5, {})) == 1);
  CHECK(genus::group_order(GenSet(5, {parse_perm("(1 2)", 5), kBeta})) == 120);
}

TEST_CASE("bsgs contains every generator and rejects foreign degrees", "[bsgs]") {
  auto chain = genus::bsgs_build(GenSet(5, {kAlpha, kBeta}));
  CHECK(genus::bsgs_contains(chain, kAlpha));
  CHECK(genus::bsgs_contains(chain, kBeta));
  CHECK_FALSE(genus::bsgs_contains(chain, parse_perm("(1 2)", 5)));
  CHECK_THROWS_AS(chain.contains(Perm::identity(6)), genus::DegreeMismatch);
}

TEST_CASE("bsgs order agrees with closure on 200 random subgroups of Sym(d), d <= 6",
          "[bsgs][property]") {
  genus::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + genus::uniform_below(rng, 6);
    const std::size_t k = 1 + genus::uniform_below(rng, 3);
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(random_perm(rng, d));
    GenSet g(d, gens);
    auto chain = genus::bsgs_build(g);
    const auto elems = oracle::closure(d, gens);
    REQUIRE(chain.order() == elems.size());

    BigInt product = 1;
    for (auto s : chain.orbit_sizes()) product *= s;
    REQUIRE(product == chain.order());

    std::reverse(gens.begin(), gens.end());
    REQUIRE(genus::group_order(GenSet(d, gens)) == chain.order());
    for (const auto& p : g.gens) REQUIRE(chain.contains(p));
  }
}

TEST_CASE("bsgs membership agrees with word search for groups up to order 10^4",
          "[bsgs][property]") {
  genus::Rng rng(11);
  int tested = 0;
  while (tested < 40) {
    const std::size_t d = 4 + genus::uniform_below(rng, 4);
    std::vector<Perm> gens{random_perm(rng, d), random_perm(rng, d)};
    const auto elems = oracle::closure(d, gens, 10000);
    if (elems.size() > 10000) continue;
    ++tested;
    auto chain = genus::bsgs_build(GenSet(d, gens));
    for (int j = 0; j < 50; ++j) {
      Perm p = random_perm(rng, d);
      REQUIRE(chain.contains(p) == oracle::closure_contains(elems, p));
    }
    for (int j = 0; j < 20; ++j) {
      Perm p = chain.random_element(rng);
      REQUIRE(oracle::closure_contains(elems, p));
    }
  }
}

TEST_CASE("normal closure examples", "[bsgs][closure]") {
  GenSet alt5(5, {kAlpha, kBeta});
  CHECK(genus::group_order(genus::normal_closure(alt5, {Perm::identity(5)})) == 1);
  // Alt(5) is simple: oracle closure of the conjugates of (123) is all 60 elements.
  CHECK(genus::group_order(genus::normal_closure(alt5, {kAlpha})) == 60);
  CHECK_THROWS_AS(genus::normal_closure(alt5, {Perm::identity(4)}), genus::DegreeMismatch);
}

TEST_CASE("normal closure of 30th powers in W2 equals the level-1 kernel", "[bsgs][closure]") {
  auto gens = genus::wreath_generator_portraits(2);
  GenSet w2 = genus::to_genset(gens, 2);
  REQUIRE(genus::group_order(w2) == genus::wreath_order(2));

  genus::Rng rng(30);
  std::vector<Perm> seeds;
  for (const auto& x : gens) seeds.push_back(x.pow(30).to_perm());
  for (int i = 0; i < 20; ++i) {
    seeds.push_back(genus::random_portrait(2, rng, genus::alt5_elements()).pow(30).to_perm());
  }
  auto closure = genus::normal_closure(w2, seeds);
  CHECK(genus::group_order(closure) == BigInt(777600000));

  // Kernel of W2 -> W1 built directly: Alt(5) on each level-1 vertex.
  std::vector<Perm> kernel_gens;
  for (char v = '1'; v <= '5'; ++v) {
    for (const Perm& s : {kAlpha, kBeta}) {
      genus::Portrait p(2);
      p.set_label(std::string(1, v), s);
      kernel_gens.push_back(p.to_perm());
    }
  }
  auto kernel = genus::bsgs_build(GenSet(25, kernel_gens));
  CHECK(kernel.order() == BigInt(777600000));
  for (const auto& h : closure.gens) CHECK(kernel.contains(h));
}

TEST_CASE("normal closure output is conjugation-closed", "[bsgs][property]") {
  genus::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 3 + genus::uniform_below(rng, 5);
    GenSet g(d, {random_perm(rng, d), random_perm(rng, d)});
    auto closure = genus::normal_closure(g, {random_perm(rng, d)});
    auto chain = genus::bsgs_build(closure);
    for (const auto& h : closure.gens) {
      for (const auto& s : g.gens) REQUIRE(chain.contains(h.conjugate_by(s)));
    }
  }
}

TEST_CASE("k-transitivity", "[bsgs][transitivity]") {
  GenSet alt5(5, {kAlpha, kBeta});
  CHECK(genus::is_k_transitive(alt5, 1));
  CHECK(genus::is_k_transitive(alt5, 2));
  CHECK(genus::is_k_transitive(alt5, 3));
  CHECK_FALSE(genus::is_k_transitive(alt5, 4));  // Alt(5) is 3- but not 4-transitive
  GenSet cyclic(5, {kBeta});
  CHECK(genus::is_k_transitive(cyclic, 1));
  CHECK_FALSE(genus::is_k_transitive(cyclic, 2));
  CHECK_THROWS(genus::is_k_transitive(cyclic, 6));
}

TEST_CASE("k-transitivity is monotone in k", "[bsgs][property]") {
  genus::Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 2 + genus::uniform_below(rng, 5);
    GenSet g(d, {random_perm(rng, d), random_perm(rng, d)});
    for (std::size_t k = 2; k <= d; ++k) {
      if (genus::is_k_transitive(g, k)) REQUIRE(genus::is_k_transitive(g, k - 1));
    }
  }
}

TEST_CASE("derived subgroups", "[bsgs][derived]") {
  GenSet sym5(5, {parse_perm("(1 2)", 5), kBeta});
  // Oracle: commutators of Sym(5) generate Alt(5), order 60.
  CHECK(genus::group_order(genus::derived_subgroup(sym5)) == 60);
  CHECK(genus::group_order(genus::derived_subgroup(GenSet(5, {kBeta}))) == 1);

  GenSet p(10, {genus::direct_sum(kAlpha, kBeta), genus::direct_sum(kBeta, kAlpha)});
  REQUIRE(oracle::closure(10, p.gens).size() == 3600);
  CHECK(genus::group_order(p) == 3600);
  CHECK(genus::group_order(genus::derived_subgroup(p)) == 3600);
  CHECK(genus::is_perfect(p));
  CHECK_FALSE(genus::is_perfect(sym5));
}

TEST_CASE("an expired budget aborts Schreier-Sims", "[bsgs][budget]") {
  auto deadline = genus::Deadline::after_ms(0);
  GenSet w2 = genus::to_genset(genus::wreath_generator_portraits(2), 2);
  CHECK_THROWS_AS(genus::bsgs_build(w2, deadline), genus::BudgetExceeded);
}
