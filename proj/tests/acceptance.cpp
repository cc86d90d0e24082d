// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "genus/scenario.hpp"
#include "oracles.hpp"

using namespace genus;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double limit_s;  // 0: no runtime limit
  std::function<Outcome()> body;
};

LambdaSeq seeded_prefix(Rng& rng, std::size_t len, std::int64_t origin) {
  return LambdaSeq::from_word(uniform_below(rng, std::uint64_t{1} << len), len, origin);
}

Perm random_perm(Rng& rng, std::size_t degree) {
  std::vector<Perm::point_type> pts(degree);
  for (std::size_t i = 0; i < degree; ++i) pts[i] = static_cast<Perm::point_type>(i + 1);
  for (std::size_t i = degree; i > 1; --i) std::swap(pts[i - 1], pts[uniform_below(rng, i)]);
  return Perm::from_images(pts);
}

template <class T>
std::vector<T> run_parallel(std::size_t count, const std::function<T(std::size_t)>& job) {
  std::vector<std::future<T>> fs;
  for (std::size_t i = 0; i < count; ++i) fs.push_back(std::async(std::launch::async, job, i));
  std::vector<T> out;
  for (auto& f : fs) out.push_back(f.get());
  return out;
}

Outcome density() {
  Rng rng(derive_seed(1, "density"));
  const BigInt expected[] = {60, BigInt("46656000000"), boost::multiprecision::pow(BigInt(60), 31)};
  std::string lambdas;
  for (int k = 0; k < 5; ++k) {
    auto l = seeded_prefix(rng, 4, 0);
    lambdas += (k ? "," : "") + l.to_string();
    for (std::size_t n = 1; n <= 3; ++n) {
      auto c = density_check(l, n);
      if (c.details["order"] != expected[n - 1].str()) {
        return {false, "lambda " + l.to_string() + " depth " + std::to_string(n) + " order " +
                           c.details["order"].get<std::string>()};
      }
    }
  }
  return {true, "lambdas " + lambdas + ", orders 60, 60^6, 60^31"};
}

Outcome power_closure() {
  auto c = power_closure_check(2, 1, 50, derive_seed(1, "power"));
  const bool ok = c.status == Status::Pass && c.details["powers_outside_kernel"] == 0 &&
                  c.details.value("closure_order", std::string()) == "777600000";
  return {ok, "closure order " + c.details.value("closure_order", std::string("?")) +
                  ", powers outside kernel " + c.details["powers_outside_kernel"].dump()};
}

Outcome distinguishing() {
  std::vector<std::string> words;
  for (std::size_t len = 1; len <= 3; ++len) {
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w) {
      words.push_back(LambdaSeq::from_word(w, len, 0).to_string());
    }
  }
  std::size_t pairs = 0;
  for (const auto& a : words) {
    for (const auto& b : words) {
      auto mu = LambdaSeq::parse(a, 0), nu = LambdaSeq::parse(b, 0);
      if (mu.prefix(3) == nu.prefix(3)) continue;
      ++pairs;
      auto c = distinguish_pair(mu, nu, 3);
      if (!c.passed()) return {false, "pair " + a + "/" + b + ": " + c.details.dump()};
    }
  }
  auto s = aut_alt5_search(WreathSpec::alpha(), WreathSpec::beta());
  if (s.automorphism_count != 120 || s.witness || !s.matches_conjugation) {
    return {false, "automorphism search: count " + std::to_string(s.automorphism_count)};
  }
  return {true, std::to_string(pairs) + " pairs, 120 automorphisms, no witness alpha->beta"};
}

Outcome conditions() {
  auto c = condition_check();
  return {c.passed(), "P order " + c.details["P_order"].get<std::string>() + ", derived order " +
                          c.details["P_derived_order"].get<std::string>()};
}

Outcome decoder() {
  for (std::uint64_t w = 0; w < 256; ++w) {
    auto l = LambdaSeq::from_word(w, 8, 1);
    auto d = sol::decode_prefix(l, 8);
    if (d != l.prefix(8)) return {false, "prefix " + l.prefix(8) + " decoded as " + d};
  }
  return {true, "256 prefixes x 8 bits"};
}

Outcome ideal_equality() {
  Rng rng(derive_seed(1, "ideal"));
  std::vector<std::pair<LambdaSeq, LambdaSeq>> pairs;
  for (int k = 0; k < 10; ++k) pairs.emplace_back(seeded_prefix(rng, 6, 1), seeded_prefix(rng, 6, 1));
  auto checks = run_parallel<Check>(30, [&](std::size_t job) {
    const auto& [a, b] = pairs[job / 3];
    const auto m = static_cast<std::int64_t>(job % 3 + 1);
    return sol::verify_annihilator_equality(a, b, sol::NormalN(m), 500,
                                            derive_seed(1, "ideal#" + std::to_string(job)));
  });
  std::size_t samples = 0, members = 0;
  for (const auto& c : checks) {
    if (!c.passed()) return {false, c.name + ": " + c.details.dump()};
    samples += c.details["agreements"].get<std::size_t>();
    members += c.details["members"].get<std::size_t>();
  }
  return {true, "30 runs, " + std::to_string(samples) + " agreements (" + std::to_string(members) +
                    " members), 0 disagreements"};
}

Outcome translation() {
  Rng rng(derive_seed(1, "translate"));
  std::vector<std::pair<LambdaSeq, LambdaSeq>> pairs;
  for (int k = 0; k < 10; ++k) pairs.emplace_back(seeded_prefix(rng, 6, 1), seeded_prefix(rng, 6, 1));
  auto checks = run_parallel<Check>(10, [&](std::size_t job) {
    const auto& [a, b] = pairs[job];
    return sol::translate_check(a, sol::conjugator(a, b, 11), 500,
                                derive_seed(1, "translate#" + std::to_string(job)));
  });
  std::size_t members = 0;
  for (const auto& c : checks) {
    if (!c.passed()) return {false, c.name + ": " + c.details.dump()};
    members += c.details["members"].get<std::size_t>();
  }
  return {true, "10 pairs x 500 samples (" + std::to_string(members) + " members), 0 disagreements"};
}

Outcome oracle_soundness() {
  Rng rng(derive_seed(1, "oracle"));
  std::size_t members = 0;
  for (std::size_t k = 0; k < 500; ++k) {
    auto l = seeded_prefix(rng, 6, 1);
    auto r = sol::draw_sample(sol::sample_kind(k), l, sol::NormalN(1 + k % 3), rng);
    const bool fast = sol::in_J(l, r).member;
    if (fast != oracle::in_J_brute(l, r)) return {false, "disagreement on " + r.to_string()};
    members += fast;
  }
  return {true, "500 samples (" + std::to_string(members) + " members), 0 disagreements"};
}

Outcome algebra_properties() {
  Rng rng(derive_seed(1, "algebra"));
  auto fail = [](const std::string& what) { return Outcome{false, what}; };

  for (int i = 0; i < 1000; ++i) {
    const std::size_t d = 1 + uniform_below(rng, 12);
    auto p = random_perm(rng, d), q = random_perm(rng, d), r = random_perm(rng, d);
    if (p.then(q).then(r) != p.then(q.then(r)) || p.then(q).inverse() != q.inverse().then(p.inverse())) {
      return fail("Perm axioms");
    }
  }
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = 1 + uniform_below(rng, 6);
    std::vector<Perm> gens;
    for (std::size_t k = 0, n = 1 + uniform_below(rng, 3); k < n; ++k) gens.push_back(random_perm(rng, d));
    if (group_order(GenSet(d, gens)) != oracle::closure(d, gens).size()) return fail("bsgs order");
  }
  for (int i = 0; i < 2000; ++i) {
    auto x = sol::random_gelem(rng), y = sol::random_gelem(rng), z = sol::random_gelem(rng);
    if ((x * y) * z != x * (y * z) || !(x * x.inverse()).is_identity()) return fail("GElem axioms");
  }
  for (int i = 0; i < 1000; ++i) {
    auto v = sol::random_vec(rng);
    auto q1 = sol::random_qelem(rng), q2 = sol::random_qelem(rng);
    if (v.acted(q1 * q2) != v.acted(q1).acted(q2)) return fail("q-action compatibility");
  }
  for (std::int64_t i = -10; i <= 10; ++i) {
    if (sol::QElem::t(-i) * sol::QElem::a() * sol::QElem::t(i) != sol::QElem::a_i(i)) return fail("a_i");
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int i = 0; i < 500; ++i) {
      auto p = random_portrait(n, rng, alt5_elements()), q = random_portrait(n, rng, alt5_elements());
      if (p.then(q).to_perm() != p.to_perm().then(q.to_perm())) return fail("Portrait homomorphism");
    }
  }
  {
    auto l = seeded_prefix(rng, 24, 1);
    for (std::int64_t i = 1; i <= 40; ++i) {
      auto small = sol::h_gens(l, i).gens, big = sol::h_gens(l, i + 1).gens;
      if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) return fail("chain ascent");
    }
    for (std::int64_t j = -10; j <= 10; ++j) {
      for (auto b : {sol::BasisVec::e(j), sol::BasisVec::f(j)}) {
        auto i0 = sol::h_entry_index(l, sol::FinVec{b});
        if (!sol::h_contains(l, i0, sol::FinVec{b})) return fail("entry index");
      }
    }
  }
  for (std::uint64_t wa = 0; wa < 8; ++wa) {
    for (std::uint64_t wb = 0; wb < 8; ++wb) {
      auto a = LambdaSeq::from_word(wa, 3, 1), b = LambdaSeq::from_word(wb, 3, 1);
      for (std::int64_t n = 1; n <= 6; ++n) {
        if (!sol::conjugator_check(a, b, n).passed()) return fail("conjugator postcondition");
      }
    }
  }
  for (std::size_t k = 0; k < 300; ++k) {
    auto l = seeded_prefix(rng, 6, 1);
    sol::NormalN n(1 + static_cast<std::int64_t>(k % 3));
    auto r = sol::draw_sample(sol::sample_kind(k), l, n, rng);
    auto s = sol::random_ring_elem(rng);
    if (sol::in_J(l, r).member && !sol::in_J(l, r * s).member) return fail("J right ideal");
    if (sol::in_I(l, n, r).member && !sol::in_I(l, n, r * s).member) return fail("I right ideal");
  }
  for (int k = 0; k < 200; ++k) {
    sol::NormalN n(1 + uniform_int(rng, 0, 3));
    auto c = sol::GElem::vec(sol::random_N_vec(n, rng)).conjugate_by(sol::random_gelem(rng));
    if (!c.q.is_identity() || !n.contains(c.v)) return fail("N_m invariance");
  }
  return {true, "perm, bsgs, GElem, portrait, chain, conjugator, right-ideal, N_m suites"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "density at depths 1-3 for 5 seeded prefixes", 60, density},
      {2, "power closure in W2", 120, power_closure},
      {3, "distinguishing pairs of length <= 3", 30, distinguishing},
      {4, "conditions for Alt(5)", 10, conditions},
      {5, "decoder round-trip on 256 prefixes", 60, decoder},
      {6, "ideal equality, 10 pairs x m in {1,2,3} x 500 samples", 300, ideal_equality},
      {7, "translation, 10 pairs x 500 samples", 0, translation},
      {8, "in_J agrees with the brute-force oracle", 0, oracle_soundness},
      {9, "algebra property suites", 120, algebra_properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit)";
    }
    std::printf("[%s] criterion %d: %s -- %s [%.2f s]\n", o.ok ? "PASS" : "FAIL", c.number,
                c.title.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
