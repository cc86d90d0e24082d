#include <catch2/catch_amalgamated.hpp>

#include "genus/perm.hpp"
#include "genus/rng.hpp"

using genus::Perm;
using genus::parse_perm;

namespace {

Perm random_perm(genus::Rng& rng, std::size_t degree) {
  std::vector<Perm::point_type> pts(degree);
  for (std::size_t i = 0; i < degree; ++i) pts[i] = static_cast<Perm::point_type>(i + 1);
  for (std::size_t i = degree; i > 1; --i) std::swap(pts[i - 1], pts[genus::uniform_below(rng, i)]);
  return Perm::from_images(pts);
}

}  // namespace

TEST_CASE("compose applies the left factor first", "[perm]") {
  const Perm id = Perm::identity(5);
  const Perm a = parse_perm("(1 2 3)", 5);
  const Perm b = parse_perm("(1 2 3 4 5)", 5);

  CHECK(genus::compose(id, a) == a);
  CHECK(genus::compose(a, parse_perm("(1 3 2)", 5)).is_identity());
  // 1->3, 3->2, 2->4, 4->5, 5->1 traced by hand
  CHECK(genus::compose(a, b) == parse_perm("(1 3 2 4 5)", 5));
  for (Perm::point_type x = 1; x <= 5; ++x) CHECK(genus::compose(a, b)(x) == b(a(x)));
}

TEST_CASE("compose rejects mismatched degrees", "[perm]") {
  CHECK_THROWS_AS(genus::compose(Perm::identity(4), Perm::identity(5)), genus::DegreeMismatch);
}

TEST_CASE("perm order is the lcm of cycle lengths", "[perm]") {
  CHECK(Perm::identity(5).order() == 1);
  CHECK(parse_perm("(1 2 3)", 5).order() == 3);
  CHECK(parse_perm("(1 2 3 4 5)", 5).order() == 5);
  CHECK(parse_perm("(1 2)(3 4 5)", 6).order() == 6);
  const Perm p = parse_perm("(1 2)(3 4 5)(6 7 8 9)", 9);
  CHECK(p.pow(p.order()).is_identity());
  for (std::uint64_t k = 1; k < p.order(); ++k) CHECK_FALSE(p.pow(k).is_identity());
}

TEST_CASE("cycle notation parses and prints", "[perm][text]") {
  CHECK(Perm::identity(5).to_string() == "()");
  CHECK(parse_perm("()", 5).is_identity());
  CHECK(parse_perm("  (1 2 3)(4 5) ", 5).to_string() == "(1 2 3)(4 5)");
  CHECK(parse_perm("(3,1,2)", 5) == parse_perm("(1 2 3)", 5));
  CHECK(parse_perm("(2)(1 3)", 3).to_string() == "(1 3)");

  CHECK_THROWS(parse_perm("(1 2 6)", 5));
  CHECK_THROWS(parse_perm("(1 2)(2 3)", 5));
  CHECK_THROWS(parse_perm("(1 2", 5));
  CHECK_THROWS(parse_perm("1 2", 5));
  CHECK_THROWS(parse_perm("", 5));
  CHECK_THROWS(Perm::from_images({1, 1, 3}));
}

TEST_CASE("group axioms on 1000 random triples", "[perm][property]") {
  genus::Rng rng(20261015);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t d = 1 + genus::uniform_below(rng, 12);
    const Perm p = random_perm(rng, d), q = random_perm(rng, d), r = random_perm(rng, d);
    REQUIRE(p.then(q).then(r) == p.then(q.then(r)));
    REQUIRE(p.then(q).inverse() == q.inverse().then(p.inverse()));
    REQUIRE(p.then(Perm::identity(d)) == p);
    REQUIRE(p.then(p.inverse()).is_identity());
    REQUIRE(parse_perm(p.to_string(), d) == p);
  }
}

TEST_CASE("direct sum places the second factor on the following block", "[perm]") {
  const Perm x = genus::direct_sum(parse_perm("(1 2 3)", 5), parse_perm("(1 2 3 4 5)", 5));
  CHECK(x == parse_perm("(1 2 3)(6 7 8 9 10)", 10));
  CHECK(x.order() == 15);
}
