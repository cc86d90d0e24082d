#pragma once

#include <cstdint>
#include <deque>
#include <set>
#include <utility>
#include <vector>

#include "budget.hpp"
#include "perm.hpp"
#include "rng.hpp"

namespace genus {

// Base and strong generating set, built by deterministic Schreier-Sims.
//
// Level i holds base point b_i, the strong generators fixing b_0..b_{i-1},
// the orbit of b_i under them and an explicit transversal t_x (b_i t_x = x)
// with its inverses. For every level and every generator we remember how many
// orbit points already produced Schreier generators that sift to the
// identity, so extending a complete chain only tests new pairs.
class StabilizerChain {
public:
  using point_type = Perm::point_type;

  explicit StabilizerChain(std::size_t degree) : degree_(degree) {}

  static StabilizerChain build(const GenSet& g, const Deadline& deadline = {}) {
    StabilizerChain chain(g.degree);
    for (const auto& p : g.gens) chain.extend(p, deadline);
    return chain;
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t base_length() const noexcept { return levels_.size(); }

  std::vector<point_type> base() const {
    std::vector<point_type> b;
    for (const auto& l : levels_) b.push_back(l.base_point + 1);
    return b;
  }

  std::vector<std::size_t> orbit_sizes() const {
    std::vector<std::size_t> s;
    for (const auto& l : levels_) s.push_back(l.orbit.size());
    return s;
  }

  BigInt order() const {
    BigInt n = 1;
    for (const auto& l : levels_) n *= l.orbit.size();
    return n;
  }

  // Strong generators of the whole group (level 0).
  std::vector<Perm> strong_generators() const {
    return levels_.empty() ? std::vector<Perm>{} : levels_.front().gens;
  }

  // Sifts p through levels [from, end). Returns the residue and the level at
  // which sifting stopped (base_length() if it passed every level).
  std::pair<Perm, std::size_t> sift(Perm p, std::size_t from = 0) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const Level& l = levels_[i];
      point_type x = p.raw(l.base_point);
      std::int32_t pos = l.orbit_pos[x];
      if (pos < 0) return {std::move(p), i};
      p = p.then(l.inv_transversal[static_cast<std::size_t>(pos)]);
    }
    return {std::move(p), levels_.size()};
  }

  bool contains(const Perm& p) const {
    if (p.degree() != degree_) throw DegreeMismatch(degree_, p.degree());
    return sift(p).first.is_identity();
  }

  // Uniformly random element: one transversal element per level, deepest
  // level first.
  Perm random_element(Rng& rng) const {
    Perm g = Perm::identity(degree_);
    for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
      auto k = uniform_below(rng, it->orbit.size());
      g = g.then(it->transversal[k]);
    }
    return g;
  }

  // Adds p to the group. Returns false if p was already a member.
  bool extend(const Perm& p, const Deadline& deadline = {}) {
    if (p.degree() != degree_) throw DegreeMismatch(degree_, p.degree());
    auto [h, j] = sift(p);
    if (h.is_identity()) return false;
    insert_residue(std::move(h), 0, j);
    complete(deadline);
    return true;
  }

private:
  struct Level {
    point_type base_point = 0;
    std::vector<Perm> gens;
    std::vector<std::size_t> checked;  // per generator: orbit prefix verified
    std::vector<point_type> orbit;
    std::vector<std::int32_t> orbit_pos;
    std::vector<Perm> transversal;
    std::vector<Perm> inv_transversal;
  };

  void add_orbit_point(Level& l, point_type x, Perm t) {
    l.orbit_pos[x] = static_cast<std::int32_t>(l.orbit.size());
    l.orbit.push_back(x);
    l.inv_transversal.push_back(t.inverse());
    l.transversal.push_back(std::move(t));
  }

  void new_level(point_type b) {
    Level l;
    l.base_point = b;
    l.orbit_pos.assign(degree_, -1);
    add_orbit_point(l, b, Perm::identity(degree_));
    levels_.push_back(std::move(l));
  }

  void add_generator(std::size_t level, const Perm& s) {
    Level& l = levels_[level];
    l.gens.push_back(s);
    l.checked.push_back(0);
    // New generator applied to the old points, then closure over all gens.
    const std::size_t old_size = l.orbit.size();
    for (std::size_t k = 0; k < old_size; ++k) {
      point_type y = s.raw(l.orbit[k]);
      if (l.orbit_pos[y] < 0) add_orbit_point(l, y, l.transversal[k].then(s));
    }
    for (std::size_t k = old_size; k < l.orbit.size(); ++k) {
      for (const auto& g : l.gens) {
        point_type y = g.raw(l.orbit[k]);
        if (l.orbit_pos[y] < 0) add_orbit_point(l, y, l.transversal[k].then(g));
      }
    }
  }

  // h fixes the base points of levels below `from` and sifted to level `to`.
  void insert_residue(Perm h, std::size_t from, std::size_t to) {
    if (to == levels_.size()) {
      point_type b = 0;
      while (h.raw(b) == b) ++b;
      new_level(b);
    }
    for (std::size_t l = from; l <= to; ++l) add_generator(l, h);
  }

  void complete(const Deadline& deadline) {
    std::size_t i = levels_.size();
    while (i > 0) {
      std::size_t level = i - 1;
      bool grew = false;
      for (std::size_t gi = 0; gi < levels_[level].gens.size() && !grew; ++gi) {
        while (levels_[level].checked[gi] < levels_[level].orbit.size()) {
          deadline.check("Schreier-Sims");
          const Level& l = levels_[level];
          const std::size_t k = l.checked[gi];
          const Perm& s = l.gens[gi];
          point_type y = s.raw(l.orbit[k]);
          Perm schreier = l.transversal[k].then(s).then(
              l.inv_transversal[static_cast<std::size_t>(l.orbit_pos[y])]);
          if (!schreier.is_identity()) {
            auto [h, j] = sift(std::move(schreier), level + 1);
            if (!h.is_identity()) {
              insert_residue(std::move(h), level + 1, j);
              i = j + 1;
              grew = true;
              break;
            }
          }
          ++levels_[level].checked[gi];
        }
      }
      if (!grew) --i;
    }
  }

  std::size_t degree_;
  std::vector<Level> levels_;
};

inline StabilizerChain bsgs_build(const GenSet& g, const Deadline& deadline = {}) {
  return StabilizerChain::build(g, deadline);
}

inline BigInt bsgs_order(const StabilizerChain& chain) { return chain.order(); }

inline bool bsgs_contains(const StabilizerChain& chain, const Perm& p) {
  return chain.contains(p);
}

inline BigInt group_order(const GenSet& g, const Deadline& deadline = {}) {
  return bsgs_build(g, deadline).order();
}

// Generators of the normal closure of `seeds` under conjugation by g.gens.
// Every returned generator h satisfies: h^s lies in the closure for each
// generator s (checked as each h is added).
inline GenSet normal_closure(const GenSet& g, const std::vector<Perm>& seeds,
                             const Deadline& deadline = {}) {
  StabilizerChain chain(g.degree);
  std::vector<Perm> out;
  std::deque<Perm> queue;
  for (const auto& s : seeds) {
    if (s.degree() != g.degree) throw DegreeMismatch(g.degree, s.degree());
    queue.push_back(s);
  }
  while (!queue.empty()) {
    deadline.check("normal closure");
    Perm h = std::move(queue.front());
    queue.pop_front();
    if (!chain.extend(h, deadline)) continue;
    for (const auto& s : g.gens) queue.push_back(h.conjugate_by(s));
    out.push_back(std::move(h));
  }
  return GenSet(g.degree, std::move(out));
}

inline GenSet derived_subgroup(const GenSet& g, const Deadline& deadline = {}) {
  std::vector<Perm> comms;
  for (std::size_t i = 0; i < g.gens.size(); ++i) {
    for (std::size_t j = i + 1; j < g.gens.size(); ++j) {
      comms.push_back(commutator(g.gens[i], g.gens[j]));
    }
  }
  return normal_closure(g, comms, deadline);
}

inline bool is_perfect(const GenSet& g, const Deadline& deadline = {}) {
  return group_order(derived_subgroup(g, deadline), deadline) == group_order(g, deadline);
}

// Transitivity on ordered k-tuples of distinct points, by orbit closure of
// the tuple (1, 2, ..., k).
inline bool is_k_transitive(const GenSet& g, std::size_t k) {
  const std::size_t d = g.degree;
  if (k == 0) return true;
  if (k > d) throw std::invalid_argument("k exceeds degree");
  std::uint64_t target = 1;
  for (std::size_t i = 0; i < k; ++i) target *= d - i;

  using Tuple = std::vector<Perm::point_type>;
  Tuple start(k);
  for (std::size_t i = 0; i < k; ++i) start[i] = static_cast<Perm::point_type>(i);
  std::set<Tuple> seen{start};
  std::vector<Tuple> frontier{start};
  while (!frontier.empty() && seen.size() < target) {
    std::vector<Tuple> next;
    for (const auto& t : frontier) {
      for (const auto& s : g.gens) {
        Tuple u(k);
        for (std::size_t i = 0; i < k; ++i) u[i] = s.raw(t[i]);
        if (seen.insert(u).second) next.push_back(std::move(u));
      }
    }
    frontier = std::move(next);
  }
  return seen.size() == target;
}

}  // namespace genus
