#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace genus {

using BigInt = boost::multiprecision::cpp_int;

class DegreeMismatch : public std::invalid_argument {
public:
  DegreeMismatch(std::size_t a, std::size_t b)
      : std::invalid_argument("degree mismatch: " + std::to_string(a) + " vs " +
                              std::to_string(b)) {}
};

// A permutation of {1..degree}. Points act on the right: (x)pq = ((x)p)q.
// Images are stored 0-based internally.
class Perm {
public:
  using point_type = std::uint32_t;

  Perm() = default;

  static Perm identity(std::size_t degree) {
    Perm p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), point_type{0});
    return p;
  }

  // Images given 1-based: images[x-1] is the image of x.
  static Perm from_images(const std::vector<point_type>& images) {
    Perm p;
    p.images_.reserve(images.size());
    std::vector<bool> seen(images.size(), false);
    for (auto y : images) {
      if (y < 1 || y > images.size() || seen[y - 1]) {
        throw std::invalid_argument("images do not form a bijection");
      }
      seen[y - 1] = true;
      p.images_.push_back(y - 1);
    }
    return p;
  }

  // Cycles over 1-based points, e.g. {{1,2,3},{4,5}}.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<point_type>>& cycles) {
    Perm p = identity(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        point_type x = cyc[i];
        if (x < 1 || x > degree) {
          throw std::invalid_argument("cycle point " + std::to_string(x) +
                                      " outside 1.." + std::to_string(degree));
        }
        if (used[x - 1]) {
          throw std::invalid_argument("point " + std::to_string(x) +
                                      " repeated in cycle notation");
        }
        used[x - 1] = true;
        p.images_[x - 1] = cyc[(i + 1) % cyc.size()] - 1;
      }
    }
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }

  // 1-based image of a 1-based point.
  point_type operator()(point_type x) const { return images_.at(x - 1) + 1; }

  // 0-based raw access for the hot loops.
  point_type raw(std::size_t i) const noexcept { return images_[i]; }
  const std::vector<point_type>& raw_images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  Perm inverse() const {
    Perm r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      r.images_[images_[i]] = static_cast<point_type>(i);
    }
    return r;
  }

  // Apply *this first, then q.
  Perm then(const Perm& q) const {
    if (degree() != q.degree()) throw DegreeMismatch(degree(), q.degree());
    Perm r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      r.images_[i] = q.images_[images_[i]];
    }
    return r;
  }

  Perm pow(std::uint64_t k) const {
    Perm result = identity(degree());
    Perm base = *this;
    while (k > 0) {
      if (k & 1U) result = result.then(base);
      base = base.then(base);
      k >>= 1U;
    }
    return result;
  }

  // Conjugate g^-1 * this * g.
  Perm conjugate_by(const Perm& g) const { return g.inverse().then(*this).then(g); }

  std::vector<std::vector<point_type>> cycles() const {
    std::vector<std::vector<point_type>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      std::vector<point_type> cyc;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        cyc.push_back(static_cast<point_type>(j + 1));
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  // lcm of cycle lengths.
  std::uint64_t order() const {
    std::uint64_t result = 1;
    for (const auto& c : cycles()) result = std::lcm(result, std::uint64_t{c.size()});
    return result;
  }

  bool is_even() const {
    std::size_t transpositions = 0;
    for (const auto& c : cycles()) transpositions += c.size() - 1;
    return transpositions % 2 == 0;
  }

  std::string to_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& c : cs) {
      s += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(c[i]);
      }
      s += ')';
    }
    return s;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  std::vector<point_type> images_;
};

inline Perm compose(const Perm& p, const Perm& q) { return p.then(q); }

inline Perm commutator(const Perm& x, const Perm& y) {
  return x.inverse().then(y.inverse()).then(x).then(y);
}

// Parses cycle notation such as "(1 2 3)(4 5)" or "()". Commas are accepted as
// separators inside a cycle. Points must lie in 1..degree.
inline Perm parse_perm(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Perm::point_type>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("empty permutation text");
  while (i < text.size()) {
    if (text[i] != '(') {
      throw std::invalid_argument("expected '(' in permutation text: " + std::string(text));
    }
    ++i;
    std::vector<Perm::point_type> cyc;
    for (;;) {
      while (i < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) {
        ++i;
      }
      if (i == text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw std::invalid_argument("unexpected character in cycle: " + std::string(text));
      }
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > degree) throw std::invalid_argument("point exceeds degree");
        ++i;
      }
      cyc.push_back(static_cast<Perm::point_type>(v));
    }
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return Perm::from_cycles(degree, cycles);
}

// Direct sum of two permutations: p on 1..deg(p), q on the following block.
inline Perm direct_sum(const Perm& p, const Perm& q) {
  std::vector<Perm::point_type> images;
  images.reserve(p.degree() + q.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) images.push_back(p.raw(i) + 1);
  for (std::size_t i = 0; i < q.degree(); ++i) {
    images.push_back(static_cast<Perm::point_type>(q.raw(i) + 1 + p.degree()));
  }
  return Perm::from_images(images);
}

struct GenSet {
  std::size_t degree = 0;
  std::vector<Perm> gens;

  GenSet() = default;
  GenSet(std::size_t d, std::vector<Perm> g) : degree(d), gens(std::move(g)) {
    if (degree == 0) throw std::invalid_argument("GenSet degree must be positive");
    for (const auto& p : gens) {
      if (p.degree() != degree) throw DegreeMismatch(degree, p.degree());
    }
  }
};

}  // namespace genus
