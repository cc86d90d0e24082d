#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "perm.hpp"
#include "rng.hpp"

namespace genus {

// Automorphism of the 5-regular rooted tree truncated at depth n, given by a
// degree-5 label on every vertex of length < n.
//
// Vertices are words over {1..5}; labels are stored level by level, each level
// in lexicographic order. The action is on the right:
//   (x w)^g = x^{g(root)} w^{g|x},
// so the label of a product is (pq)(u) = p(u) q(u^p).
class Portrait {
public:
  static constexpr std::size_t arity = 5;

  Portrait() : Portrait(0) {}
  explicit Portrait(std::size_t depth)
      : depth_(depth), labels_(internal_count(depth), Perm::identity(arity)) {}

  static Portrait identity(std::size_t depth) { return Portrait(depth); }

  static std::size_t level_size(std::size_t level) {
    std::size_t s = 1;
    for (std::size_t i = 0; i < level; ++i) s *= arity;
    return s;
  }
  static std::size_t level_offset(std::size_t level) { return (level_size(level) - 1) / (arity - 1); }
  static std::size_t internal_count(std::size_t depth) { return level_offset(depth); }

  // Position of a vertex word in storage order.
  static std::size_t vertex_index(std::string_view v) {
    std::size_t lex = 0;
    for (char c : v) {
      if (c < '1' || c > '5') throw std::invalid_argument("bad vertex '" + std::string(v) + "'");
      lex = lex * arity + static_cast<std::size_t>(c - '1');
    }
    return level_offset(v.size()) + lex;
  }

  std::size_t depth() const noexcept { return depth_; }

  const Perm& label(std::string_view v) const {
    if (v.size() >= depth_) throw std::out_of_range("vertex '" + std::string(v) + "' is a leaf");
    return labels_[vertex_index(v)];
  }

  void set_label(std::string_view v, Perm p) {
    if (v.size() >= depth_) throw std::out_of_range("vertex '" + std::string(v) + "' is a leaf");
    if (p.degree() != arity) throw DegreeMismatch(arity, p.degree());
    labels_[vertex_index(v)] = std::move(p);
  }

  const std::vector<Perm>& labels() const noexcept { return labels_; }

  bool is_identity() const {
    for (const auto& l : labels_) {
      if (!l.is_identity()) return false;
    }
    return true;
  }

  // Image positions (within each level, lexicographic) of every vertex of
  // length <= depth, concatenated level by level.
  std::vector<std::size_t> vertex_images() const {
    std::vector<std::size_t> img(level_offset(depth_ + 1));
    img[0] = 0;
    for (std::size_t level = 0; level < depth_; ++level) {
      const std::size_t off = level_offset(level), next = level_offset(level + 1);
      for (std::size_t u = 0; u < level_size(level); ++u) {
        const Perm& sigma = labels_[off + u];
        for (std::size_t x = 0; x < arity; ++x) {
          img[next + u * arity + x] = img[off + u] * arity + sigma.raw(x);
        }
      }
    }
    return img;
  }

  std::string vertex_image(std::string_view v) const {
    if (v.size() > depth_) throw std::out_of_range("vertex below truncation depth");
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const Perm& sigma = labels_[vertex_index(v.substr(0, k))];
      out += static_cast<char>('1' + sigma.raw(static_cast<std::size_t>(v[k] - '1')));
    }
    return out;
  }

  Portrait then(const Portrait& q) const {
    if (depth_ != q.depth_) throw std::invalid_argument("portrait depth mismatch");
    Portrait r(depth_);
    auto img = vertex_images();
    for (std::size_t level = 0; level < depth_; ++level) {
      const std::size_t off = level_offset(level);
      for (std::size_t u = 0; u < level_size(level); ++u) {
        r.labels_[off + u] = labels_[off + u].then(q.labels_[off + img[off + u]]);
      }
    }
    return r;
  }

  Portrait inverse() const {
    Portrait r(depth_);
    auto img = vertex_images();
    // p^-1 (u^p) = p(u)^-1
    for (std::size_t level = 0; level < depth_; ++level) {
      const std::size_t off = level_offset(level);
      for (std::size_t u = 0; u < level_size(level); ++u) {
        r.labels_[off + img[off + u]] = labels_[off + u].inverse();
      }
    }
    return r;
  }

  Portrait pow(std::uint64_t k) const {
    Portrait result(depth_);
    Portrait base = *this;
    while (k > 0) {
      if (k & 1U) result = result.then(base);
      base = base.then(base);
      k >>= 1U;
    }
    return result;
  }

  // Permutation of the 5^depth leaves; leaf x_1..x_n is point
  // 1 + sum (x_i - 1) 5^{n-i}.
  Perm to_perm() const {
    auto img = vertex_images();
    const std::size_t off = level_offset(depth_);
    std::vector<Perm::point_type> images(level_size(depth_));
    for (std::size_t leaf = 0; leaf < images.size(); ++leaf) {
      images[leaf] = static_cast<Perm::point_type>(img[off + leaf] + 1);
    }
    return Perm::from_images(images);
  }

  // The automorphism induced on the subtree below v.
  Portrait section(std::string_view v) const {
    if (v.size() > depth_) throw std::out_of_range("section below truncation depth");
    Portrait r(depth_ - v.size());
    const std::size_t base_lex = vertex_index(v) - level_offset(v.size());
    for (std::size_t level = 0; level < r.depth_; ++level) {
      const std::size_t width = level_size(level);
      const std::size_t src = level_offset(v.size() + level) + base_lex * width;
      for (std::size_t u = 0; u < width; ++u) {
        r.labels_[level_offset(level) + u] = labels_[src + u];
      }
    }
    return r;
  }

  // Truncation to depth n <= depth.
  Portrait project(std::size_t n) const {
    if (n > depth_) throw std::out_of_range("projection depth exceeds portrait depth");
    Portrait r(n);
    std::copy(labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(internal_count(n)),
              r.labels_.begin());
    return r;
  }

  friend bool operator==(const Portrait&, const Portrait&) = default;

private:
  std::size_t depth_;
  std::vector<Perm> labels_;
};

inline Portrait random_portrait(std::size_t depth, Rng& rng, const std::vector<Perm>& label_pool) {
  Portrait p(depth);
  std::vector<Perm> labels;
  for (std::size_t level = 0; level < depth; ++level) {
    for (std::size_t u = 0; u < Portrait::level_size(level); ++u) {
      std::string v;
      for (std::size_t k = level, x = u; k > 0; --k) {
        v.insert(v.begin(), static_cast<char>('1' + x % Portrait::arity));
        x /= Portrait::arity;
      }
      p.set_label(v, label_pool[uniform_below(rng, label_pool.size())]);
    }
  }
  return p;
}

// Nested JSON: {"label": "(1 2 3)", "children": [...]} for each internal
// vertex; vertices on the last internal level have empty children. A depth-0
// portrait serializes as null.
namespace detail {
inline nlohmann::json portrait_node(const Portrait& p, const std::string& v) {
  nlohmann::json node;
  node["label"] = p.label(v).to_string();
  node["children"] = nlohmann::json::array();
  if (v.size() + 1 < p.depth()) {
    for (std::size_t x = 0; x < Portrait::arity; ++x) {
      node["children"].push_back(portrait_node(p, v + static_cast<char>('1' + x)));
    }
  }
  return node;
}

inline std::size_t portrait_json_depth(const nlohmann::json& node) {
  std::size_t d = 1;
  const nlohmann::json* cur = &node;
  while (!cur->at("children").empty()) {
    cur = &cur->at("children").at(0);
    ++d;
  }
  return d;
}

inline void read_portrait_node(const nlohmann::json& node, Portrait& p, const std::string& v) {
  if (!node.is_object() || !node.contains("label") || !node.contains("children")) {
    throw std::invalid_argument("portrait node needs 'label' and 'children'");
  }
  p.set_label(v, parse_perm(node.at("label").get<std::string>(), Portrait::arity));
  const auto& children = node.at("children");
  const bool last = v.size() + 1 == p.depth();
  if (last ? !children.empty() : children.size() != Portrait::arity) {
    throw std::invalid_argument("portrait JSON is not a complete 5-ary tree");
  }
  for (std::size_t x = 0; x < children.size(); ++x) {
    read_portrait_node(children[x], p, v + static_cast<char>('1' + x));
  }
}
}  // namespace detail

inline nlohmann::json portrait_to_json(const Portrait& p) {
  if (p.depth() == 0) return nullptr;
  return detail::portrait_node(p, "");
}

inline Portrait portrait_from_json(const nlohmann::json& j) {
  if (j.is_null()) return Portrait(0);
  Portrait p(detail::portrait_json_depth(j));
  detail::read_portrait_node(j, p, "");
  return p;
}

}  // namespace genus
