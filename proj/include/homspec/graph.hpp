#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homspec {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph stored as adjacency bit-rows.
///
/// Rows are packed into 64-bit words. Counting, canonical labeling and
/// enumeration work on graphs of at most kMaxSearchOrder vertices, where a
/// row is a single word; larger graphs are supported for I/O only.
class Graph {
 public:
  static constexpr std::size_t kMaxSearchOrder = 64;

  explicit Graph(std::size_t order) : order_(order), words_((order + 63) / 64) {
    if (order == 0) throw std::invalid_argument("graph order must be at least 1");
    bits_.assign(order_ * words_, 0);
  }

  static Graph from_edges(std::size_t order, const std::vector<Edge>& edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  static Graph from_edges(std::size_t order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::vector<Edge>(edges));
  }

  std::size_t order() const noexcept { return order_; }

  bool adjacent(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }

  /// Adds edge uv; rejects loops. Adding an existing edge is a no-op.
  void add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("loops are not allowed in a simple graph");
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }

  void remove_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    bits_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    bits_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
  }

  std::size_t degree(Vertex v) const {
    check(v);
    std::size_t deg = 0;
    for (std::size_t w = 0; w < words_; ++w) deg += std::popcount(bits_[v * words_ + w]);
    return deg;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (auto word : bits_) twice += std::popcount(word);
    return twice / 2;
  }

  /// Edges (u,v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order_; ++u)
      for (Vertex v = u + 1; v < order_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w = 0; w < order_; ++w)
      if (adjacent(v, w)) out.push_back(w);
    return out;
  }

  /// Neighborhood of v as a single word. Requires order() <= 64.
  std::uint64_t row(Vertex v) const {
    require_search_order();
    check(v);
    return bits_[v];
  }

  /// Mask with the low order() bits set. Requires order() <= 64.
  std::uint64_t all_mask() const {
    require_search_order();
    return order_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order_) - 1;
  }

  void require_search_order() const {
    if (order_ > kMaxSearchOrder)
      throw std::length_error("graph has " + std::to_string(order_) +
                              " vertices; search paths support at most 64");
  }

  /// Graph with vertex perm[i] of *this placed at position i.
  Graph relabeled(const std::vector<Vertex>& perm) const {
    if (perm.size() != order_) throw std::invalid_argument("permutation size mismatch");
    Graph out(order_);
    for (Vertex i = 0; i < order_; ++i)
      for (Vertex j = i + 1; j < order_; ++j)
        if (adjacent(perm[i], perm[j])) out.add_edge(i, j);
    return out;
  }

  /// Induced subgraph on the given vertices, in the given order.
  Graph induced(const std::vector<Vertex>& vertices) const {
    Graph out(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j)
        if (adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check(Vertex v) const {
    if (v >= order_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }

  std::size_t order_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Degree d when every vertex has degree d.
inline std::optional<std::size_t> regular_degree(const Graph& g) {
  std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

/// Vertex sets of the connected components, each sorted, ordered by smallest
/// member.
inline std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < members.size(); ++head)
      for (Vertex w = 0; w < g.order(); ++w)
        if (comp[w] < 0 && g.adjacent(members[head], w)) {
          comp[w] = comp[s];
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

/// Proper 2-coloring if one exists.
inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex w = 0; w < g.order(); ++w) {
        if (!g.adjacent(u, w)) continue;
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

inline bool is_tree(const Graph& g) {
  return g.edge_count() + 1 == g.order() && is_connected(g);
}

}  // namespace homspec
