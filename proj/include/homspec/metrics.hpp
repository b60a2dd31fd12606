#pragma once

#include "homspec/graph.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

namespace homspec {

/// A length that may be infinite (girth of a forest, diameter of a
/// disconnected graph). An empty value means infinity; it compares greater
/// than every finite length.
struct Length {
  std::optional<std::size_t> value;

  static Length infinite() { return {}; }
  bool is_infinite() const { return !value.has_value(); }

  friend bool operator==(const Length&, const Length&) = default;
  friend bool operator<(const Length& a, const Length& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.value < *b.value;
  }
  friend bool operator>(const Length& a, const Length& b) { return b < a; }
};

struct GraphMetrics {
  std::vector<std::size_t> degrees;
  std::optional<std::size_t> regular_degree;
  Length girth;
  Length diameter;
  bool bipartite = false;
  std::optional<std::vector<int>> coloring;
  bool connected = false;
  bool tree = false;
};

namespace detail {

inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex root) {
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.order(), kUnseen);
  std::vector<Vertex> queue{root};
  dist[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w = 0; w < g.order(); ++w)
      if (g.adjacent(u, w) && dist[w] == kUnseen) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

}  // namespace detail

/// Length of a shortest cycle, via one BFS per root.
inline Length girth(const Graph& g) {
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::size_t best = kUnseen;
  for (Vertex root = 0; root < g.order(); ++root) {
    std::vector<std::size_t> dist(g.order(), kUnseen);
    std::vector<Vertex> parent(g.order(), g.order());
    std::vector<Vertex> queue{root};
    dist[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      if (2 * dist[u] >= best) break;
      for (Vertex w = 0; w < g.order(); ++w) {
        if (!g.adjacent(u, w) || w == parent[u]) continue;
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kUnseen) return Length::infinite();
  return Length{best};
}

inline Length diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex root = 0; root < g.order(); ++root) {
    for (auto d : detail::bfs_distances(g, root)) {
      if (d == std::numeric_limits<std::size_t>::max()) return Length::infinite();
      best = std::max(best, d);
    }
  }
  return Length{best};
}

inline GraphMetrics metrics(const Graph& g) {
  GraphMetrics m;
  for (Vertex v = 0; v < g.order(); ++v) m.degrees.push_back(g.degree(v));
  m.regular_degree = regular_degree(g);
  m.girth = girth(g);
  m.diameter = diameter(g);
  m.coloring = two_coloring(g);
  m.bipartite = m.coloring.has_value();
  m.connected = is_connected(g);
  m.tree = m.connected && g.edge_count() + 1 == g.order();
  return m;
}

}  // namespace homspec
