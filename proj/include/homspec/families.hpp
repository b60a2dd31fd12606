#pragma once

#include "homspec/graph.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace homspec {

inline Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// Complete multipartite graph with the given part sizes, parts laid out
/// consecutively.
inline Graph complete_multipartite(const std::vector<std::size_t>& parts) {
  if (parts.empty()) throw std::invalid_argument("complete_multipartite needs at least one part");
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] == 0) throw std::invalid_argument("multipartite part sizes must be positive");
    part_of.insert(part_of.end(), parts[p], p);
  }
  Graph g(part_of.size());
  for (Vertex u = 0; u < part_of.size(); ++u)
    for (Vertex v = u + 1; v < part_of.size(); ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("complete_bipartite needs both sides nonempty");
  return complete_multipartite({a, b});
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

/// Path on n vertices.
inline Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

/// Star with `leaves` leaves around center 0.
inline Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

/// Center 0 with one path of each given length hanging off it.
inline Graph spider(const std::vector<std::size_t>& legs) {
  std::size_t n = 1 + std::accumulate(legs.begin(), legs.end(), std::size_t{0});
  Graph g(n);
  Vertex next = 1;
  for (auto len : legs) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i, ++next) {
      g.add_edge(prev, next);
      prev = next;
    }
  }
  return g;
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  return g;
}

/// Circulant C_n(S): i ~ i±s (mod n) for every jump s in S.
inline Graph circulant(std::size_t n, const std::vector<std::size_t>& jumps) {
  Graph g(n);
  for (auto s : jumps) {
    if (s % n == 0) throw std::invalid_argument("circulant jump must be nonzero mod n");
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + s) % n);
  }
  return g;
}

inline Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
  return out;
}

inline Graph copies(const Graph& g, std::size_t t) {
  if (t == 0) throw std::invalid_argument("need at least one copy");
  Graph out = g;
  for (std::size_t i = 1; i < t; ++i) out = disjoint_union(out, g);
  return out;
}

/// Cartesian product; vertex (x,y) is x*|B| + y.
inline Graph cartesian_product(const Graph& a, const Graph& b) {
  const std::size_t nb = b.order();
  Graph out(a.order() * nb);
  for (Vertex x = 0; x < a.order(); ++x)
    for (Vertex y = 0; y < nb; ++y) {
      for (Vertex y2 = y + 1; y2 < nb; ++y2)
        if (b.adjacent(y, y2)) out.add_edge(x * nb + y, x * nb + y2);
      for (Vertex x2 = x + 1; x2 < a.order(); ++x2)
        if (a.adjacent(x, x2)) out.add_edge(x * nb + y, x2 * nb + y);
    }
  return out;
}

/// Replaces every vertex by an independent set of size t; blobs of adjacent
/// vertices are joined completely.
inline Graph blowup(const Graph& base, std::size_t t) {
  if (t == 0) throw std::invalid_argument("blowup factor must be positive");
  Graph out(base.order() * t);
  for (auto [u, v] : base.edges())
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) out.add_edge(u * t + i, v * t + j);
  return out;
}

/// Bipartite double cover: x -> x, x' -> x + n; each edge xy lifts to xy' and x'y.
inline Graph bipartite_double_cover(const Graph& g) {
  const std::size_t n = g.order();
  Graph out(2 * n);
  for (auto [x, y] : g.edges()) {
    out.add_edge(x, y + n);
    out.add_edge(x + n, y);
  }
  return out;
}

namespace detail {

class FamilyParser {
 public:
  explicit FamilyParser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = graph();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  using Arg = std::variant<std::size_t, Graph>;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("family expression '" + std::string(text_) + "': " + why +
                                " (offset " + std::to_string(pos_) + ")");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::vector<Arg> args() {
    std::vector<Arg> out;
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '(') return out;
    ++pos_;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ')') {
      ++pos_;
      return out;
    }
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        out.emplace_back(static_cast<std::size_t>(std::stoul(word())));
      } else {
        out.emplace_back(graph());
      }
      skip_ws();
      if (pos_ >= text_.size()) fail("unterminated argument list");
      if (text_[pos_] == ')') {
        ++pos_;
        return out;
      }
      if (text_[pos_] != ',') fail("expected ',' or ')'");
      ++pos_;
    }
  }

  static std::vector<std::size_t> numbers(const std::vector<Arg>& a, std::size_t from = 0) {
    std::vector<std::size_t> out;
    for (std::size_t i = from; i < a.size(); ++i) {
      if (!std::holds_alternative<std::size_t>(a[i]))
        throw std::invalid_argument("expected integer argument");
      out.push_back(std::get<std::size_t>(a[i]));
    }
    return out;
  }

  static const Graph& graph_arg(const std::vector<Arg>& a, std::size_t i) {
    if (i >= a.size() || !std::holds_alternative<Graph>(a[i]))
      throw std::invalid_argument("expected graph argument");
    return std::get<Graph>(a[i]);
  }

  Graph graph() {
    std::string name = word();
    if (name.empty()) fail("expected a family name");
    auto a = args();
    auto nums = [&](std::size_t count) {
      auto v = numbers(a);
      if (v.size() != count) fail(name + " expects " + std::to_string(count) + " integer(s)");
      return v;
    };
    // Shorthands K4, C5, P4.
    if (a.empty() && name.size() > 1 && std::isdigit(static_cast<unsigned char>(name[1]))) {
      std::size_t n = std::stoul(name.substr(1));
      switch (name[0]) {
        case 'K': return complete(n);
        case 'C': return cycle(n);
        case 'P': return path(n);
        default: break;
      }
    }
    if (name == "complete") return complete(nums(1)[0]);
    if (name == "bipartite") {
      auto v = nums(2);
      return complete_bipartite(v[0], v[1]);
    }
    if (name == "multipartite") return complete_multipartite(numbers(a));
    if (name == "cycle") return cycle(nums(1)[0]);
    if (name == "path") return path(nums(1)[0]);
    if (name == "star") return star(nums(1)[0]);
    if (name == "spider") return spider(numbers(a));
    if (name == "petersen") return petersen();
    if (name == "octahedron") return complete_multipartite({2, 2, 2});
    if (name == "circulant") {
      auto v = numbers(a);
      if (v.size() < 2) fail("circulant expects n and at least one jump");
      return circulant(v[0], std::vector<std::size_t>(v.begin() + 1, v.end()));
    }
    if (name == "complement") return complement(graph_arg(a, 0));
    if (name == "union") {
      if (a.empty()) fail("union expects graphs");
      Graph g = graph_arg(a, 0);
      for (std::size_t i = 1; i < a.size(); ++i) g = disjoint_union(g, graph_arg(a, i));
      return g;
    }
    if (name == "copies") {
      if (a.size() != 2 || !std::holds_alternative<std::size_t>(a[0])) fail("copies expects (t, graph)");
      return copies(graph_arg(a, 1), std::get<std::size_t>(a[0]));
    }
    if (name == "product") return cartesian_product(graph_arg(a, 0), graph_arg(a, 1));
    if (name == "blowup") {
      if (a.size() != 2 || !std::holds_alternative<std::size_t>(a[1])) fail("blowup expects (graph, t)");
      return blowup(graph_arg(a, 0), std::get<std::size_t>(a[1]));
    }
    if (name == "cover") return bipartite_double_cover(graph_arg(a, 0));
    fail("unknown family '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Builds a graph from a family expression such as "complement(union(K3,C5))",
/// "circulant(7,2,3)", "product(K3,K3)", "copies(2,petersen)" or
/// "multipartite(3,3,3)".
inline Graph construct_family(std::string_view expression) {
  return detail::FamilyParser(expression).parse();
}

}  // namespace homspec
