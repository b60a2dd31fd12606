#pragma once

#include "homspec/canonical.hpp"
#include "homspec/graph.hpp"
#include "homspec/graph6.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace homspec {

namespace detail {

/// Row-by-row generator of labeled d-regular graphs.
///
/// Rows are completed in vertex order. When row v is filled, every later
/// vertex w > v is adjacent only to earlier rows, so later vertices with the
/// same current neighborhood are interchangeable by a transposition that
/// fixes the partial graph. Only the number of neighbors taken from each such
/// class is branched on (lowest indices first), which keeps at least one
/// labeled representative of every isomorphism class. Duplicates are removed
/// afterwards by canonical form.
class RegularGenerator {
 public:
  RegularGenerator(std::size_t n, std::size_t d, bool connected_only)
      : n_(n), d_(d), connected_only_(connected_only), rows_(n, 0), deg_(n, 0) {}

  std::set<std::string> run() {
    row(0);
    return found_;
  }

 private:
  void row(Vertex v) {
    if (v == n_) {
      Graph g(n_);
      for (Vertex u = 0; u < n_; ++u)
        for (auto bits = rows_[u] >> (u + 1); bits; bits &= bits - 1)
          g.add_edge(u, u + 1 + static_cast<Vertex>(std::countr_zero(bits)));
      found_.insert(canonical_graph6(g));
      return;
    }
    std::size_t need = d_ - deg_[v];
    // Classes of open later vertices keyed by current neighborhood; keys are
    // ordered by first (lowest) member to keep the search deterministic.
    std::vector<std::vector<Vertex>> classes;
    std::map<std::uint64_t, std::size_t> index;
    for (Vertex w = v + 1; w < n_; ++w) {
      if (deg_[w] >= d_) continue;
      auto [it, inserted] = index.try_emplace(rows_[w], classes.size());
      if (inserted) classes.emplace_back();
      classes[it->second].push_back(w);
    }
    std::size_t available = 0;
    for (const auto& c : classes) available += c.size();
    if (available < need) return;
    choose(v, classes, 0, need);
  }

  void choose(Vertex v, const std::vector<std::vector<Vertex>>& classes, std::size_t c,
              std::size_t need) {
    if (need == 0) {
      if (connected_only_ && closes_component(v)) return;
      row(v + 1);
      return;
    }
    if (c == classes.size()) return;
    std::size_t remaining = 0;
    for (std::size_t k = c; k < classes.size(); ++k) remaining += classes[k].size();
    if (remaining < need) return;

    const auto& members = classes[c];
    std::size_t take_max = std::min(need, members.size());
    // Try larger takes first; order does not affect the resulting set.
    for (std::size_t take = take_max + 1; take-- > 0;) {
      for (std::size_t i = 0; i < take; ++i) link(v, members[i]);
      choose(v, classes, c + 1, need - take);
      for (std::size_t i = 0; i < take; ++i) unlink(v, members[i]);
    }
  }

  void link(Vertex a, Vertex b) {
    rows_[a] |= std::uint64_t{1} << b;
    rows_[b] |= std::uint64_t{1} << a;
    ++deg_[a];
    ++deg_[b];
  }

  void unlink(Vertex a, Vertex b) {
    rows_[a] &= ~(std::uint64_t{1} << b);
    rows_[b] &= ~(std::uint64_t{1} << a);
    --deg_[a];
    --deg_[b];
  }

  /// True when some component made only of saturated vertices is smaller
  /// than the whole graph; such a component can never grow.
  bool closes_component(Vertex v) const {
    std::uint64_t seen = 0;
    for (Vertex s = 0; s <= v; ++s) {
      if ((seen >> s) & 1u) continue;
      std::uint64_t comp = std::uint64_t{1} << s, frontier = comp;
      while (frontier) {
        std::uint64_t next = 0;
        for (auto bits = frontier; bits; bits &= bits - 1) next |= rows_[std::countr_zero(bits)];
        next &= ~comp;
        comp |= next;
        frontier = next;
      }
      seen |= comp;
      bool saturated = true;
      for (auto bits = comp; bits; bits &= bits - 1)
        if (deg_[std::countr_zero(bits)] != d_) saturated = false;
      if (saturated && static_cast<std::size_t>(std::popcount(comp)) < n_) return true;
    }
    return false;
  }

  std::size_t n_, d_;
  bool connected_only_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::size_t> deg_;
  std::set<std::string> found_;
};

}  // namespace detail

/// Canonical graph6 strings of all d-regular graphs on n vertices, one per
/// isomorphism class, in sorted order. Infeasible (n,d) gives an empty list.
inline std::vector<std::string> enumerate_regular_graph6(std::size_t n, std::size_t d,
                                                         bool connected_only) {
  if (n == 0 || n > Graph::kMaxSearchOrder || d >= n || (n * d) % 2 != 0) return {};
  if (d == 0) {
    if (connected_only && n > 1) return {};
    return {write_graph6(Graph(n))};
  }
  auto found = detail::RegularGenerator(n, d, connected_only).run();
  return {found.begin(), found.end()};
}

inline std::vector<Graph> enumerate_regular(std::size_t n, std::size_t d, bool connected_only) {
  std::vector<Graph> out;
  for (const auto& code : enumerate_regular_graph6(n, d, connected_only))
    out.push_back(parse_graph6(code));
  return out;
}

/// All d-regular graphs with n_min <= n <= n_max, ordered by n then by
/// canonical graph6.
inline std::vector<Graph> enumerate_regular_range(std::size_t n_min, std::size_t n_max, std::size_t d,
                                                  bool connected_only) {
  std::vector<Graph> out;
  for (std::size_t n = n_min; n <= n_max; ++n)
    for (auto& g : enumerate_regular(n, d, connected_only)) out.push_back(std::move(g));
  return out;
}

}  // namespace homspec
