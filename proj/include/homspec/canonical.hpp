#pragma once

#include "homspec/graph.hpp"
#include "homspec/graph6.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace homspec {

struct CanonicalForm {
  /// labeling[i] is the original vertex placed at canonical position i.
  std::vector<Vertex> labeling;
  std::string graph6;
};

namespace detail {

/// Individualization-refinement search for a canonical labeling.
///
/// Each node holds an ordered partition refined to equitability; its children
/// individualize one vertex of the first smallest non-singleton cell. Among
/// the discrete leaves the labeling with the lexicographically smallest
/// graph6 bit-string wins. Subtrees are pruned when a child vertex is a twin
/// of, or in the same orbit (under automorphisms fixing the node's
/// individualized vertices) as, an already explored child.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    g.require_search_order();
    for (Vertex v = 0; v < n_; ++v) rows_.push_back(g.row(v));
  }

  CanonicalForm run() {
    std::vector<std::uint64_t> cells{g_.all_mask()};
    std::vector<Vertex> fixed;
    refine(cells);
    search(cells, fixed);
    return {best_labeling_, best_};
  }

 private:
  using Cells = std::vector<std::uint64_t>;

  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      Cells next;
      next.reserve(n_);
      for (auto cell : cells) {
        if (std::popcount(cell) == 1) {
          next.push_back(cell);
          continue;
        }
        // Signature of v: neighbor counts into every cell, in cell order.
        std::vector<std::pair<std::vector<unsigned>, Vertex>> sig;
        for (auto bits = cell; bits; bits &= bits - 1) {
          Vertex v = static_cast<Vertex>(std::countr_zero(bits));
          std::vector<unsigned> counts(cells.size());
          for (std::size_t c = 0; c < cells.size(); ++c)
            counts[c] = static_cast<unsigned>(std::popcount(rows_[v] & cells[c]));
          sig.emplace_back(std::move(counts), v);
        }
        std::sort(sig.begin(), sig.end());
        std::uint64_t part = 0;
        for (std::size_t i = 0; i < sig.size(); ++i) {
          if (i > 0 && sig[i].first != sig[i - 1].first) {
            next.push_back(part);
            part = 0;
            changed = true;
          }
          part |= std::uint64_t{1} << sig[i].second;
        }
        next.push_back(part);
      }
      cells = std::move(next);
    }
  }

  bool twins(Vertex a, Vertex b) const {
    std::uint64_t mask = ~((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
    return (rows_[a] & mask) == (rows_[b] & mask);
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> labeling;
    labeling.reserve(n_);
    for (auto c : cells) labeling.push_back(static_cast<Vertex>(std::countr_zero(c)));
    std::string code = write_graph6(g_.relabeled(labeling));
    if (best_.empty() || code < best_) {
      best_ = code;
      best_labeling_ = labeling;
      if (first_.empty()) {
        first_ = code;
        first_labeling_ = labeling;
      }
      return;
    }
    const std::vector<Vertex>* match = nullptr;
    if (code == best_) match = &best_labeling_;
    else if (code == first_) match = &first_labeling_;
    if (match) {
      // Same relabeled graph: labeling[i] -> (*match)[i] is an automorphism.
      std::vector<Vertex> gamma(n_);
      for (Vertex i = 0; i < n_; ++i) gamma[labeling[i]] = (*match)[i];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  Vertex orbit_root(std::vector<Vertex>& parent, Vertex v) const {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  void search(const Cells& cells, std::vector<Vertex>& fixed) {
    std::size_t target = cells.size();
    int target_size = 65;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      int size = std::popcount(cells[c]);
      if (size > 1 && size < target_size) {
        target = c;
        target_size = size;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }

    std::vector<Vertex> explored;
    for (auto bits = cells[target]; bits; bits &= bits - 1) {
      Vertex v = static_cast<Vertex>(std::countr_zero(bits));
      bool redundant = false;
      for (Vertex e : explored)
        if (twins(e, v)) redundant = true;
      if (!redundant && !explored.empty() && in_explored_orbit(v, explored, fixed)) redundant = true;
      if (redundant) continue;

      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c == target) {
          child.push_back(std::uint64_t{1} << v);
          child.push_back(cells[c] & ~(std::uint64_t{1} << v));
        } else {
          child.push_back(cells[c]);
        }
      }
      refine(child);
      fixed.push_back(v);
      search(child, fixed);
      fixed.pop_back();
      explored.push_back(v);
    }
  }

  bool in_explored_orbit(Vertex v, const std::vector<Vertex>& explored,
                         const std::vector<Vertex>& fixed) const {
    if (automorphisms_.empty()) return false;
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](Vertex f) { return gamma[f] == f; });
      if (!fixes) continue;
      any = true;
      for (Vertex x = 0; x < n_; ++x) {
        Vertex a = orbit_root(parent, x), b = orbit_root(parent, gamma[x]);
        if (a != b) parent[a] = b;
      }
    }
    if (!any) return false;
    Vertex root = orbit_root(parent, v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](Vertex e) { return orbit_root(parent, e) == root; });
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::uint64_t> rows_;
  std::string best_, first_;
  std::vector<Vertex> best_labeling_, first_labeling_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace detail

/// Canonical labeling: isomorphic graphs get identical graph6 strings.
inline CanonicalForm canonical_form(const Graph& g) { return detail::CanonicalSearch(g).run(); }

inline std::string canonical_graph6(const Graph& g) { return canonical_form(g).graph6; }

inline Graph canonical_graph(const Graph& g) { return parse_graph6(canonical_graph6(g)); }

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_graph6(a) == canonical_graph6(b);
}

}  // namespace homspec
