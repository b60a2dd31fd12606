#pragma once

#include "homspec/exact.hpp"
#include "homspec/graph.hpp"
#include "homspec/partition.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace homspec {

/// Quotient H/P: parallel edges collapsed, self-loops recorded as a flag.
struct QuotientGraph {
  Graph simple;
  bool has_loop = false;
  Partition origin;
};

inline QuotientGraph quotient(const Graph& h, const Partition& p) {
  if (p.size() != h.order()) throw std::invalid_argument("partition does not match pattern order");
  QuotientGraph q{Graph(p.block_count()), false, p};
  for (auto [u, v] : h.edges()) {
    auto bu = p.block_of(u), bv = p.block_of(v);
    if (bu == bv) q.has_loop = true;
    else q.simple.add_edge(bu, bv);
  }
  return q;
}

namespace detail {

/// Backtracking counter over a fixed vertex order of the pattern. Each
/// pattern vertex is placed after as many of its neighbors as possible, so
/// its candidate set is the intersection of the placed neighbors' rows.
class MapCounter {
 public:
  MapCounter(const Graph& h, const Graph& g, bool injective) : h_(h), injective_(injective) {
    g.require_search_order();
    if (h.order() * std::bit_width(g.order()) > 63)
      throw std::overflow_error("homomorphism count may exceed 64 bits for these orders");
    for (Vertex v = 0; v < g.order(); ++v) rows_.push_back(g.row(v));
    all_ = g.all_mask();
    build_order();
  }

  std::uint64_t count() {
    image_.assign(h_.order(), 0);
    return extend(0, 0);
  }

 private:
  void build_order() {
    const std::size_t n = h_.order();
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      Vertex pick = n;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (pick == n || links[v] > links[pick] ||
            (links[v] == links[pick] && h_.degree(v) > h_.degree(pick)))
          pick = v;
      }
      placed[pick] = true;
      std::vector<std::size_t> back;
      for (std::size_t j = 0; j < order_.size(); ++j)
        if (h_.adjacent(order_[j], pick)) back.push_back(j);
      back_.push_back(std::move(back));
      order_.push_back(pick);
      for (Vertex w = 0; w < n; ++w)
        if (h_.adjacent(pick, w)) ++links[w];
    }
  }

  std::uint64_t extend(std::size_t depth, std::uint64_t used) {
    std::uint64_t candidates = all_;
    for (auto j : back_[depth]) candidates &= rows_[image_[j]];
    if (injective_) candidates &= ~used;
    if (depth + 1 == order_.size()) return static_cast<std::uint64_t>(std::popcount(candidates));
    std::uint64_t total = 0;
    for (auto bits = candidates; bits; bits &= bits - 1) {
      auto target = static_cast<Vertex>(std::countr_zero(bits));
      image_[depth] = target;
      total += extend(depth + 1, used | (std::uint64_t{1} << target));
    }
    return total;
  }

  const Graph& h_;
  bool injective_;
  std::vector<std::uint64_t> rows_;
  std::uint64_t all_ = 0;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::size_t>> back_;
  std::vector<Vertex> image_;
};

}  // namespace detail

/// Number of adjacency-preserving maps V(h) -> V(g).
inline std::uint64_t hom_count(const Graph& h, const Graph& g) {
  return detail::MapCounter(h, g, false).count();
}

/// Number of injective adjacency-preserving maps V(h) -> V(g).
inline std::uint64_t inj_count(const Graph& h, const Graph& g) {
  if (h.order() > g.order()) return 0;
  return detail::MapCounter(h, g, true).count();
}

/// hom from a quotient; a loop has no image in a simple target.
inline std::uint64_t hom_count(const QuotientGraph& q, const Graph& g) {
  return q.has_loop ? 0 : hom_count(q.simple, g);
}

inline std::uint64_t inj_count(const QuotientGraph& q, const Graph& g) {
  return q.has_loop ? 0 : inj_count(q.simple, g);
}

/// inj(h,g) = sum over partitions P of mu_P * hom(h/P, g).
inline Integer inj_via_moebius(const Graph& h, const Graph& g) {
  Integer total = 0;
  for_each_partition(h.order(), [&](const Partition& p) {
    auto q = quotient(h, p);
    if (q.has_loop) return;
    total += Integer(moebius_coeff(p)) * Integer(hom_count(q.simple, g));
  });
  return total;
}

/// hom(h,g) = sum over partitions P of inj(h/P, g).
inline Integer hom_via_inj_sum(const Graph& h, const Graph& g) {
  Integer total = 0;
  for_each_partition(h.order(), [&](const Partition& p) {
    auto q = quotient(h, p);
    if (q.has_loop) return;
    total += Integer(inj_count(q.simple, g));
  });
  return total;
}

}  // namespace homspec
