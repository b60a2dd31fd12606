#pragma once

#include "homspec/bivar_poly.hpp"
#include "homspec/canonical.hpp"
#include "homspec/exact.hpp"
#include "homspec/families.hpp"
#include "homspec/graph.hpp"
#include "homspec/graph6.hpp"
#include "homspec/homomorphism.hpp"
#include "homspec/parallel.hpp"
#include "homspec/partition.hpp"
#include "homspec/spectral.hpp"

#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homspec {

enum class Parity { bipartite, non_bipartite };

inline const char* to_string(Parity p) { return p == Parity::bipartite ? "bipartite" : "non-bipartite"; }

/// Spanning tree T of a connected pattern together with the cycles closed by
/// the edges outside it.
struct CycleProfile {
  std::vector<Edge> tree_edges;
  std::vector<Edge> extra_edges;
  std::vector<int> cycle_lengths;  // parallel to extra_edges
  std::map<int, std::size_t> c;    // cycle length -> number of extra edges
};

/// BFS tree rooted at vertex 0; neighbors are visited in increasing order.
inline CycleProfile cycle_profile(const Graph& h) {
  if (!is_connected(h)) throw std::invalid_argument("cycle profile needs a connected pattern");
  const std::size_t n = h.order();
  std::vector<Vertex> parent(n, n);
  std::vector<int> depth(n, -1);
  std::queue<Vertex> queue;
  depth[0] = 0;
  queue.push(0);
  CycleProfile prof;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : h.neighbors(u)) {
      if (depth[w] >= 0) continue;
      depth[w] = depth[u] + 1;
      parent[w] = u;
      prof.tree_edges.emplace_back(std::min(u, w), std::max(u, w));
      queue.push(w);
    }
  }
  std::sort(prof.tree_edges.begin(), prof.tree_edges.end());
  for (auto [u, v] : h.edges()) {
    if (parent[u] == v || parent[v] == u) continue;
    Vertex a = u, b = v;
    int len = 1;
    while (a != b) {
      if (depth[a] >= depth[b]) a = parent[a];
      else b = parent[b];
      ++len;
    }
    prof.extra_edges.emplace_back(u, v);
    prof.cycle_lengths.push_back(len);
    ++prof.c[len];
  }
  return prof;
}

/// Exact Σ_λ-polynomial for hom(h, G) when h is a tree (d^(n-1)) or connected
/// unicyclic with cycle length k (λ^k d^(n-k)).
inline BivarPoly unicyclic_hom_poly(const Graph& h) {
  if (!is_connected(h)) throw std::invalid_argument("pattern must be connected");
  const int n = static_cast<int>(h.order());
  const auto m = h.edge_count();
  if (m + 1 == h.order()) return BivarPoly::monomial(0, n - 1);
  if (m != h.order()) throw std::invalid_argument("pattern has more than one cycle");
  int k = cycle_profile(h).cycle_lengths.front();
  return BivarPoly::monomial(k, n - k);
}

/// q with -hom(h, G) <= Σ_λ q(λ, d) for every d-regular G:
/// q = (m - n) d^(n-1) - Σ_k c_k λ^k d^(n-k).
inline BivarPoly neg_hom_majorant(const Graph& h) {
  if (is_tree(h)) throw std::invalid_argument("tree pattern: use unicyclic_hom_poly");
  auto prof = cycle_profile(h);
  const int n = static_cast<int>(h.order());
  const int m = static_cast<int>(h.edge_count());
  BivarPoly q = BivarPoly::monomial(0, n - 1, m - n);
  for (const auto& [k, count] : prof.c) q.add({k, n - k}, -Rational(static_cast<long long>(count)));
  return q;
}

/// T ∪ {e} for the extra edge e closing the shortest odd cycle (non-bipartite)
/// or the shortest cycle (bipartite); ties go to the smaller edge.
inline Graph choose_unicyclic_subgraph(const Graph& h, Parity parity) {
  if (is_tree(h)) throw std::invalid_argument("tree pattern has no cycle");
  auto prof = cycle_profile(h);
  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < prof.extra_edges.size(); ++i) {
    int len = prof.cycle_lengths[i];
    if (parity == Parity::non_bipartite && len % 2 == 0) continue;
    if (!pick || len < prof.cycle_lengths[*pick]) pick = i;
  }
  if (!pick) throw std::invalid_argument("bipartite pattern has no odd cycle");
  Graph out = Graph::from_edges(h.order(), prof.tree_edges);
  out.add_edge(prof.extra_edges[*pick].first, prof.extra_edges[*pick].second);
  return out;
}

/// One inequality or identity used while building a bound. Relation is "="
/// for exact identities and "<=" for upper bounds. sharp_at_clique records
/// whether the step is tight at the anchor clique for d = |V(pattern)|.
struct BoundStep {
  int depth = 0;
  std::string rule;
  std::string pattern;
  Integer multiplicity = 1;
  std::string relation;
  bool sharp_at_clique = true;
};

/// Exact gap Σ_λ p(λ,d) - inj(H, clique) at K_{d+1} or K_{d,d}.
struct EqualityEntry {
  std::size_t d = 0;
  std::string clique;
  Rational bound_sum;
  Integer inj;
  Rational gap;
};

struct BoundCertificate {
  Graph pattern{1};
  Graph unicyclic{1};
  BivarPoly poly;
  Parity parity = Parity::non_bipartite;
  int anchor_k = 0;
  bool exact = false;
  std::vector<BoundStep> steps;
  std::vector<EqualityEntry> equality_report;
};

enum class ParityMode { automatic, bipartite };

inline constexpr std::size_t kMaxBoundOrder = 8;

inline Graph anchor_clique(Parity parity, std::size_t d) {
  return parity == Parity::bipartite ? complete_bipartite(d, d) : complete(d + 1);
}

inline std::string anchor_clique_name(Parity parity, std::size_t d) {
  return parity == Parity::bipartite ? "K_{" + std::to_string(d) + "," + std::to_string(d) + "}"
                                     : "K_" + std::to_string(d + 1);
}

namespace detail {

inline bool tree_or_unicyclic(const Graph& g) { return g.edge_count() <= g.order(); }

struct QuotientClass {
  Graph graph{1};
  Integer count = 0;
  Integer moebius = 0;
};

/// Loop-free quotients of x grouped by canonical form. In the bipartite
/// branch non-bipartite quotients are skipped: they have no homomorphism
/// into a bipartite host.
inline std::map<std::string, QuotientClass> quotient_census(const Graph& x, bool bipartite_branch,
                                                            bool include_trivial) {
  std::map<std::string, QuotientClass> out;
  for_each_partition(x.order(), [&](const Partition& p) {
    if (p.trivial() && !include_trivial) return;
    auto q = quotient(x, p);
    if (q.has_loop) return;
    if (bipartite_branch && !is_bipartite(q.simple)) return;
    auto code = canonical_graph6(q.simple);
    auto [it, inserted] = out.try_emplace(code);
    if (inserted) it->second.graph = parse_graph6(code);
    it->second.count += 1;
    it->second.moebius += moebius_coeff(p);
  });
  return out;
}

/// Recursive builder; one instance per top-level call so memo tables are
/// never shared between threads.
class BoundBuilder {
 public:
  explicit BoundBuilder(std::size_t reference_d) : d_ref_(reference_d) {}

  BoundCertificate build(const Graph& h, ParityMode mode, int depth) {
    if (!is_connected(h)) throw std::invalid_argument("pattern must be connected");
    if (h.order() > kMaxBoundOrder)
      throw std::length_error("bound construction supports patterns with at most 8 vertices");
    if (is_tree(h)) throw std::invalid_argument("tree pattern: the bound construction needs a cycle");
    const bool bip = is_bipartite(h);
    if (mode == ParityMode::bipartite && !bip)
      throw std::invalid_argument("bipartite branch requested for a non-bipartite pattern");

    BoundCertificate cert;
    cert.pattern = h;
    cert.parity = bip ? Parity::bipartite : Parity::non_bipartite;
    cert.unicyclic = choose_unicyclic_subgraph(h, cert.parity);
    const Graph& hp = cert.unicyclic;
    cert.anchor_k = cycle_profile(hp).cycle_lengths.front();
    clique_ = anchor_clique(cert.parity, d_ref_);
    depth_ = depth;
    steps_ = &cert.steps;

    if (!(hp == h))
      step("drop-edges", hp, 1, "<=", inj_count(h, clique_) == inj_count(hp, clique_));

    if (auto exact = moebius_exact(hp, bip)) {
      cert.poly = *exact;
      cert.exact = hp == h;
      return cert;
    }

    const int n = static_cast<int>(hp.order());
    cert.poly = BivarPoly::monomial(cert.anchor_k, n - cert.anchor_k);
    step("hom-unicyclic", hp, 1, "=", true);
    for (const auto& [code, cls] : quotient_census(hp, bip, false)) {
      cert.poly += neg_hom_term(cls.graph) * Rational(cls.count);
      for (const auto& [code2, cls2] : quotient_census(cls.graph, bip, false))
        cert.poly += inj_upper(cls2.graph, bip, cls.count * cls2.count);
    }
    return cert;
  }

 private:
  /// Σ_P μ_P hom(H'/P) when every loop-free quotient is a tree or unicyclic.
  std::optional<BivarPoly> moebius_exact(const Graph& hp, bool bip) {
    auto census = quotient_census(hp, bip, true);
    for (const auto& [code, cls] : census)
      if (!tree_or_unicyclic(cls.graph)) return std::nullopt;
    // The bipartite filter is only an identity on bipartite hosts, so the
    // expansion counts as exact only when it removed nothing.
    if (bip && census.size() != quotient_census(hp, false, true).size()) return std::nullopt;
    BivarPoly p;
    for (const auto& [code, cls] : census) {
      if (cls.moebius == 0) continue;
      p += unicyclic_hom_poly(cls.graph) * Rational(cls.moebius);
      step("moebius-exact", cls.graph, cls.moebius, "=", true);
    }
    return p;
  }

  /// Upper bound for -hom(x, G): exact for trees and unicyclic x.
  BivarPoly neg_hom_term(const Graph& x) {
    if (tree_or_unicyclic(x)) {
      step("hom-exact", x, -1, "=", true);
      return unicyclic_hom_poly(x) * Rational(-1);
    }
    auto q = neg_hom_majorant(x);
    Rational at_clique = eval_poly_sum(q, clique_, clique_degree());
    step("neg-hom-majorant", x, -1, "<=", at_clique == -Rational(hom_count(x, clique_)));
    return q;
  }

  /// Upper bound for mult * inj(y, G). Steps of a sub-bound are listed once,
  /// one level deeper, right after the first step that uses it.
  BivarPoly inj_upper(const Graph& y, bool bip, const Integer& mult) {
    const auto key = write_graph6(y) + (bip ? "|b" : "|n");
    std::vector<BoundStep> sub_steps;
    auto it = memo_.find(key);
    if (it == memo_.end()) {
      Memo memo{BivarPoly{}, "", "<="};
      if (!is_tree(y)) {
        BoundBuilder sub(d_ref_);
        sub.memo_ = memo_;
        auto cert = sub.build(y, bip ? ParityMode::bipartite : ParityMode::automatic, depth_ + 1);
        memo_.insert(sub.memo_.begin(), sub.memo_.end());
        memo.bound = cert.poly;
        memo.rule = cert.exact ? "inj-exact" : "inj-recursive";
        if (cert.exact) memo.relation = "=";
        sub_steps = std::move(cert.steps);
      } else if (bip) {
        auto* saved = steps_;
        steps_ = &sub_steps;
        ++depth_;
        memo.bound = tree_expansion(y);
        --depth_;
        steps_ = saved;
        memo.rule = "inj-tree-expansion";
      } else {
        memo.bound = BivarPoly::monomial(0, static_cast<int>(y.order()) - 1);
        memo.rule = "inj-le-hom-tree";
      }
      it = memo_.emplace(key, std::move(memo)).first;
    }
    const auto& memo = it->second;
    Rational at_clique = eval_poly_sum(memo.bound, clique_, clique_degree());
    step(memo.rule, y, mult, memo.relation, at_clique == Rational(inj_count(y, clique_)));
    steps_->insert(steps_->end(), sub_steps.begin(), sub_steps.end());
    return memo.bound * Rational(mult);
  }

  /// inj(y) = hom(y) - Σ_P hom(y/P) + Σ_P Σ_Q inj(y/P/Q) for a tree y, with
  /// only bipartite quotients kept.
  BivarPoly tree_expansion(const Graph& y) {
    BivarPoly p = BivarPoly::monomial(0, static_cast<int>(y.order()) - 1);
    step("hom-exact", y, 1, "=", true);
    for (const auto& [code, cls] : quotient_census(y, true, false)) {
      p += neg_hom_term(cls.graph) * Rational(cls.count);
      for (const auto& [code2, cls2] : quotient_census(cls.graph, true, false))
        p += inj_upper(cls2.graph, true, cls.count * cls2.count);
    }
    return p;
  }

  std::size_t clique_degree() const { return *regular_degree(clique_); }

  void step(std::string rule, const Graph& g, const Integer& mult, std::string relation, bool sharp) {
    steps_->push_back({depth_, std::move(rule), write_graph6(g), mult, std::move(relation), sharp});
  }

  struct Memo {
    BivarPoly bound;
    std::string rule;
    std::string relation;
  };

  std::size_t d_ref_;
  Graph clique_{1};
  int depth_ = 0;
  std::vector<BoundStep>* steps_ = nullptr;
  std::map<std::string, Memo> memo_;
};

}  // namespace detail

/// Builds p_H with inj(H, G) <= Σ_{λ∈σ(G)} p_H(λ, d) for d-regular G, and
/// reports the exact gap at the anchor clique for d = |V(H)| .. |V(H)|+4.
inline BoundCertificate build_bound_poly(const Graph& h, ParityMode mode = ParityMode::automatic) {
  const std::size_t n = h.order();
  auto cert = detail::BoundBuilder(std::max<std::size_t>(n, 2)).build(h, mode, 0);
  for (std::size_t d = std::max<std::size_t>(n, 2); d <= n + 4; ++d) {
    Graph clique = anchor_clique(cert.parity, d);
    EqualityEntry e{d, anchor_clique_name(cert.parity, d), eval_poly_sum(cert.poly, clique, d),
                    Integer(inj_count(h, clique)), 0};
    e.gap = e.bound_sum - Rational(e.inj);
    cert.equality_report.push_back(std::move(e));
  }
  return cert;
}

/// Checks the shape of p_H: total degree |V(H)| with the single top monomial
/// λ^k d^(n-k), even λ-exponents for bipartite parity, odd k otherwise.
inline bool has_bound_shape(const BoundCertificate& cert) {
  const int n = static_cast<int>(cert.pattern.order());
  const Monomial anchor{cert.anchor_k, n - cert.anchor_k};
  if (cert.poly.degree() != n || cert.poly.coefficient(anchor) != 1) return false;
  auto rest = cert.poly - BivarPoly::monomial(anchor.lambda, anchor.d);
  if (rest.degree() >= n) return false;
  if (cert.parity == Parity::bipartite) return cert.poly.even_in_lambda();
  return cert.anchor_k % 2 == 1;
}

struct GapEntry {
  std::string graph6;
  Rational bound_sum;
  Integer inj;
  Rational gap;
};

struct VerifyReport {
  std::size_t d = 0;
  std::vector<GapEntry> gaps;
  GapEntry anchor;
  std::size_t negative = 0;

  Rational min_gap() const {
    Rational best = anchor.gap;
    for (const auto& g : gaps) best = std::min(best, g.gap);
    return best;
  }
};

class CertificateRejected : public std::runtime_error {
 public:
  explicit CertificateRejected(VerifyReport report)
      : std::runtime_error("bound certificate rejected: negative gap on " +
                           std::to_string(report.negative) + " graph(s)"),
        report_(std::move(report)) {}
  const VerifyReport& report() const noexcept { return report_; }

 private:
  VerifyReport report_;
};

/// Exact gaps Σ_λ p(λ,d) - inj(H, g) over a corpus of d-regular graphs.
/// Throws CertificateRejected if any gap is negative.
inline VerifyReport verify_bound(const BoundCertificate& cert, const std::vector<Graph>& corpus, std::size_t d) {
  for (const auto& g : corpus)
    if (regular_degree(g) != d)
      throw std::invalid_argument("corpus graph " + write_graph6(g) + " is not " + std::to_string(d) + "-regular");
  auto gap_of = [&](const Graph& g) {
    GapEntry e{write_graph6(g), eval_poly_sum(cert.poly, g, d), Integer(inj_count(cert.pattern, g)), 0};
    e.gap = e.bound_sum - Rational(e.inj);
    return e;
  };
  VerifyReport report;
  report.d = d;
  report.gaps = parallel_map(corpus, gap_of);
  report.anchor = gap_of(anchor_clique(cert.parity, d));
  for (const auto& e : report.gaps)
    if (e.gap < 0) ++report.negative;
  if (report.anchor.gap < 0) ++report.negative;
  if (report.negative > 0) throw CertificateRejected(std::move(report));
  return report;
}

}  // namespace homspec
