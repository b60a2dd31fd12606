#pragma once

#include "homspec/canonical.hpp"
#include "homspec/enumerate.hpp"
#include "homspec/exact.hpp"
#include "homspec/families.hpp"
#include "homspec/graph6.hpp"
#include "homspec/homomorphism.hpp"
#include "homspec/metrics.hpp"
#include "homspec/parallel.hpp"
#include "homspec/spectral.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace homspec {

/// t_inj(H, G) = inj(H, G) / |V(G)|.
inline Rational inj_density(const Graph& h, const Graph& g) {
  return Rational(Integer(inj_count(h, g)), Integer(g.order()));
}

/// Human name for a few well-known graphs, matched up to isomorphism.
inline std::optional<std::string> known_graph_name(const Graph& g) {
  static const std::map<std::string, std::string> table = [] {
    std::map<std::string, std::string> t;
    auto put = [&](const Graph& x, std::string name) { t.emplace(canonical_graph6(x), std::move(name)); };
    put(petersen(), "Petersen");
    put(construct_family("octahedron"), "octahedron");
    put(construct_family("product(K3,K3)"), "K3xK3");
    put(construct_family("product(K3,K2)"), "prism");
    put(construct_family("cover(K4)"), "cube");
    for (std::size_t n = 2; n <= 12; ++n) put(complete(n), "K" + std::to_string(n));
    for (std::size_t n = 2; n <= 8; ++n) put(complete_bipartite(n, n), "K" + std::to_string(n) + "," + std::to_string(n));
    for (std::size_t n = 4; n <= 16; ++n) put(cycle(n), "C" + std::to_string(n));
    return t;
  }();
  if (g.order() > Graph::kMaxSearchOrder) return std::nullopt;
  auto it = table.find(canonical_graph6(g));
  if (it == table.end()) return std::nullopt;
  return it->second;
}

struct DensityEntry {
  std::string graph6;
  std::size_t order = 0;
  Integer inj;
  Rational density;
  std::optional<std::string> name;
};

struct SearchReport {
  std::string pattern;
  std::size_t d = 0;
  std::size_t n_min = 0, n_max = 0;
  bool connected_only = true;
  std::string corpus = "enumerated";
  Rational best_density;
  std::vector<DensityEntry> maximizers;
  std::optional<Rational> runner_up_density;
  std::vector<DensityEntry> per_graph;
  std::size_t spot_checks = 0;
};

inline constexpr std::uint64_t kDefaultSpotCheckSeed = 20240917;

namespace detail {

/// Exact densities for every graph, then maximizers and runner-up. About
/// 10% of the graphs (at least one) are re-counted through the Möbius sum.
inline void fill_search(SearchReport& report, const Graph& h, const std::vector<Graph>& graphs,
                        std::uint64_t seed) {
  if (graphs.empty()) throw std::invalid_argument("search range contains no graphs");
  report.pattern = write_graph6(h);
  report.per_graph = parallel_map(graphs, [&](const Graph& g) {
    return DensityEntry{write_graph6(g), g.order(), Integer(inj_count(h, g)), inj_density(h, g), std::nullopt};
  });

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> indices(graphs.size());
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
  std::shuffle(indices.begin(), indices.end(), rng);
  indices.resize(std::max<std::size_t>(1, graphs.size() / 10));
  for (auto i : indices)
    if (inj_via_moebius(h, graphs[i]) != report.per_graph[i].inj)
      throw std::logic_error("inj count disagrees with the Moebius sum on " + report.per_graph[i].graph6);
  report.spot_checks = indices.size();

  report.best_density = report.per_graph.front().density;
  for (const auto& e : report.per_graph) report.best_density = std::max(report.best_density, e.density);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& e = report.per_graph[i];
    if (e.density == report.best_density) {
      report.maximizers.push_back(e);
      report.maximizers.back().name = known_graph_name(graphs[i]);
    } else if (!report.runner_up_density || e.density > *report.runner_up_density) {
      report.runner_up_density = e.density;
    }
  }
}

}  // namespace detail

/// Exact t_inj(h, G) over every d-regular G with d < n <= n_max, one per
/// isomorphism class, ordered by order then canonical graph6.
inline SearchReport search_max_density(const Graph& h, std::size_t d, std::size_t n_max, bool connected_only,
                                       std::uint64_t seed = kDefaultSpotCheckSeed) {
  SearchReport report;
  report.d = d;
  report.n_min = d + 1;
  report.n_max = n_max;
  report.connected_only = connected_only;
  std::vector<Graph> graphs;
  if (n_max >= d + 1) graphs = enumerate_regular_range(d + 1, n_max, d, connected_only);
  detail::fill_search(report, h, graphs, seed);
  return report;
}

/// Same search over a supplied list of d-regular graphs.
inline SearchReport search_max_density(const Graph& h, const std::vector<Graph>& graphs, std::size_t d,
                                       std::uint64_t seed = kDefaultSpotCheckSeed) {
  for (const auto& g : graphs)
    if (regular_degree(g) != d)
      throw std::invalid_argument("corpus graph " + write_graph6(g) + " is not " + std::to_string(d) + "-regular");
  SearchReport report;
  report.d = d;
  report.corpus = "file";
  report.connected_only = false;
  if (!graphs.empty()) {
    report.n_min = graphs.front().order();
    report.n_max = graphs.front().order();
    for (const auto& g : graphs) {
      report.n_min = std::min(report.n_min, g.order());
      report.n_max = std::max(report.n_max, g.order());
    }
  }
  detail::fill_search(report, h, graphs, seed);
  return report;
}

/// The two drawn 4-regular C5 extremal candidates, in the drawings' vertex
/// labels. The first drawing lists only 17 edges; the edge {3,6} joining its
/// two degree-3 vertices is restored here.
inline Graph figure_graph_a() { return parse_graph6("H{KiiUT"); }
inline Graph figure_graph_b() { return parse_graph6("Ik?tRrKF_"); }

struct ExampleEntry {
  std::string name;
  std::string graph6;
  std::size_t d = 0;
  Rational density;
};

struct ReportCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PaperReport {
  std::vector<ExampleEntry> examples;
  std::vector<ReportCheck> checks;
  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.passed; });
  }
};

/// C5 densities of the named extremal candidates, with the equalities and
/// strict inequalities claimed for them.
inline PaperReport verify_paper_examples() {
  const Graph c5 = cycle(5);
  struct Named {
    std::string name;
    Graph graph;
  };
  std::vector<Named> named = {
      {"K5", complete(5)},
      {"octahedron", construct_family("octahedron")},
      {"C7(2,3)", circulant(7, {2, 3})},
      {"C9(2,3)", circulant(9, {2, 3})},
      {"C12(2,3)", circulant(12, {2, 3})},
      {"C13(2,3)", circulant(13, {2, 3})},
      {"C7(1,2)", circulant(7, {1, 2})},
      {"K3xK3", cartesian_product(complete(3), complete(3))},
      {"figure-a", figure_graph_a()},
      {"figure-b", figure_graph_b()},
      {"K6", complete(6)},
      {"complement(K3+C5)", complement(disjoint_union(complete(3), cycle(5)))},
      {"K7", complete(7)},
      {"K3,3,3", complete_multipartite({3, 3, 3})},
      {"K8-PM", complete_multipartite({2, 2, 2, 2})},
  };
  PaperReport report;
  std::map<std::string, Rational> density;
  for (const auto& [name, g] : named) {
    auto d = regular_degree(g);
    report.examples.push_back({name, write_graph6(g), d.value_or(0), inj_density(c5, g)});
    density[name] = report.examples.back().density;
  }
  auto degree_of = [&](const std::string& name) {
    for (const auto& e : report.examples)
      if (e.name == name) return e.d;
    return std::size_t{0};
  };
  auto check = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  check("octahedron density is 40", density["octahedron"] == 40, to_string(density["octahedron"]));

  const std::vector<std::string> quartic = {"octahedron", "C7(2,3)",  "C9(2,3)",  "C12(2,3)", "C13(2,3)",
                                            "C7(1,2)",    "K3xK3",    "figure-a", "figure-b"};
  bool regular = true, equal = true;
  std::string odd_one;
  for (const auto& name : quartic) {
    if (degree_of(name) != 4) {
      regular = false;
      odd_one = name;
    }
    if (density[name] != density[quartic.front()]) {
      equal = false;
      odd_one = name;
    }
  }
  check("d=4 examples are 4-regular", regular, odd_one);
  check("figure graphs have orders 9 and 10",
        figure_graph_a().order() == 9 && figure_graph_b().order() == 10, "");
  check("d=4 examples share one density", equal, equal ? to_string(density["octahedron"]) : odd_one);
  check("d=4 common density exceeds K5", density["octahedron"] > density["K5"],
        to_string(density["octahedron"]) + " > " + to_string(density["K5"]));
  check("complement(K3+C5) exceeds K6", degree_of("complement(K3+C5)") == 5 && density["complement(K3+C5)"] > density["K6"],
        to_string(density["complement(K3+C5)"]) + " > " + to_string(density["K6"]));
  check("K7, K3,3,3 and K8-PM all have density 360",
        density["K7"] == 360 && density["K3,3,3"] == 360 && density["K8-PM"] == 360 && degree_of("K3,3,3") == 6 &&
            degree_of("K8-PM") == 6,
        to_string(density["K7"]) + ", " + to_string(density["K3,3,3"]) + ", " + to_string(density["K8-PM"]));
  return report;
}

struct TreeCheckReport {
  std::string pattern;
  std::size_t d = 0, n_max = 0;
  std::size_t pattern_diameter = 0;
  Rational best_density;
  std::vector<std::string> maximizers;
  std::vector<std::string> girth_exceeds_diameter;
  bool sets_equal = false;
  std::size_t graphs_scanned = 0;
};

/// Over all d-regular graphs with d < n <= n_max (disconnected included),
/// compares the maximizers of t_inj(h, .) with the graphs whose girth
/// exceeds the diameter of the tree h.
inline TreeCheckReport tree_extremal_check(const Graph& h, std::size_t d, std::size_t n_max) {
  if (!is_tree(h)) throw std::invalid_argument("tree_extremal_check needs a tree pattern");
  std::size_t max_deg = 0;
  for (Vertex v = 0; v < h.order(); ++v) max_deg = std::max(max_deg, h.degree(v));
  if (d < max_deg) throw std::invalid_argument("d is below the maximum degree of the tree");
  TreeCheckReport report;
  report.pattern = write_graph6(h);
  report.d = d;
  report.n_max = n_max;
  report.pattern_diameter = *diameter(h).value;
  auto graphs = enumerate_regular_range(d + 1, n_max, d, false);
  if (graphs.empty()) throw std::invalid_argument("no d-regular graphs in range");
  report.graphs_scanned = graphs.size();
  auto densities = parallel_map(graphs, [&](const Graph& g) { return inj_density(h, g); });
  report.best_density = *std::max_element(densities.begin(), densities.end());
  const Length diam{report.pattern_diameter};
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto code = write_graph6(graphs[i]);
    if (densities[i] == report.best_density) report.maximizers.push_back(code);
    if (girth(graphs[i]) > diam) report.girth_exceeds_diameter.push_back(code);
  }
  report.sets_equal = report.maximizers == report.girth_exceeds_diameter;
  return report;
}

struct WalkCheckReport {
  std::size_t d = 0, k = 0, n_max = 0;
  Integer maximum;
  Integer clique_value;
  /// Graphs (graph6) containing a vertex that attains the maximum.
  std::vector<std::string> attained_in;
  bool only_clique_components = false;
  std::size_t graphs_scanned = 0;
};

/// Largest (A^k)_{vv} over every vertex of every d-regular graph with
/// d < n <= n_max, compared with the value at a vertex of K_{d+1}.
inline WalkCheckReport vertexwise_walk_check(std::size_t d, std::size_t k, std::size_t n_max) {
  if (k % 2 == 0) throw std::invalid_argument("walk length must be odd");
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  WalkCheckReport report;
  report.d = d;
  report.k = k;
  report.n_max = n_max;
  const Graph clique = complete(d + 1);
  report.clique_value = closed_walks_at_vertex(clique, 0, static_cast<int>(k));
  auto graphs = enumerate_regular_range(d + 1, n_max, d, false);
  if (graphs.empty()) throw std::invalid_argument("no d-regular graphs in range");
  report.graphs_scanned = graphs.size();
  auto walks = parallel_map(graphs, [&](const Graph& g) { return closed_walks_per_vertex(g, static_cast<int>(k)); });
  report.maximum = 0;
  for (const auto& w : walks)
    for (const auto& x : w) report.maximum = std::max(report.maximum, x);
  report.only_clique_components = true;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    bool hit = false;
    auto comps = components(graphs[i]);
    for (const auto& comp : comps)
      for (Vertex v : comp) {
        if (walks[i][v] != report.maximum) continue;
        hit = true;
        if (!isomorphic(graphs[i].induced(comp), clique)) report.only_clique_components = false;
      }
    if (hit) report.attained_in.push_back(write_graph6(graphs[i]));
  }
  return report;
}

}  // namespace homspec
