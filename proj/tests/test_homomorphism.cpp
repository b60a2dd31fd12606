#include "homspec/families.hpp"
#include "homspec/homomorphism.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace homspec;

TEST(HomCount, SpecExamples) {
  EXPECT_EQ(hom_count(path(2), complete(4)), 12u);
  EXPECT_EQ(hom_count(cycle(3), petersen()), 0u);
  EXPECT_EQ(hom_count(cycle(5), complete(4)), 240u);
  EXPECT_EQ(oracle::brute_maps(cycle(5), complete(4), false), 240u);
}

TEST(InjCount, SpecExamples) {
  EXPECT_EQ(inj_count(cycle(5), complete(4)), 0u);
  EXPECT_EQ(inj_count(cycle(3), complete(4)), 24u);
  EXPECT_EQ(inj_count(cycle(5), petersen()), 120u);
  EXPECT_EQ(oracle::brute_maps(cycle(5), petersen(), true), 120u);
}

TEST(Counting, MatchesBruteForceOnSmallPairs) {
  auto patterns = corpus::connected_patterns(4);
  const char* hosts[] = {"K4", "C5", "petersen", "bipartite(3,3)", "product(K3,K2)", "octahedron", "star(3)"};
  for (const auto& h : patterns)
    for (const char* expr : hosts) {
      Graph g = construct_family(expr);
      EXPECT_EQ(hom_count(h, g), oracle::brute_maps(h, g, false)) << write_graph6(h) << " -> " << expr;
      EXPECT_EQ(inj_count(h, g), oracle::brute_maps(h, g, true)) << write_graph6(h) << " -> " << expr;
    }
}

TEST(Counting, DisconnectedPatternMultiplies) {
  Graph h = disjoint_union(cycle(3), path(2));
  EXPECT_EQ(hom_count(h, petersen()), 0u);
  EXPECT_EQ(hom_count(h, complete(4)), 24u * 12u);
}

TEST(Counting, OverflowGuard) {
  Graph big(20);
  EXPECT_THROW(hom_count(big, complete(30)), std::overflow_error);
  EXPECT_THROW(hom_count(path(2), cycle(65)), std::length_error);
}

TEST(Partitions, BellCounts) {
  EXPECT_EQ(enumerate_partitions(1).size(), 1u);
  EXPECT_EQ(enumerate_partitions(3).size(), 5u);
  EXPECT_EQ(enumerate_partitions(5).size(), 52u);
  for (std::size_t n = 1; n <= 9; ++n) EXPECT_EQ(enumerate_partitions(n).size(), oracle::bell(n)) << n;
}

TEST(Partitions, RgsOrderAndValidity) {
  auto all = enumerate_partitions(4);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1].rgs(), all[i].rgs());
  EXPECT_EQ(all.front(), Partition(std::vector<std::uint8_t>{0, 0, 0, 0}));
  EXPECT_EQ(all.back(), Partition::singletons(4));
  EXPECT_THROW(Partition(std::vector<std::uint8_t>{1, 0}), std::invalid_argument);
}

TEST(Partitions, Guard) {
  EXPECT_THROW(enumerate_partitions(0), std::out_of_range);
  EXPECT_THROW(enumerate_partitions(13), std::out_of_range);
}

TEST(Quotient, SpecExamples) {
  auto p3 = quotient(cycle(4), Partition({0, 1, 0, 2}));
  EXPECT_FALSE(p3.has_loop);
  EXPECT_TRUE(isomorphic(p3.simple, path(3)));

  auto antenna = quotient(cycle(5), Partition({0, 1, 0, 2, 3}));
  EXPECT_FALSE(antenna.has_loop);
  EXPECT_TRUE(isomorphic(antenna.simple, Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})));

  auto loop = quotient(path(2), Partition({0, 0}));
  EXPECT_TRUE(loop.has_loop);
  EXPECT_EQ(loop.simple.order(), 1u);
  EXPECT_EQ(hom_count(loop, complete(5)), 0u);
}

TEST(Moebius, SpecExamples) {
  EXPECT_EQ(moebius_coeff(Partition::singletons(5)), 1);
  EXPECT_EQ(moebius_coeff(Partition({0, 0, 1, 2, 3})), -1);
  EXPECT_EQ(moebius_coeff(Partition({0, 0, 0})), 2);
  EXPECT_EQ(moebius_coeff(Partition({0, 0, 0, 0})), -6);
  EXPECT_EQ(moebius_coeff(Partition({0, 0, 1, 1})), 1);
}

TEST(Moebius, InversionSpecExamples) {
  EXPECT_EQ(inj_via_moebius(cycle(5), petersen()), 120);
  EXPECT_EQ(inj_via_moebius(cycle(4), complete_bipartite(2, 2)), 8);
  EXPECT_EQ(inj_via_moebius(cycle(3), cycle(5)), 0);
  EXPECT_EQ(hom_via_inj_sum(cycle(5), complete(4)), 240);
  EXPECT_EQ(hom_via_inj_sum(path(2), complete(4)), 12);
  for (const auto& g : enumerate_regular(10, 3, false)) {
    EXPECT_EQ(inj_count(path(3), g), 60u);
    EXPECT_EQ(inj_count(path(2), g), 30u);
    EXPECT_EQ(hom_via_inj_sum(path(3), g), 90);
  }
}

TEST(Moebius, C5QuotientCensus) {
  // Loop-free quotients of C5: the identity, five antenna triangles, five triangles.
  std::size_t identity = 0, antenna = 0, triangle = 0, other = 0;
  for_each_partition(5, [&](const Partition& p) {
    auto q = quotient(cycle(5), p);
    if (q.has_loop) return;
    if (p.trivial()) ++identity;
    else if (q.simple.order() == 4) ++antenna;
    else if (isomorphic(q.simple, cycle(3))) ++triangle;
    else ++other;
  });
  EXPECT_EQ(identity, 1u);
  EXPECT_EQ(antenna, 5u);
  EXPECT_EQ(triangle, 5u);
  EXPECT_EQ(other, 0u);
}

TEST(Moebius, RoundTripOverCorpusSample) {
  auto corpus = corpus::regular_corpus();
  auto patterns = corpus::connected_patterns(4);
  for (std::size_t i = 0; i < corpus.size(); i += 7)
    for (const auto& h : patterns) {
      const Graph& g = corpus[i].graph;
      EXPECT_EQ(hom_via_inj_sum(h, g), hom_count(h, g));
      EXPECT_EQ(inj_via_moebius(h, g), inj_count(h, g));
    }
}

TEST(Monotonicity, EdgeRemovalNeverDecreasesInj) {
  auto patterns = corpus::connected_patterns(5);
  Graph hosts[] = {petersen(), complete(6), construct_family("circulant(9,2,3)")};
  for (const auto& h : patterns)
    for (auto [u, v] : h.edges()) {
      Graph smaller = h;
      smaller.remove_edge(u, v);
      for (const auto& g : hosts) EXPECT_GE(inj_count(smaller, g), inj_count(h, g));
      // Clique anchor: K_{d+1} with d >= |V(h)| does not see the edge.
      EXPECT_EQ(inj_count(smaller, complete(h.order() + 1)), inj_count(h, complete(h.order() + 1)));
    }
}

TEST(Peeling, DegreeOneVertex) {
  auto patterns = corpus::connected_patterns(5);
  Graph hosts[] = {petersen(), complete(5), construct_family("product(K3,K3)")};
  for (const auto& h : patterns) {
    if (h.order() < 2) continue;
    for (Vertex v = 0; v < h.order(); ++v) {
      if (h.degree(v) != 1) continue;
      std::vector<Vertex> keep;
      for (Vertex u = 0; u < h.order(); ++u)
        if (u != v) keep.push_back(u);
      Graph rest = h.induced(keep);
      for (const auto& g : hosts)
        EXPECT_EQ(hom_count(h, g), *regular_degree(g) * hom_count(rest, g));
      break;
    }
  }
}
