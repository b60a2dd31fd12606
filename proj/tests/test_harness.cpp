#include "homspec/harness.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace homspec;

TEST(Search, PetersenMaximizesC5) {
  auto r = search_max_density(cycle(5), 3, 10, true);
  EXPECT_EQ(r.per_graph.size(), 27u);
  EXPECT_EQ(r.best_density, 12);
  ASSERT_EQ(r.maximizers.size(), 1u);
  EXPECT_EQ(r.maximizers[0].name, std::optional<std::string>("Petersen"));
  EXPECT_TRUE(isomorphic(parse_graph6(r.maximizers[0].graph6), petersen()));
  ASSERT_TRUE(r.runner_up_density);
  EXPECT_LT(*r.runner_up_density, 12);
  EXPECT_EQ(r.spot_checks, 2u);
}

TEST(Search, C4AndC3Maximizers) {
  auto c4 = search_max_density(cycle(4), 3, 8, true);
  EXPECT_EQ(c4.best_density, 12);
  ASSERT_EQ(c4.maximizers.size(), 1u);
  EXPECT_EQ(c4.maximizers[0].name, std::optional<std::string>("K3,3"));
  EXPECT_EQ(oracle::brute_maps(cycle(4), complete_bipartite(3, 3), true), 72u);

  auto c3 = search_max_density(cycle(3), 3, 10, true);
  EXPECT_EQ(c3.best_density, 6);
  ASSERT_EQ(c3.maximizers.size(), 1u);
  EXPECT_EQ(c3.maximizers[0].name, std::optional<std::string>("K4"));
}

TEST(Search, DeterministicAndInvariants) {
  auto a = search_max_density(path(4), 3, 10, false);
  auto b = search_max_density(path(4), 3, 10, false, 7);
  ASSERT_EQ(a.per_graph.size(), b.per_graph.size());
  for (std::size_t i = 0; i < a.per_graph.size(); ++i) {
    EXPECT_EQ(a.per_graph[i].graph6, b.per_graph[i].graph6);
    EXPECT_LE(a.per_graph[i].density, a.best_density);
  }
  for (const auto& m : a.maximizers) EXPECT_EQ(m.density, a.best_density);
}

TEST(Search, Errors) {
  EXPECT_THROW(search_max_density(cycle(5), 3, 3, true), std::invalid_argument);
  EXPECT_THROW(search_max_density(cycle(5), 5, 5, true), std::invalid_argument);
  EXPECT_THROW(search_max_density(cycle(5), std::vector<Graph>{complete(5)}, 3), std::invalid_argument);
  auto file = search_max_density(cycle(5), std::vector<Graph>{petersen(), complete(4)}, 3);
  EXPECT_EQ(file.corpus, "file");
  EXPECT_EQ(file.best_density, 12);
}

TEST(PaperExamples, AllChecksPass) {
  auto r = verify_paper_examples();
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  for (const auto& e : r.examples) {
    if (e.name == "octahedron") {
      EXPECT_EQ(e.density, 40);
    }
    if (e.name == "K7" || e.name == "K3,3,3") {
      EXPECT_EQ(e.density, 360);
    }
  }
}

TEST(PaperExamples, OctahedronOracle) {
  // 24 pentagons x 10 automorphisms of C5 over 6 vertices.
  EXPECT_EQ(oracle::brute_maps(cycle(5), construct_family("octahedron"), true), 240u);
}

TEST(TreeCheck, SpecExamples) {
  auto p3 = tree_extremal_check(path(3), 3, 10);
  EXPECT_EQ(p3.best_density, 6);
  EXPECT_EQ(p3.maximizers.size(), p3.graphs_scanned);
  EXPECT_TRUE(p3.sets_equal);

  auto p4 = tree_extremal_check(path(4), 3, 10);
  EXPECT_TRUE(p4.sets_equal);
  for (const auto& code : p4.maximizers) EXPECT_GT(girth(parse_graph6(code)), Length{3});

  auto spider = tree_extremal_check(construct_family("spider(2,2,1)"), 3, 10);
  EXPECT_EQ(spider.pattern_diameter, 4u);
  EXPECT_TRUE(spider.sets_equal);
  ASSERT_EQ(spider.maximizers.size(), 1u);
  EXPECT_TRUE(isomorphic(parse_graph6(spider.maximizers[0]), petersen()));

  EXPECT_THROW(tree_extremal_check(cycle(4), 3, 8), std::invalid_argument);
  EXPECT_THROW(tree_extremal_check(construct_family("star(4)"), 3, 8), std::invalid_argument);
}

TEST(WalkCheck, SpecExamples) {
  auto five = vertexwise_walk_check(3, 5, 10);
  EXPECT_EQ(five.maximum, 60);
  EXPECT_EQ(five.clique_value, 60);
  EXPECT_TRUE(five.only_clique_components);

  auto three = vertexwise_walk_check(3, 3, 10);
  EXPECT_EQ(three.maximum, 6);
  EXPECT_TRUE(three.only_clique_components);

  auto cycles = vertexwise_walk_check(2, 3, 8);
  EXPECT_EQ(cycles.maximum, 2);
  EXPECT_TRUE(cycles.only_clique_components);

  EXPECT_THROW(vertexwise_walk_check(3, 4, 8), std::invalid_argument);
}

TEST(KnownNames, Lookup) {
  EXPECT_EQ(known_graph_name(petersen()), std::optional<std::string>("Petersen"));
  EXPECT_EQ(known_graph_name(oracle::shuffled(complete(5), 3)), std::optional<std::string>("K5"));
  EXPECT_FALSE(known_graph_name(path(5)).has_value());
}
