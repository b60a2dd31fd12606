#include "homspec/families.hpp"
#include "homspec/homomorphism.hpp"
#include "homspec/spectral.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace homspec;

TEST(TracePower, Petersen) {
  EXPECT_EQ(trace_power(petersen(), 2), 30);
  EXPECT_EQ(trace_power(petersen(), 3), 0);
  EXPECT_EQ(trace_power(petersen(), 5), 120);
  EXPECT_EQ(oracle::matrix_trace(petersen(), 5), 120);
  EXPECT_THROW(trace_power(petersen(), 17), std::out_of_range);
  EXPECT_THROW(trace_power(petersen(), -1), std::out_of_range);
}

TEST(TracePower, MomentInvariantsAndOracle) {
  for (const auto& [name, g] : corpus::regular_corpus()) {
    auto m = spectral_moments(g, 8);
    EXPECT_EQ(m.traces[0], g.order());
    EXPECT_EQ(m.traces[1], 0);
    EXPECT_EQ(m.traces[2], g.order() * *m.degree) << name;
    EXPECT_EQ(m.traces[3] % 6, 0) << name;
    for (int k = 3; k <= 8; ++k) {
      EXPECT_EQ(m.traces[k], oracle::matrix_trace(g, k)) << name << " k=" << k;
      EXPECT_EQ(m.traces[k], hom_count(cycle(k), g)) << name << " k=" << k;
    }
    if (is_bipartite(g)) {
      for (int k = 1; k <= 7; k += 2) EXPECT_EQ(m.traces[k], 0) << name;
    }
  }
}

TEST(TracePower, LargeExponentStaysExact) {
  // tr(A^16) of K8 = 7^16 + 7 * 1 = 33232930569608.
  EXPECT_EQ(trace_power(complete(8), 16), Integer("33232930569608"));
}

TEST(ClosedWalks, SpecExamples) {
  for (Vertex v = 0; v < 4; ++v) {
    EXPECT_EQ(closed_walks_at_vertex(complete(4), v, 3), 6);
    EXPECT_EQ(closed_walks_at_vertex(complete(4), v, 5), 60);
  }
  EXPECT_EQ(closed_walks_at_vertex(petersen(), 3, 3), 0);
  EXPECT_THROW(closed_walks_at_vertex(petersen(), 10, 3), std::out_of_range);
}

TEST(ClosedWalks, SumToTrace) {
  for (const char* expr : {"petersen", "union(K4,C5)", "circulant(9,2,3)", "spider(3,1)"}) {
    Graph g = construct_family(expr);
    for (int k = 0; k <= 9; ++k) {
      Integer s = 0;
      for (const auto& w : closed_walks_per_vertex(g, k)) s += w;
      EXPECT_EQ(s, trace_power(g, k)) << expr << " k=" << k;
    }
  }
}

namespace {
void expect_spectrum(const Graph& g, std::vector<std::pair<double, std::size_t>> expected) {
  auto s = eigenvalues(g);
  ASSERT_EQ(s.eigenvalues.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(s.eigenvalues[i].value, expected[i].first, 1e-8);
    EXPECT_EQ(s.eigenvalues[i].multiplicity, expected[i].second);
  }
}
}  // namespace

TEST(Eigenvalues, KnownSpectra) {
  expect_spectrum(complete(4), {{3, 1}, {-1, 3}});
  expect_spectrum(complete_bipartite(3, 3), {{3, 1}, {0, 4}, {-3, 1}});
  expect_spectrum(petersen(), {{3, 1}, {1, 5}, {-2, 4}});
  EXPECT_THROW(eigenvalues(petersen(), 0.0), std::invalid_argument);
}

TEST(Eigenvalues, PowerSumsMatchTraces) {
  for (const auto& [name, g] : corpus::regular_corpus()) {
    auto s = eigenvalues(g);
    const double n = static_cast<double>(g.order());
    const double d = static_cast<double>(*regular_degree(g));
    EXPECT_EQ(s.total_multiplicity(), g.order());
    for (const auto& e : s.eigenvalues) {
      EXPECT_LE(e.value, d + 1e-9);
      EXPECT_GE(e.value, -d - 1e-9);
    }
    for (int k = 1; k <= 6; ++k) {
      double exact = static_cast<double>(trace_power(g, k));
      EXPECT_NEAR(s.power_sum(k), exact, n * k * std::pow(d, k - 1) * s.tolerance * 10) << name << " k=" << k;
    }
  }
}

TEST(EvalPolySum, SpecExamples) {
  BivarPoly p = BivarPoly::monomial(5, 0) + BivarPoly::monomial(3, 0, 5) + BivarPoly::monomial(3, 1, -5);
  EXPECT_EQ(eval_poly_sum(p, petersen(), 3), 120);
  EXPECT_EQ(eval_poly_sum(p, complete(4), 3), 0);
  EXPECT_EQ(eval_poly_sum(p, complete(8), 7), 6720);
  EXPECT_THROW(eval_poly_sum(p, complete(8), 3), std::invalid_argument);
  EXPECT_THROW(eval_poly_sum(p, path(4), 2), std::invalid_argument);
  EXPECT_THROW(eval_poly_sum(BivarPoly::monomial(17, 0), complete(4), 3), std::out_of_range);
}
