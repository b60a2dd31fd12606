#include "homspec/bounds.hpp"
#include "homspec/enumerate.hpp"
#include "homspec/optimize.hpp"

#include <gtest/gtest.h>

using namespace homspec;

namespace {
BivarPoly lam(int k, int j = 0, Rational c = 1) { return BivarPoly::monomial(k, j, std::move(c)); }
BivarPoly c5_formula() { return lam(5) + lam(3, 0, 5) + lam(3, 1, -5); }
BivarPoly c4_formula() { return lam(4) + lam(0, 2, -2) + lam(0, 1); }
UniPoly y_pow(int k, Rational c = 1) { return UniPoly::monomial(k, std::move(c)); }
}  // namespace

TEST(UniPoly, Arithmetic) {
  UniPoly p({1, -3, 0, 2});  // 2y^3 - 3y + 1
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p(2), 11);
  EXPECT_EQ(p.derivative(), UniPoly({-3, 0, 6}));
  auto [q, r] = p.divmod(UniPoly::linear_factor(1));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q * UniPoly::linear_factor(1), p);
  EXPECT_EQ(UniPoly({Rational(1, 2), Rational(3, 4)}).primitive(), UniPoly({2, 3}));
  EXPECT_EQ(square_free_part(UniPoly::linear_factor(2) * UniPoly::linear_factor(2) * UniPoly::linear_factor(3)).monic(),
            (UniPoly::linear_factor(2) * UniPoly::linear_factor(3)));
  EXPECT_EQ(p.to_string(), "2*y^3 - 3*y + 1");
}

TEST(Sturm, CountsDistinctRoots) {
  // (y-1/3)^2 (y+1/2)(y-2)
  UniPoly p = UniPoly::linear_factor(Rational(1, 3)) * UniPoly::linear_factor(Rational(1, 3)) *
              UniPoly::linear_factor(Rational(-1, 2)) * UniPoly::linear_factor(2);
  SturmChain chain(p);
  EXPECT_EQ(chain.roots_in(-1, 3), 3);
  EXPECT_EQ(chain.roots_in(0, 1), 1);
  EXPECT_EQ(chain.roots_in(Rational(-1, 2), 0), 0);  // (a, b] excludes a
  EXPECT_EQ(chain.roots_in(-1, Rational(-1, 2)), 1);
  auto roots = isolate_roots(p, -1, 2);
  ASSERT_EQ(roots.size(), 2u);
  for (const auto& iv : roots) EXPECT_LT(iv.hi - iv.lo, Rational(1, 1 << 20));
}

TEST(Sturm, IsolatesIrrationalRoots) {
  auto roots = isolate_roots(UniPoly({-2, 0, 1}), -2, 2);  // ±sqrt 2
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_LT(roots[0].hi, 0);
  EXPECT_GT(roots[1].lo, Rational(14142, 10000));
  EXPECT_LT(roots[1].hi, Rational(14143, 10000));
}

TEST(Sturm, PositivitySpecExamples) {
  EXPECT_TRUE(sturm_nonneg_on_interval(UniPoly::constant(1), 0, 1, true).holds);
  UniPoly bump({0, 1, -1});  // y - y^2
  EXPECT_TRUE(sturm_nonneg_on_interval(bump, 0, 1, true).holds);
  auto closed = sturm_nonneg_on_interval(bump, 0, 1, false);
  EXPECT_TRUE(closed.holds);
  EXPECT_TRUE(closed.boundary_zero);
  auto cross = sturm_nonneg_on_interval(UniPoly({Rational(-1, 4), 0, 1}), -1, 1, true);
  EXPECT_FALSE(cross.holds);
  ASSERT_TRUE(cross.negative_point);
  EXPECT_LT(UniPoly({Rational(-1, 4), 0, 1})(*cross.negative_point), 0);
  // Touching root: nonnegative on the closed interval but not positive on the open one.
  UniPoly touch = UniPoly::linear_factor(Rational(1, 2)) * UniPoly::linear_factor(Rational(1, 2));
  EXPECT_FALSE(sturm_nonneg_on_interval(touch, 0, 1, true).holds);
  EXPECT_TRUE(sturm_nonneg_on_interval(touch, 0, 1, false).holds);
  EXPECT_THROW(sturm_nonneg_on_interval(UniPoly(), 0, 1, true), std::invalid_argument);
}

TEST(Transform, EvenSpecExamples) {
  EXPECT_EQ(transform_even(lam(4), 5), y_pow(2));
  EXPECT_EQ(transform_even(c4_formula(), 3), y_pow(2) + UniPoly::constant(Rational(-2, 9) + Rational(1, 27)));
  EXPECT_EQ(transform_even(lam(2, 2), 4), y_pow(1));
  EXPECT_THROW(transform_even(lam(3), 3), std::invalid_argument);
  EXPECT_THROW(transform_even(lam(4), 1), std::invalid_argument);
}

TEST(Transform, OddSpecExamples) {
  EXPECT_EQ(transform_odd(lam(3), 4), y_pow(3));
  EXPECT_EQ(transform_odd(c5_formula(), 7), y_pow(5) + y_pow(3, Rational(5, 49) - Rational(5, 7)));
  EXPECT_EQ(transform_odd(lam(1, 2), 6), y_pow(1));
}

TEST(Majorant, EvenSpecExamples) {
  EXPECT_EQ(majorant_check_even(lam(4), 2).verdict, Verdict::pass);
  EXPECT_EQ(majorant_check_even(c4_formula(), 2).verdict, Verdict::pass);
  EXPECT_EQ(majorant_check_even(lam(2, 2), 7).verdict, Verdict::pass_flat);
}

TEST(Majorant, OddSpecExamples) {
  EXPECT_EQ(majorant_check_odd(c5_formula(), 7).verdict, Verdict::pass);
  auto six = majorant_check_odd(c5_formula(), 6);
  EXPECT_EQ(six.verdict, Verdict::fail);
  ASSERT_TRUE(six.witness);
  EXPECT_GT(six.q(*six.witness), six.majorant(*six.witness));
  EXPECT_GT(*six.witness, -1);
  EXPECT_LT(*six.witness, 1);
  EXPECT_EQ(majorant_check_odd(lam(3), 2).verdict, Verdict::pass);
}

TEST(Majorant, C5ResidualsMatchHandDerivation) {
  // Independently derived by hand for L - q = (y+1/d)^2 (1-y) r.
  EXPECT_EQ(majorant_check_odd(c5_formula(), 2).residual, UniPoly({Rational(-1, 2), 0, 1}));
  EXPECT_EQ(majorant_check_odd(c5_formula(), 6).residual, UniPoly({Rational(1, 18), Rational(2, 3), 1}));
  EXPECT_EQ(majorant_check_odd(c5_formula(), 7).residual, UniPoly({Rational(8, 49), Rational(5, 7), 1}));
}

TEST(Majorant, FactorizationAndContactIdentities) {
  std::vector<std::pair<BivarPoly, MajorantParity>> inputs = {
      {c5_formula(), MajorantParity::odd}, {lam(3), MajorantParity::odd},  {lam(7, 0, 2) - lam(5, 2), MajorantParity::odd},
      {c4_formula(), MajorantParity::even}, {lam(8), MajorantParity::even}, {lam(6) - lam(4, 2, 3), MajorantParity::even}};
  for (const auto& [p, parity] : inputs)
    for (std::size_t d = 2; d <= 9; ++d) {
      auto c = majorant_check(p, parity, d);
      if (c.verdict == Verdict::pass_flat) continue;
      UniPoly extra = UniPoly::constant(1);
      for (int i = 0; i < c.extra_contact_order; ++i) extra = extra * UniPoly::linear_factor(c.designed_contacts[0].point);
      EXPECT_EQ(c.contact_factor() * extra * c.residual + c.q, c.majorant);
      for (const auto& contact : c.designed_contacts) EXPECT_EQ(c.majorant(contact.point), c.q(contact.point));
      if (parity == MajorantParity::odd) {
        Rational y0(-1, static_cast<long long>(d));
        EXPECT_EQ(c.designed_contacts[0].point, y0);
        EXPECT_EQ(c.majorant.derivative()(y0), c.q.derivative()(y0));
        EXPECT_LE(c.majorant.degree(), 2);
      } else {
        EXPECT_LE(c.majorant.degree(), 1);
      }
    }
}

TEST(Majorant, HigherOrderContactIsDeflated) {
  // At d = 2, q(y) = (y + 1/2)^3 (y - 1): the tangent parabola at y0 = -1/2
  // through (1, q(1)) is L = 0, and L - q = (y + 1/2)^3 (1 - y) changes sign at y0.
  BivarPoly p = lam(4) + lam(3, 1, Rational(1, 2)) + lam(2, 2, Rational(-3, 4)) + lam(1, 3, Rational(-5, 8)) +
                lam(0, 4, Rational(-1, 8));
  auto c = majorant_check_odd(p, 2);
  EXPECT_TRUE(c.majorant.is_zero());
  EXPECT_EQ(c.extra_contact_order, 1);
  EXPECT_EQ(c.verdict, Verdict::fail);
  ASSERT_TRUE(c.witness);
  EXPECT_GT(c.q(*c.witness), c.majorant(*c.witness));
}

TEST(Threshold, SpecExamples) {
  auto c5 = certify_threshold(c5_formula(), MajorantParity::odd, 2, 12);
  ASSERT_TRUE(c5.threshold);
  EXPECT_EQ(*c5.threshold, 7u);
  // Exact verdicts fail for every d below 7, including d = 2 and 3 where C5
  // and the Petersen graph beat the clique outright.
  EXPECT_EQ(c5.failures, (std::vector<std::size_t>{2, 3, 4, 5, 6}));
  EXPECT_EQ(std::string(ThresholdReport::scope), "scanned-range");

  auto cube = certify_threshold(lam(3), MajorantParity::odd, 2, 12);
  EXPECT_EQ(cube.threshold, 2u);
  EXPECT_TRUE(cube.failures.empty());

  EXPECT_EQ(certify_threshold(lam(4), MajorantParity::even, 2, 12).threshold, 2u);
  EXPECT_THROW(certify_threshold(lam(4), MajorantParity::even, 5, 4), std::invalid_argument);
}

TEST(Threshold, MonomialsPassForAllScannedD) {
  for (int k = 1; k <= 7; k += 2) EXPECT_TRUE(certify_threshold(lam(k), MajorantParity::odd, 2, 12).failures.empty());
  for (int k = 2; k <= 8; k += 2) EXPECT_TRUE(certify_threshold(lam(k), MajorantParity::even, 2, 12).failures.empty());
}

TEST(Measures, MomentFeasibility) {
  for (std::size_t d = 2; d <= 12; ++d) {
    const Rational dd(static_cast<long long>(d));
    for (const auto& m : {clique_measure(d), bipartite_clique_measure(d)}) {
      EXPECT_EQ(moment(m, 0), 1);
      EXPECT_EQ(moment(m, 1), 0);
      EXPECT_EQ(moment(m, 2), dd);
    }
    // The measures reproduce the clique spectra exactly.
    EXPECT_EQ(expectation(lam(5), clique_measure(d), d) * (dd + 1), trace_power(complete(d + 1), 5));
    EXPECT_EQ(expectation(lam(4), bipartite_clique_measure(d), d) * 2 * dd,
              trace_power(complete_bipartite(d, d), 4));
  }
}

TEST(QuotientExpansionClaim, ExactIdentity) {
  for (int k = 2; k <= 8; ++k)
    for (std::size_t d = 2; d <= 9; ++d) {
      Rational y0(-1, static_cast<long long>(d));
      UniPoly lhs = y_pow(k) - UniPoly::constant(rpow(y0, k)) -
                    UniPoly::linear_factor(y0) * UniPoly::constant(k * rpow(y0, k - 1));
      UniPoly sum;
      for (int a = 0; a <= k - 2; ++a) sum += y_pow(k - 2 - a, (a + 1) * rpow(y0, a));
      EXPECT_EQ(lhs, UniPoly::linear_factor(y0) * UniPoly::linear_factor(y0) * sum) << k << " " << d;
    }
}

namespace {
std::vector<Graph> seven_regular_hosts() {
  std::vector<Graph> out{complete(8)};
  for (const auto& g : enumerate_regular(10, 2, false)) out.push_back(complement(g));
  return out;
}
}  // namespace

TEST(Consistency, PassingMajorantPicksTheClique) {
  // C5 at d = 7: the check passes, so K8 maximizes the bound density.
  ASSERT_EQ(majorant_check_odd(c5_formula(), 7).verdict, Verdict::pass);
  auto hosts = seven_regular_hosts();
  Rational best = -1;
  std::vector<std::size_t> argmax;
  for (std::size_t i = 0; i < hosts.size(); ++i) {
    Rational v = eval_poly_sum(c5_formula(), hosts[i], 7) / static_cast<long long>(hosts[i].order());
    if (v > best) {
      best = v;
      argmax = {i};
    } else if (v == best) {
      argmax.push_back(i);
    }
  }
  EXPECT_EQ(argmax, std::vector<std::size_t>{0});

  // C4 at d = 3 (even case): K_{3,3} attains the cubic maximum.
  ASSERT_EQ(majorant_check_even(c4_formula(), 3).verdict, Verdict::pass);
  Rational kdd = eval_poly_sum(c4_formula(), complete_bipartite(3, 3), 3) / 6;
  for (const auto& g : enumerate_regular_range(4, 10, 3, true)) {
    Rational v = eval_poly_sum(c4_formula(), g, 3) / static_cast<long long>(g.order());
    EXPECT_LE(v, kdd);
    if (v == kdd) {
      EXPECT_TRUE(isomorphic(g, complete_bipartite(3, 3)));
    }
  }
}
