#pragma once

#include "homspec/bivar_poly.hpp"
#include "homspec/exact.hpp"
#include "homspec/graph.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace homspec {

inline constexpr int kMaxTracePower = 16;

/// Exact tr(A^k) for k = 0..max_power.
struct SpectralMoments {
  std::vector<Integer> traces;
  std::size_t order = 0;
  std::optional<std::size_t> degree;
};

namespace detail {

// Entries of A^k are walk counts bounded by d^k <= 63^16 < 2^96.
using WalkCount = boost::multiprecision::uint128_t;

inline void check_power(int k) {
  if (k < 0 || k > kMaxTracePower)
    throw std::out_of_range("trace power must lie in [0, 16], got " + std::to_string(k));
}

/// Calls visit(k, M) with M = A^k for k = 1..max_power (row-major n*n).
template <typename Visit>
void for_each_walk_matrix(const Graph& g, int max_power, Visit&& visit) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> nbrs(n);
  for (Vertex v = 0; v < n; ++v) nbrs[v] = g.neighbors(v);
  std::vector<WalkCount> cur(n * n, 0), next(n * n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : nbrs[u]) cur[u * n + v] = 1;
  for (int k = 1; k <= max_power; ++k) {
    visit(k, cur);
    if (k == max_power) break;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        WalkCount s = 0;
        for (Vertex w : nbrs[v]) s += cur[u * n + w];
        next[u * n + v] = s;
      }
    std::swap(cur, next);
  }
}

inline Integer to_integer(const WalkCount& w) { return Integer(w); }

}  // namespace detail

inline SpectralMoments spectral_moments(const Graph& g, int max_power = kMaxTracePower) {
  detail::check_power(max_power);
  SpectralMoments m;
  m.order = g.order();
  m.degree = regular_degree(g);
  m.traces.assign(max_power + 1, 0);
  m.traces[0] = Integer(g.order());
  detail::for_each_walk_matrix(g, max_power, [&](int k, const std::vector<detail::WalkCount>& mat) {
    detail::WalkCount t = 0;
    for (Vertex v = 0; v < g.order(); ++v) t += mat[v * g.order() + v];
    m.traces[k] = detail::to_integer(t);
  });
  return m;
}

/// tr(A^k), the number of closed k-walks.
inline Integer trace_power(const Graph& g, int k) {
  detail::check_power(k);
  if (k == 0) return Integer(g.order());
  return spectral_moments(g, k).traces[k];
}

/// (A^k)_{vv} for every vertex v.
inline std::vector<Integer> closed_walks_per_vertex(const Graph& g, int k) {
  detail::check_power(k);
  std::vector<Integer> out(g.order(), k == 0 ? 1 : 0);
  if (k == 0) return out;
  detail::for_each_walk_matrix(g, k, [&](int power, const std::vector<detail::WalkCount>& mat) {
    if (power != k) return;
    for (Vertex v = 0; v < g.order(); ++v) out[v] = detail::to_integer(mat[v * g.order() + v]);
  });
  return out;
}

inline Integer closed_walks_at_vertex(const Graph& g, Vertex v, int k) {
  if (v >= g.order()) throw std::out_of_range("vertex out of range");
  return closed_walks_per_vertex(g, k)[v];
}

struct EigenvalueClass {
  double value = 0;
  std::size_t multiplicity = 0;
};

/// Floating spectrum, eigenvalues clustered within 10*tolerance, descending.
struct SpectralMeasure {
  std::vector<EigenvalueClass> eigenvalues;
  double tolerance = 1e-9;

  std::size_t total_multiplicity() const {
    std::size_t n = 0;
    for (const auto& e : eigenvalues) n += e.multiplicity;
    return n;
  }

  double power_sum(int k) const {
    double s = 0;
    for (const auto& e : eigenvalues) s += static_cast<double>(e.multiplicity) * std::pow(e.value, k);
    return s;
  }
};

inline SpectralMeasure eigenvalues(const Graph& g, double tol = 1e-9) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1;
    a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 1;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(values.begin(), values.end(), std::greater<>());

  SpectralMeasure measure;
  measure.tolerance = tol;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    while (j < values.size() && values[j - 1] - values[j] <= 10 * tol) ++j;
    double sum = 0;
    for (std::size_t k = i; k < j; ++k) sum += values[k];
    double mean = sum / static_cast<double>(j - i);
    if (std::abs(mean) < 10 * tol) mean = 0.0;
    measure.eigenvalues.push_back({mean, j - i});
    i = j;
  }
  return measure;
}

/// Exact sum over the spectrum of g of p(lambda, d), computed as
/// sum of c_{k,j} * tr(A^k) * d^j.
inline Rational eval_poly_sum(const BivarPoly& p, const SpectralMoments& moments, std::size_t d) {
  if (!moments.degree || *moments.degree != d)
    throw std::invalid_argument("graph is not " + std::to_string(d) + "-regular");
  if (p.max_lambda_exponent() >= static_cast<int>(moments.traces.size()))
    throw std::out_of_range("polynomial lambda-degree exceeds available trace powers");
  Rational sum = 0;
  for (const auto& [m, c] : p.terms())
    sum += c * Rational(moments.traces[m.lambda]) * Rational(ipow(Integer(d), m.d));
  return sum;
}

inline Rational eval_poly_sum(const BivarPoly& p, const Graph& g, std::size_t d) {
  int k = std::max(p.max_lambda_exponent(), 0);
  if (k > kMaxTracePower)
    throw std::out_of_range("polynomial lambda-degree " + std::to_string(k) + " exceeds 16");
  return eval_poly_sum(p, spectral_moments(g, std::max(k, 1)), d);
}

}  // namespace homspec
