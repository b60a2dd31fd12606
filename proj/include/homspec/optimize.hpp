#pragma once

#include "homspec/bivar_poly.hpp"
#include "homspec/exact.hpp"
#include "homspec/parallel.hpp"
#include "homspec/unipoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace homspec {

enum class MajorantParity { even, odd };

inline const char* to_string(MajorantParity p) { return p == MajorantParity::even ? "even" : "odd"; }

enum class Verdict { pass, pass_flat, fail };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::pass_flat: return "pass-flat";
    case Verdict::fail: return "fail";
  }
  return "fail";
}

inline bool passed(Verdict v) { return v != Verdict::fail; }

namespace detail {

inline void check_degree_param(std::size_t d) {
  if (d < 2) throw std::invalid_argument("majorant checks need d >= 2, got " + std::to_string(d));
}

}  // namespace detail

/// q(y) = p(d·sqrt(y), d) / d^n with n the total degree of p.
inline UniPoly transform_even(const BivarPoly& p, std::size_t d) {
  detail::check_degree_param(d);
  if (!p.even_in_lambda()) throw std::invalid_argument("transform_even needs even lambda-exponents");
  const Rational dd(static_cast<long long>(d));
  const int n = std::max(p.degree(), 0);
  UniPoly q;
  for (const auto& [m, c] : p.terms()) q += UniPoly::monomial(m.lambda / 2, c * rpow(dd, m.total() - n));
  return q;
}

/// q(y) = p(d·y, d) / d^n with n the total degree of p.
inline UniPoly transform_odd(const BivarPoly& p, std::size_t d) {
  detail::check_degree_param(d);
  const Rational dd(static_cast<long long>(d));
  const int n = std::max(p.degree(), 0);
  UniPoly q;
  for (const auto& [m, c] : p.terms()) q += UniPoly::monomial(m.lambda, c * rpow(dd, m.total() - n));
  return q;
}

struct Contact {
  Rational point;
  int multiplicity = 1;
};

/// L - q = (designed contact factors)·(extra contact factors)·residual, with
/// the verdict decided by the sign of the residual on the open domain.
struct MajorantCertificate {
  BivarPoly source;
  std::size_t d = 0;
  MajorantParity parity = MajorantParity::even;
  UniPoly q;
  UniPoly majorant;
  std::vector<Contact> designed_contacts;
  /// Extra vanishing order of L - q at an interior designed contact.
  int extra_contact_order = 0;
  UniPoly residual;
  Rational domain_lo, domain_hi;
  Verdict verdict = Verdict::fail;
  /// A point with q(y) > L(y), when one exists.
  std::optional<Rational> witness;
  /// An interior root of the residual (a further contact point).
  std::optional<RootInterval> witness_root;

  /// Product of the contact factors, each oriented to be nonnegative on the
  /// domain: (y - c) inside, (hi - y) at the upper end.
  UniPoly contact_factor() const {
    UniPoly f = UniPoly::constant(1);
    for (const auto& c : designed_contacts) {
      UniPoly factor = UniPoly::linear_factor(c.point);
      if (c.point == domain_hi) factor = factor * Rational(-1);
      for (int i = 0; i < c.multiplicity; ++i) f = f * factor;
    }
    return f;
  }
};

namespace detail {

inline void settle(MajorantCertificate& cert, const UniPoly& diff) {
  if (diff.is_zero()) {
    cert.verdict = Verdict::pass_flat;
    return;
  }
  auto [r, rem] = diff.divmod(cert.contact_factor());
  if (!rem.is_zero()) throw std::logic_error("majorant does not meet q at the designed contacts");
  // Deflate an interior designed contact that q touches to higher order.
  for (const auto& c : cert.designed_contacts) {
    if (!(cert.domain_lo < c.point && c.point < cert.domain_hi)) continue;
    while (r(c.point) == 0) {
      r = r.divmod(UniPoly::linear_factor(c.point)).first;
      ++cert.extra_contact_order;
    }
  }
  cert.residual = r;
  auto v = sturm_nonneg_on_interval(r, cert.domain_lo, cert.domain_hi, true);
  bool odd_extra = cert.extra_contact_order % 2 != 0;
  cert.verdict = v.holds && !odd_extra ? Verdict::pass : Verdict::fail;
  if (v.holds && !odd_extra) return;
  cert.witness_root = v.witness_root;
  if (v.negative_point) {
    cert.witness = *v.negative_point;
  } else if (odd_extra) {
    // L - q changes sign at the contact; step off it on the side where the
    // residual and the odd power are of opposite sign.
    const auto& c = cert.designed_contacts.front();
    Rational step = (cert.domain_hi - cert.domain_lo) / 4;
    while (true) {
      for (const Rational& y : std::vector<Rational>{c.point - step, c.point + step})
        if (cert.domain_lo < y && y < cert.domain_hi && cert.majorant(y) < cert.q(y)) {
          cert.witness = y;
          return;
        }
      step /= 2;
    }
  }
}

}  // namespace detail

/// Line through (0, q(0)) and (1, q(1)); pass iff L - q = y(1-y)·r with r > 0
/// on (0, 1).
inline MajorantCertificate majorant_check_even(const BivarPoly& p, std::size_t d) {
  MajorantCertificate cert;
  cert.source = p;
  cert.d = d;
  cert.parity = MajorantParity::even;
  cert.q = transform_even(p, d);
  const Rational q0 = cert.q(0), q1 = cert.q(1);
  cert.majorant = UniPoly({q0, q1 - q0});
  cert.designed_contacts = {{0, 1}, {1, 1}};
  cert.domain_lo = 0;
  cert.domain_hi = 1;
  detail::settle(cert, cert.majorant - cert.q);
  return cert;
}

/// Parabola tangent to q at y0 = -1/d and meeting q at 1; pass iff
/// L - q = (y-y0)^2 (1-y)·r with r > 0 on (-1, 1).
inline MajorantCertificate majorant_check_odd(const BivarPoly& p, std::size_t d) {
  MajorantCertificate cert;
  cert.source = p;
  cert.d = d;
  cert.parity = MajorantParity::odd;
  cert.q = transform_odd(p, d);
  const Rational y0 = Rational(-1, static_cast<long long>(d));
  const Rational qy0 = cert.q(y0), dq = cert.q.derivative()(y0);
  const Rational curvature = (cert.q(1) - qy0 - (1 - y0) * dq) / ((1 - y0) * (1 - y0));
  auto shift = UniPoly::linear_factor(y0);
  cert.majorant = UniPoly::constant(qy0) + shift * dq + shift * shift * curvature;
  cert.designed_contacts = {{y0, 2}, {1, 1}};
  cert.domain_lo = -1;
  cert.domain_hi = 1;
  detail::settle(cert, cert.majorant - cert.q);
  return cert;
}

inline MajorantCertificate majorant_check(const BivarPoly& p, MajorantParity parity, std::size_t d) {
  return parity == MajorantParity::even ? majorant_check_even(p, d) : majorant_check_odd(p, d);
}

/// Per-d verdicts over a scanned range. threshold is the smallest d* such
/// that every scanned d >= d* passes; it says nothing about d beyond d_hi.
struct ThresholdReport {
  BivarPoly source;
  MajorantParity parity = MajorantParity::even;
  std::size_t d_lo = 0, d_hi = 0;
  std::vector<MajorantCertificate> certificates;
  std::optional<std::size_t> threshold;
  std::vector<std::size_t> failures;
  static constexpr const char* scope = "scanned-range";
};

inline ThresholdReport certify_threshold(const BivarPoly& p, MajorantParity parity, std::size_t d_lo,
                                         std::size_t d_hi) {
  if (d_lo > d_hi) throw std::invalid_argument("empty d range");
  detail::check_degree_param(d_lo);
  std::vector<std::size_t> ds;
  for (std::size_t d = d_lo; d <= d_hi; ++d) ds.push_back(d);
  ThresholdReport report;
  report.source = p;
  report.parity = parity;
  report.d_lo = d_lo;
  report.d_hi = d_hi;
  report.certificates = parallel_map(ds, [&](std::size_t d) { return majorant_check(p, parity, d); });
  for (const auto& c : report.certificates)
    if (!passed(c.verdict)) report.failures.push_back(c.d);
  std::size_t first_pass = report.failures.empty() ? d_lo : report.failures.back() + 1;
  if (first_pass <= d_hi) report.threshold = first_pass;
  return report;
}

/// A finitely supported probability measure with exact atoms.
struct Atom {
  Rational value;
  Rational weight;
};

/// Spectral measure of K_{d+1}: d with weight 1/(d+1), -1 with weight d/(d+1).
inline std::vector<Atom> clique_measure(std::size_t d) {
  const Rational dd(static_cast<long long>(d));
  return {{dd, 1 / (dd + 1)}, {-1, dd / (dd + 1)}};
}

/// Spectral measure of K_{d,d}: ±d with weight 1/(2d) each, 0 with weight 1 - 1/d.
inline std::vector<Atom> bipartite_clique_measure(std::size_t d) {
  const Rational dd(static_cast<long long>(d));
  return {{dd, 1 / (2 * dd)}, {0, 1 - 1 / dd}, {-dd, 1 / (2 * dd)}};
}

inline Rational moment(const std::vector<Atom>& measure, int k) {
  Rational s = 0;
  for (const auto& a : measure) s += a.weight * rpow(a.value, k);
  return s;
}

/// E[p(X, d)] for X distributed by the measure.
inline Rational expectation(const BivarPoly& p, const std::vector<Atom>& measure, std::size_t d) {
  Rational s = 0;
  for (const auto& a : measure) s += a.weight * p.evaluate(a.value, Rational(static_cast<long long>(d)));
  return s;
}

}  // namespace homspec
