#pragma once

#include "homspec/exact.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace homspec {

/// Exponent pair (power of lambda, power of d).
struct Monomial {
  int lambda = 0;
  int d = 0;

  int total() const noexcept { return lambda + d; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Polynomial in lambda and d with exact rational coefficients. Zero
/// coefficients are never stored.
class BivarPoly {
 public:
  BivarPoly() = default;

  static BivarPoly monomial(int lambda_exp, int d_exp, Rational coeff = 1) {
    BivarPoly p;
    p.add(Monomial{lambda_exp, d_exp}, coeff);
    return p;
  }

  static BivarPoly constant(Rational c) { return monomial(0, 0, std::move(c)); }

  void add(Monomial m, const Rational& c) {
    if (m.lambda < 0 || m.d < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.total());
    return deg;
  }

  int max_lambda_exponent() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.lambda);
    return deg;
  }

  /// Monomial of maximal total degree; ties go to the larger lambda exponent.
  Monomial leading() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading monomial");
    Monomial best = terms_.begin()->first;
    for (const auto& [m, c] : terms_)
      if (m.total() > best.total() || (m.total() == best.total() && m.lambda > best.lambda)) best = m;
    return best;
  }

  /// Number of monomials of maximal total degree.
  std::size_t top_degree_terms() const {
    int deg = degree();
    std::size_t count = 0;
    for (const auto& [m, c] : terms_)
      if (m.total() == deg) ++count;
    return count;
  }

  bool even_in_lambda() const {
    for (const auto& [m, c] : terms_)
      if (m.lambda % 2 != 0) return false;
    return true;
  }

  Rational evaluate(const Rational& lambda, const Rational& d) const {
    Rational sum = 0;
    for (const auto& [m, c] : terms_) sum += c * rpow(lambda, m.lambda) * rpow(d, m.d);
    return sum;
  }

  BivarPoly& operator+=(const BivarPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  BivarPoly& operator-=(const BivarPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  BivarPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(BivarPoly a, const Rational& s) { return a *= s; }
  friend BivarPoly operator*(const Rational& s, BivarPoly a) { return a *= s; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add({ma.lambda + mb.lambda, ma.d + mb.d}, ca * cb);
    return out;
  }
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

  /// Human-readable form, largest lambda exponent first, e.g. "l^5 - 5*l^3*d + 5*l^3".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      Rational mag = c < 0 ? Rational(-c) : c;
      out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      bool unit = mag == 1;
      std::string body;
      if (m.lambda > 0) body += m.lambda == 1 ? "l" : "l^" + std::to_string(m.lambda);
      if (m.d > 0) body += (body.empty() ? "" : "*") + (m.d == 1 ? std::string("d") : "d^" + std::to_string(m.d));
      if (body.empty()) out << (denominator(mag) == 1 ? numerator(mag).str() : homspec::to_string(mag));
      else if (unit) out << body;
      else out << (denominator(mag) == 1 ? numerator(mag).str() : "(" + homspec::to_string(mag) + ")") << "*" << body;
      first = false;
    }
    return out.str();
  }

 private:
  std::map<Monomial, Rational> terms_;
};

}  // namespace homspec
