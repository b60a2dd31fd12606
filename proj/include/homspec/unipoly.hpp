#pragma once

#include "homspec/exact.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homspec {

/// Polynomial in one variable y with exact rational coefficients; coeffs()[i]
/// multiplies y^i and the leading coefficient is never zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(Rational v) { return UniPoly({std::move(v)}); }
  static UniPoly monomial(int exp, Rational coeff = 1) {
    std::vector<Rational> c(static_cast<std::size_t>(exp) + 1, 0);
    c.back() = std::move(coeff);
    return UniPoly(std::move(c));
  }
  /// y - root
  static UniPoly linear_factor(const Rational& root) { return UniPoly({-root, 1}); }

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Rational coefficient(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Rational(0);
  }
  const Rational& leading() const {
    if (c_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return c_.back();
  }

  Rational operator()(const Rational& y) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + *it;
    return acc;
  }

  UniPoly derivative() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * static_cast<long long>(i));
    return UniPoly(std::move(out));
  }

  /// Quotient and remainder of polynomial long division.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (degree() < divisor.degree()) return {UniPoly(), *this};
    std::vector<Rational> rem = c_;
    std::vector<Rational> quo(c_.size() - divisor.c_.size() + 1, 0);
    const std::size_t dd = divisor.c_.size() - 1;
    for (std::size_t i = quo.size(); i-- > 0;) {
      Rational f = rem[i + dd] / divisor.leading();
      quo[i] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= f * divisor.c_[j];
    }
    rem.resize(dd);
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
  }

  /// Scales by a positive constant so the coefficients are coprime integers.
  UniPoly primitive() const {
    if (is_zero()) return *this;
    Integer lcm_den = 1, gcd_num = 0;
    for (const auto& x : c_) {
      lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
      gcd_num = boost::multiprecision::gcd(gcd_num, numerator(x));
    }
    return *this * Rational(lcm_den, gcd_num < 0 ? Integer(-gcd_num) : gcd_num);
  }

  UniPoly monic() const { return is_zero() ? *this : *this * (Rational(1) / leading()); }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) { return *this += o * Rational(-1); }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) {
    for (auto& x : a.c_) x *= s;
    a.trim();
    return a;
  }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return std::move(a) * s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(out));
  }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      Rational mag = c_[i] < 0 ? Rational(-c_[i]) : c_[i];
      out << (first ? (c_[i] < 0 ? "-" : "") : (c_[i] < 0 ? " - " : " + "));
      std::string num = denominator(mag) == 1 ? numerator(mag).str() : "(" + homspec::to_string(mag) + ")";
      std::string var = i == 0 ? "" : i == 1 ? "y" : "y^" + std::to_string(i);
      if (var.empty()) out << (denominator(mag) == 1 ? numerator(mag).str() : homspec::to_string(mag));
      else if (mag == 1) out << var;
      else out << num << "*" << var;
      first = false;
    }
    return out.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

inline UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = r.primitive();
  }
  return a.monic();
}

/// p / gcd(p, p'): same distinct roots, all simple.
inline UniPoly square_free_part(const UniPoly& p) {
  if (p.degree() <= 0) return p;
  return p.divmod(gcd(p, p.derivative())).first;
}

/// Sturm chain of a square-free polynomial; members are scaled by positive
/// constants to keep coefficients small, which leaves sign counts unchanged.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
    chain_.push_back(square_free_part(p).primitive());
    if (chain_[0].degree() <= 0) return;
    chain_.push_back(chain_[0].derivative().primitive());
    while (true) {
      auto r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back((r * Rational(-1)).primitive());
    }
  }

  const UniPoly& base() const { return chain_.front(); }

  /// Sign changes at y, zeros skipped.
  int variations(const Rational& y) const {
    int count = 0, last = 0;
    for (const auto& s : chain_) {
      int sg = sign(s(y));
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  }

  /// Distinct real roots in the half-open interval (a, b].
  int roots_in(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

 private:
  std::vector<UniPoly> chain_;
};

/// An isolated real root: lo < root < hi, or lo == hi == root when the root
/// was hit exactly.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

namespace detail {

/// Appends isolating intervals for the roots of chain.base() in the open
/// interval (lo, hi); requires base(hi) != 0.
inline void isolate(const SturmChain& chain, const Rational& lo, const Rational& hi, std::vector<RootInterval>& out) {
  const int count = chain.roots_in(lo, hi);
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (chain.base()(mid) != 0) {
    isolate(chain, lo, mid, out);
    isolate(chain, mid, hi, out);
    return;
  }
  // Rational root at mid: shrink a window around it until it holds no other root.
  Rational delta = (hi - lo) / 4;
  while (chain.base()(mid - delta) == 0 || chain.base()(mid + delta) == 0 ||
         chain.roots_in(mid - delta, mid + delta) != 1)
    delta /= 2;
  isolate(chain, lo, mid - delta, out);
  out.push_back({mid, mid});
  isolate(chain, mid + delta, hi, out);
}

}  // namespace detail

/// Isolating intervals for the distinct roots of p strictly inside (a, b),
/// in increasing order, each refined to width below 2^-20.
inline std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("isolate_roots needs a < b");
  SturmChain chain(p);
  const auto& f = chain.base();
  Rational hi = b;
  if (f(b) == 0) {
    Rational delta = (b - a) / 2;
    while (f(b - delta) == 0 || chain.roots_in(b - delta, b) != 1) delta /= 2;
    hi = b - delta;
  }
  std::vector<RootInterval> out;
  detail::isolate(chain, a, hi, out);
  const Rational width = Rational(1, 1 << 20);
  for (auto& r : out) {
    while (!r.exact() && r.hi - r.lo >= width) {
      Rational mid = (r.lo + r.hi) / 2;
      int sm = sign(f(mid));
      // f(hi) is never zero here while f(lo) can be when lo == a.
      if (sm == 0) r.lo = r.hi = mid;
      else if (sm == sign(f(r.hi))) r.hi = mid;
      else r.lo = mid;
    }
  }
  return out;
}

struct PositivityVerdict {
  bool holds = false;
  std::size_t interior_roots = 0;
  bool boundary_zero = false;
  std::optional<RootInterval> witness_root;
  std::optional<Rational> negative_point;
};

/// Exact test of r > 0 on (a, b) (open) or r >= 0 on [a, b] (closed). On
/// failure reports the first interior root, refined to width below 2^-20,
/// and a rational point where r < 0 if one exists.
inline PositivityVerdict sturm_nonneg_on_interval(const UniPoly& r, const Rational& a, const Rational& b,
                                                  bool open) {
  if (r.is_zero()) throw std::invalid_argument("positivity test of the zero polynomial");
  if (!(a < b)) throw std::invalid_argument("positivity test needs a < b");
  PositivityVerdict v;
  auto roots = isolate_roots(r, a, b);
  v.interior_roots = roots.size();
  if (!roots.empty()) v.witness_root = roots.front();
  v.boundary_zero = r(a) == 0 || r(b) == 0;

  // Sign is constant between isolating intervals, so these samples see
  // every sign r takes on the open interval.
  std::vector<Rational> samples;
  Rational prev = a;
  for (const auto& iv : roots) {
    samples.push_back((prev + iv.lo) / 2);
    if (!iv.exact()) samples.push_back(iv.lo);
    prev = iv.hi;
  }
  samples.push_back((prev + b) / 2);
  for (const auto& iv : roots)
    if (!iv.exact()) samples.push_back(iv.hi);
  for (const auto& y : samples)
    if (r(y) < 0 && (!v.negative_point || y < *v.negative_point)) v.negative_point = y;

  if (open) {
    v.holds = roots.empty() && r((a + b) / 2) > 0;
  } else {
    v.holds = !v.negative_point && r(a) >= 0 && r(b) >= 0;
  }
  return v;
}

}  // namespace homspec
