#pragma once

#include "homspec/bivar_poly.hpp"
#include "homspec/bounds.hpp"
#include "homspec/exact.hpp"
#include "homspec/harness.hpp"
#include "homspec/optimize.hpp"
#include "homspec/spectral.hpp"
#include "homspec/unipoly.hpp"

#include <json.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace homspec {

// nlohmann::json objects are std::map backed, so keys always come out sorted.
using Json = nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline Json rational_json(const Rational& r) { return to_string(r); }

inline Json optional_rational_json(const std::optional<Rational>& r) {
  return r ? rational_json(*r) : Json(nullptr);
}

/// [[k, j, numerator, denominator], ...] for c·λ^k·d^j, in monomial order.
inline Json coefficients_json(const BivarPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms())
    out.push_back({m.lambda, m.d, integer_json(numerator(c)), integer_json(denominator(c))});
  return out;
}

inline Json poly_json(const BivarPoly& p) {
  return {{"schema", "homspec.poly/1"}, {"coefficients", coefficients_json(p)}, {"text", p.to_string()}};
}

/// Reads the "coefficients" list of a polynomial or certificate document.
inline BivarPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coefficients"))
    throw std::invalid_argument("polynomial document needs a \"coefficients\" list");
  BivarPoly p;
  for (const auto& term : j.at("coefficients")) {
    if (!term.is_array() || term.size() != 4) throw std::invalid_argument("coefficient entries are [k, j, num, den]");
    Integer den = integer_from_json(term[3]);
    if (den == 0) throw std::invalid_argument("zero denominator in coefficient");
    p.add({term[0].get<int>(), term[1].get<int>()}, Rational(integer_from_json(term[2]), den));
  }
  return p;
}

/// Coefficients by ascending exponent.
inline Json unipoly_json(const UniPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(rational_json(c));
  return {{"coefficients", coeffs}, {"text", p.to_string()}};
}

inline Json certificate_json(const BoundCertificate& cert) {
  Json steps = Json::array();
  for (const auto& s : cert.steps)
    steps.push_back({{"depth", s.depth},
                     {"rule", s.rule},
                     {"pattern", s.pattern},
                     {"multiplicity", integer_json(s.multiplicity)},
                     {"relation", s.relation},
                     {"sharp_at_clique", s.sharp_at_clique}});
  Json equality = Json::array();
  for (const auto& e : cert.equality_report)
    equality.push_back({{"d", e.d},
                        {"clique", e.clique},
                        {"bound_sum", rational_json(e.bound_sum)},
                        {"inj", integer_json(e.inj)},
                        {"gap", rational_json(e.gap)}});
  return {{"schema", "homspec.bound/1"},
          {"pattern", write_graph6(cert.pattern)},
          {"unicyclic_subgraph", write_graph6(cert.unicyclic)},
          {"coefficients", coefficients_json(cert.poly)},
          {"text", cert.poly.to_string()},
          {"parity", to_string(cert.parity)},
          {"anchor_k", cert.anchor_k},
          {"exact", cert.exact},
          {"shape_ok", has_bound_shape(cert)},
          {"steps", steps},
          {"equality_report", equality}};
}

inline Json gap_json(const GapEntry& e) {
  return {{"graph6", e.graph6},
          {"bound_sum", rational_json(e.bound_sum)},
          {"inj", integer_json(e.inj)},
          {"gap", rational_json(e.gap)}};
}

inline Json verify_json(const VerifyReport& r) {
  Json gaps = Json::array();
  for (const auto& e : r.gaps) gaps.push_back(gap_json(e));
  return {{"schema", "homspec.verify/1"},
          {"d", r.d},
          {"gaps", gaps},
          {"anchor", gap_json(r.anchor)},
          {"negative", r.negative},
          {"min_gap", rational_json(r.min_gap())}};
}

inline Json majorant_json(const MajorantCertificate& c) {
  Json contacts = Json::array();
  for (const auto& k : c.designed_contacts)
    contacts.push_back({{"point", rational_json(k.point)}, {"multiplicity", k.multiplicity}});
  Json witness_interval = nullptr;
  if (c.witness_root) witness_interval = {rational_json(c.witness_root->lo), rational_json(c.witness_root->hi)};
  return {{"schema", "homspec.majorant/1"},
          {"source", coefficients_json(c.source)},
          {"d", c.d},
          {"parity", to_string(c.parity)},
          {"q", unipoly_json(c.q)},
          {"majorant", unipoly_json(c.majorant)},
          {"contacts", contacts},
          {"extra_contact_order", c.extra_contact_order},
          {"residual", unipoly_json(c.residual)},
          {"domain", {rational_json(c.domain_lo), rational_json(c.domain_hi)}},
          {"verdict", to_string(c.verdict)},
          {"witness", optional_rational_json(c.witness)},
          {"witness_interval", witness_interval}};
}

inline Json threshold_json(const ThresholdReport& r) {
  Json certs = Json::array();
  Json verdicts = Json::object();
  for (const auto& c : r.certificates) {
    certs.push_back(majorant_json(c));
    verdicts[std::to_string(c.d)] = to_string(c.verdict);
  }
  return {{"schema", "homspec.threshold/1"},
          {"source", coefficients_json(r.source)},
          {"text", r.source.to_string()},
          {"parity", to_string(r.parity)},
          {"d_range", {r.d_lo, r.d_hi}},
          {"threshold", r.threshold ? Json(*r.threshold) : Json(nullptr)},
          {"fail", r.failures},
          {"verdicts", verdicts},
          {"scope", ThresholdReport::scope},
          {"certificates", certs}};
}

inline Json density_entry_json(const DensityEntry& e) {
  return {{"graph6", e.graph6},
          {"order", e.order},
          {"inj", integer_json(e.inj)},
          {"density", rational_json(e.density)},
          {"name", e.name ? Json(*e.name) : Json(nullptr)}};
}

inline Json search_json(const SearchReport& r, bool include_table) {
  Json maximizers = Json::array();
  for (const auto& e : r.maximizers) maximizers.push_back(density_entry_json(e));
  Json out = {{"schema", "homspec.search/1"},
              {"pattern", r.pattern},
              {"d", r.d},
              {"n_range", {r.n_min, r.n_max}},
              {"connected_only", r.connected_only},
              {"corpus", r.corpus},
              {"graphs_scanned", r.per_graph.size()},
              {"best_density", rational_json(r.best_density)},
              {"maximizers", maximizers},
              {"runner_up_density", optional_rational_json(r.runner_up_density)},
              {"moebius_spot_checks", r.spot_checks}};
  if (include_table) {
    Json table = Json::array();
    for (const auto& e : r.per_graph) table.push_back(density_entry_json(e));
    out["per_graph_table"] = table;
  }
  return out;
}

inline Json examples_json(const PaperReport& r) {
  Json examples = Json::array();
  for (const auto& e : r.examples)
    examples.push_back({{"name", e.name}, {"graph6", e.graph6}, {"d", e.d}, {"density", rational_json(e.density)}});
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"schema", "homspec.examples/1"}, {"examples", examples}, {"checks", checks}, {"passed", r.all_passed()}};
}

inline Json spectrum_json(const Graph& g, const SpectralMoments& m, const SpectralMeasure& s) {
  Json traces = Json::array();
  for (const auto& t : m.traces) traces.push_back(integer_json(t));
  Json eig = Json::array();
  for (const auto& e : s.eigenvalues) eig.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  return {{"schema", "homspec.spectrum/1"},
          {"graph6", write_graph6(g)},
          {"order", g.order()},
          {"regular_degree", m.degree ? Json(*m.degree) : Json(nullptr)},
          {"traces", traces},
          {"eigenvalues", eig},
          {"tolerance", s.tolerance}};
}

}  // namespace homspec
