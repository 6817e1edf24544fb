#include "gkz/json_io.hpp"

#include <sstream>

namespace gkz::json_io {

namespace {
constexpr Int kExactDoubleLimit = Int{1} << 53;
}

json integer(Int x) {
  if (x > kExactDoubleLimit || x < -kExactDoubleLimit) return std::to_string(x);
  return x;
}

json integer(const BigInt& x) {
  if (x > kExactDoubleLimit || x < -kExactDoubleLimit) return x.str();
  return static_cast<Int>(x);
}

json vector(const std::vector<Int>& v) {
  json out = json::array();
  for (Int x : v) out.push_back(integer(x));
  return out;
}

json vectors(const std::vector<std::vector<Int>>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector(v));
  return out;
}

json poly(const GfPoly& f) {
  json terms = json::array();
  for (const auto& [u, c] : f.terms()) terms.push_back({{"coef", c}, {"exps", vector(u)}});
  return {{"text", f.to_string()}, {"terms", terms}};
}

json pi_term(const ExponentVector& exps, const PiRational& r) {
  std::ostringstream v;
  v << boost::multiprecision::numerator(r.value()) << '/' << boost::multiprecision::denominator(r.value());
  return {{"exps", vector(exps)}, {"value", v.str()}, {"pi_exp", r.pi_exp()}};
}

json weight_report(const WeightReport& r) {
  return {{"target", vector(r.target)},
          {"weight", integer(r.weight)},
          {"minimals", vectors(r.minimals)},
          {"cap_used", integer(r.cap_used)},
          {"status", to_string(r.status)}};
}

json catalog(const GoodnessCatalog& c) {
  json sigma = json::array();
  for (const auto& [g, rep] : c.sigma) sigma.push_back(weight_report(rep));
  return {{"residue_class", vector(c.residue_class)}, {"sigma", sigma}, {"tau", vectors(c.tau)}};
}

json solution_basis(const SolutionBasis& b) {
  json basis = json::array();
  for (const auto& e : b.elements) {
    json checks = {{"euler", e.euler_ok ? "ok" : "failed"},
                   {"box", e.box_ok ? "ok" : "failed"},
                   {"relations_tested", e.relations_tested}};
    if (e.classical_agrees) checks["classical_agrees"] = *e.classical_agrees;
    basis.push_back({{"gamma", vector(e.gamma)}, {"poly", poly(e.F)}, {"checks", checks}});
  }
  json very_good = json::array();
  for (const auto& g : b.very_good) {
    very_good.push_back({{"gamma", vector(g.gamma)},
                         {"poly", poly(g.G)},
                         {"checks",
                          {{"euler", g.euler_ok ? "ok" : "failed"},
                           {"classical_box", g.classical_box_ok ? "ok" : "failed"},
                           {"relations_tested", g.relations_tested}}}});
  }
  return {{"catalog", catalog(b.catalog)},
          {"basis", basis},
          {"very_good", very_good},
          {"disjoint_supports", b.disjoint_supports},
          {"passed", b.all_checks_pass()}};
}

json gamma_sequence(const GammaSequence& s) {
  return {{"gammas", vectors(s.gammas)}, {"weights", vector(s.weights)}, {"members", vectors(s.members)}};
}

json hasse(const HasseResult& r) {
  json out = {{"H", poly(r.H)},
              {"C", integer(r.C)},
              {"q", integer(r.q)},
              {"kind", r.affine ? "affine" : "toric"},
              {"empty", r.empty},
              {"verified", r.verified}};
  json classes = json::array();
  for (const auto& s : r.sequences) classes.push_back(gamma_sequence(s));
  out["classes"] = classes;
  if (r.affine) {
    json layers = json::array();
    for (const auto& L : r.layers) {
      json entry = {{"l", L.l}, {"size", L.size}, {"empty", L.empty}, {"selected", L.selected}};
      if (!L.empty) {
        entry["wp"] = integer(L.wp);
        entry["bound"] = integer(L.bound);
        entry["lemma_holds"] = L.lemma_holds;
      }
      layers.push_back(entry);
    }
    out["layers"] = layers;
    out["contributing_layers"] = r.contributing_layers;
  }
  if (!r.problems.empty()) out["problems"] = r.problems;
  return out;
}

json series_report(const SeriesReport& r) {
  json terms = json::array();
  for (const auto& [u, c] : r.series.terms) terms.push_back(pi_term(u, c));
  json scaled = json::array();
  for (const auto& [u, c] : r.scaled) scaled.push_back(pi_term(u, c));
  json profile = {{"v0", json::array()},
                  {"nsupp", r.series.profile.nsupp},
                  {"minimal", to_string(r.series.profile.minimal)}};
  for (const auto& x : r.series.profile.v0) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(x) << '/' << boost::multiprecision::denominator(x);
    profile["v0"].push_back(os.str());
  }
  if (r.series.profile.refuting_relation) profile["refuting_relation"] = vector(*r.series.profile.refuting_relation);
  return {{"profile", profile},
          {"weight", integer(r.weight)},
          {"terms", terms},
          {"scaled_terms", scaled},
          {"p_integral", r.integral},
          {"congruent", r.congruent},
          {"reduced", poly(r.reduced)},
          {"expected", poly(r.expected)},
          {"failures", r.failures},
          {"passed", r.passed()}};
}

json oracle_report(const OracleReport& r) {
  json out = {{"instance", r.instance}, {"checked", r.checked}, {"passed", r.passed}, {"failures", r.failures}};
  if (r.skipped) out["skipped"] = true;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

}  // namespace gkz::json_io
