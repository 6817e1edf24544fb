#include "gkz/commands.hpp"

#include <sstream>

#include "gkz/acceptance.hpp"
#include "gkz/hasse.hpp"
#include "gkz/json_io.hpp"
#include "gkz/kloosterman.hpp"
#include "gkz/oracle.hpp"
#include "gkz/problem.hpp"
#include "gkz/series0.hpp"
#include "gkz/solutions.hpp"

namespace gkz {

namespace {

using nlohmann::json;

struct Report {
  json body;
  std::string text;
  bool ok = true;
};

std::string yes_no(bool b) { return b ? "ok" : "FAILED"; }

Report do_solutions(const ProblemSpec& s) {
  if (!s.beta) throw InputError("the solutions command needs beta");
  SolutionBasis b = solution_basis(s.aset(), *s.beta, s.p, s.caps.weight_cap, s.caps.relation_norm_cap);
  Report r;
  r.ok = b.all_checks_pass();
  r.body = json_io::solution_basis(b);
  std::ostringstream os;
  os << "good points: " << b.catalog.sigma.size() << ", very good: " << b.catalog.tau.size() << "\n";
  for (const auto& e : b.elements) {
    os << "F" << to_string(e.gamma) << " = " << e.F.to_string() << "  [euler " << yes_no(e.euler_ok) << ", box "
       << yes_no(e.box_ok) << ", " << e.relations_tested << " relations]\n";
  }
  for (const auto& g : b.very_good) {
    os << "G" << to_string(g.gamma) << " = " << g.G.to_string() << "  [euler " << yes_no(g.euler_ok)
       << ", classical box " << yes_no(g.classical_box_ok) << "]\n";
  }
  os << "supports disjoint: " << (b.disjoint_supports ? "yes" : "no") << "\n";
  r.text = os.str();
  return r;
}

Report do_hasse(const ProblemSpec& s) {
  const ASet A = s.aset();
  HasseResult h = hasse(A, s.e, s.p, s.a, s.m, s.caps.weight_cap);
  Report r;
  r.ok = h.verified;
  r.body = json_io::hasse(h);
  std::optional<std::string> label;
  if (!h.affine && A.dim() == 1) label = kloosterman::case_label(A, s.p, s.a, s.e[0]);
  if (label) r.body["kloosterman_case"] = *label;
  std::ostringstream os;
  os << (h.affine ? "affine" : "toric") << " sum, q=" << h.q << "\n";
  if (h.empty) {
    os << "U_M is empty; H = 0\n";
  } else {
    os << "H = " << h.H.to_string() << "\nC = " << h.C << "\n";
  }
  if (label) os << "Kloosterman case: " << *label << "\n";
  for (const auto& L : h.layers) {
    os << "layer " << L.l << ": ";
    if (L.empty) {
      os << "empty\n";
    } else {
      os << "wp=" << L.wp << " bound=" << L.bound << (L.selected ? " selected" : "") << "\n";
    }
  }
  for (const auto& p : h.problems) os << "problem: " << p << "\n";
  os << "verified: " << (h.verified ? "yes" : "no") << "\n";
  r.text = os.str();
  return r;
}

Report do_series(const ProblemSpec& s) {
  if (!s.u0) throw InputError("the series command needs u0");
  const ASet A = s.aset();
  const LatticeVector gamma = s.gamma ? *s.gamma : A.combine(*s.u0);
  SeriesReport rep = verify_truncation_congruence(*s.u0, gamma, A, s.p, s.caps.weight_cap);
  Report r;
  r.ok = rep.passed();
  r.body = json_io::series_report(rep);
  r.body["gamma"] = json_io::vector(gamma);
  std::ostringstream os;
  os << "gamma = " << to_string(gamma) << ", w = " << rep.weight << "\n";
  os << "negative support minimal: " << to_string(rep.series.profile.minimal) << "\n";
  for (const auto& [u, c] : rep.series.terms) os << "  " << to_string(u) << ": " << c.to_string() << "\n";
  os << "p-integral after scaling: " << (rep.integral ? "yes" : "no") << "\n";
  os << "reduction = " << rep.reduced.to_string() << "\n";
  os << "expected  = " << rep.expected.to_string() << "\n";
  os << "congruent: " << (rep.congruent ? "yes" : "no") << "\n";
  for (const auto& f : rep.failures) os << "failure: " << f << "\n";
  r.text = os.str();
  return r;
}

HypersurfaceSpec hypersurface(const ProblemSpec& s) {
  HypersurfaceSpec h;
  h.p = s.p;
  h.n = s.n;
  h.monomials = s.A;
  if (s.lambda) h.lambda = *s.lambda;
  return h;
}

Report do_oracle(const ProblemSpec& s) {
  if (!s.oracle) throw InputError("the oracle command needs an oracle name in the spec");
  const std::string& which = *s.oracle;
  OracleReport rep;
  json extra = json::object();
  if (which == "example3") {
    PointCountCheck c = example3_check(hypersurface(s), s.caps.weight_cap, s.caps.oracle_budget);
    rep = c.report;
    if (c.hasse) extra["hasse"] = json_io::hasse(*c.hasse);
  } else if (which == "katz") {
    rep = katz_coefficient_check(hypersurface(s), s.caps.weight_cap);
  } else if (which == "legendre") {
    rep = legendre_check(s.p);
    extra["hasse"] = json_io::poly(legendre_hasse(s.p));
  } else {
    rep = naive_crosscheck(s.aset(), s.e, s.p, s.a, s.m, s.caps.oracle_budget);
  }
  Report r;
  r.ok = rep.ok();
  r.body = json_io::oracle_report(rep);
  r.body["oracle"] = which;
  for (auto& [k, v] : extra.items()) r.body[k] = v;
  std::ostringstream os;
  os << rep.instance << "\n";
  if (rep.skipped) os << "skipped: " << rep.note << "\n";
  os << rep.passed << "/" << rep.checked << " checks passed\n";
  for (const auto& f : rep.failures) os << "failure: " << f << "\n";
  r.text = os.str();
  return r;
}

Report do_corpus(const CommandOptions& opts) {
  auto results = acceptance::run(opts.criteria);
  Report r;
  r.body = json::array();
  std::ostringstream os;
  for (const auto& c : results) {
    // correctness only: timings would break byte-identical output
    const bool ok = c.checks > 0 && c.failures == 0;
    r.ok &= ok;
    r.body.push_back({{"id", c.id}, {"title", c.title}, {"checks", c.checks}, {"failures", c.failures},
                      {"passed", ok}, {"details", c.details}});
    os << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << ": " << c.checks << " checks, " << c.failures
       << " failures\n";
    for (const auto& d : c.details) os << "    " << d << "\n";
  }
  r.text = os.str();
  return r;
}

}  // namespace

int run_command(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.format != "json" && opts.format != "text") {
    err << "error: unknown format " << opts.format << "\n";
    return kExitInputError;
  }
  try {
    Report r;
    if (opts.command == "corpus") {
      r = do_corpus(opts);
    } else {
      ProblemSpec spec = load_problem(opts.spec_path);
      for (const auto& o : opts.cap_overrides) apply_cap_override(spec, o);
      if (opts.command == "solutions") {
        r = do_solutions(spec);
      } else if (opts.command == "hasse") {
        r = do_hasse(spec);
      } else if (opts.command == "series") {
        r = do_series(spec);
      } else if (opts.command == "oracle") {
        r = do_oracle(spec);
      } else {
        err << "error: unknown command " << opts.command << "\n";
        return kExitInputError;
      }
      if (r.body.is_object()) {
        r.body = json{{"command", opts.command}, {"spec", spec.name}, {"passed", r.ok}, {"result", r.body}};
      }
    }
    if (opts.format == "json") {
      out << r.body.dump(2) << "\n";
    } else {
      out << r.text;
    }
    return r.ok ? kExitOk : kExitCheckFailed;
  } catch (const InputError& ex) {
    err << "input error: " << ex.what() << "\n";
    return kExitInputError;
  } catch (const CapExhausted& ex) {
    err << "cap exhausted: " << ex.what() << "\n";
    return kExitInputError;
  } catch (const std::overflow_error& ex) {
    err << "overflow: " << ex.what() << "\n";
    return kExitInputError;
  } catch (const ConsistencyError& ex) {
    err << "check failed: " << ex.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace gkz
