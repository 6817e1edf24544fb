#include "gkz/problem.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "gkz/modp.hpp"

namespace gkz {

namespace {

using nlohmann::json;

Int as_int(const json& v, const std::string& what) {
  if (v.is_number_integer()) return v.get<Int>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    std::size_t used = 0;
    try {
      Int x = std::stoll(s, &used);
      if (used == s.size()) return x;
    } catch (const std::exception&) {
    }
    throw InputError(what + ": integer out of range or malformed: " + s);
  }
  throw InputError(what + ": expected an integer");
}

std::vector<Int> as_vector(const json& v, const std::string& what) {
  if (!v.is_array()) throw InputError(what + ": expected an array");
  std::vector<Int> out;
  for (const auto& x : v) out.push_back(as_int(x, what));
  return out;
}

std::size_t as_size(const json& v, const std::string& what) {
  Int x = as_int(v, what);
  if (x < 0) throw InputError(what + " must be nonnegative");
  return static_cast<std::size_t>(x);
}

}  // namespace

Int default_weight_cap(std::uint32_t p, unsigned a, std::size_t N) {
  return checked_mul(checked_mul(4 * static_cast<Int>(a), static_cast<Int>(N)), static_cast<Int>(p) - 1);
}

ASet ProblemSpec::aset() const { return ASet(A); }

void ProblemSpec::validate() const {
  if (!is_prime(p)) throw InputError("p must be prime");
  if (p >= (1u << 31)) throw InputError("p too large");
  if (a < 1) throw InputError("extension degree a must be at least 1");
  checked_pow(p, a);
  const bool needs_A = !(oracle && *oracle == "legendre");
  if (needs_A) {
    if (A.empty()) throw InputError("A must contain at least one generator");
    if (n == 0) throw InputError("n must be positive");
    for (const auto& g : A) {
      if (g.size() != n) throw InputError("generator " + to_string(g) + " does not have n coordinates");
    }
  }
  if (m > n) throw InputError("toric count m exceeds n");
  if (e.size() != n) throw InputError("twist e must have n coordinates");
  for (std::size_t j = m; j < n; ++j) {
    if (e[j] != 0) throw InputError("twist must vanish in affine coordinates");
  }
  if (beta && beta->size() != n) throw InputError("beta must have n coordinates");
  if (gamma && gamma->size() != n) throw InputError("gamma must have n coordinates");
  if (u0 && u0->size() != A.size()) throw InputError("u0 must have N entries");
  if (lambda && lambda->size() != A.size()) throw InputError("lambda must have N entries");
  if (caps.weight_cap < 0) throw InputError("weight_cap must be nonnegative");
  if (caps.relation_norm_cap && *caps.relation_norm_cap < 0) throw InputError("relation_norm_cap must be nonnegative");
  if (oracle) {
    const std::string& o = *oracle;
    if (o != "example3" && o != "katz" && o != "legendre" && o != "crosscheck") {
      throw InputError("unknown oracle: " + o);
    }
  }
}

ProblemSpec parse_problem(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw InputError(std::string("malformed JSON: ") + ex.what());
  }
  if (!j.is_object()) throw InputError("spec must be a JSON object");
  ProblemSpec s;
  s.name = j.value("name", std::string());
  if (!j.contains("p")) throw InputError("spec lacks p");
  Int p = as_int(j["p"], "p");
  if (p < 2 || p > std::numeric_limits<std::uint32_t>::max()) throw InputError("p out of range");
  s.p = static_cast<std::uint32_t>(p);
  if (j.contains("a")) {
    Int a = as_int(j["a"], "a");
    if (a < 1 || a > 64) throw InputError("extension degree a out of range");
    s.a = static_cast<unsigned>(a);
  }
  if (j.contains("A")) {
    if (!j["A"].is_array()) throw InputError("A must be an array of rows");
    for (const auto& row : j["A"]) s.A.push_back(as_vector(row, "A"));
  }
  if (j.contains("n")) {
    s.n = as_size(j["n"], "n");
  } else if (!s.A.empty()) {
    s.n = s.A.front().size();
  } else {
    s.n = 1;
  }
  if (j.contains("N") && as_size(j["N"], "N") != s.A.size()) throw InputError("N differs from the number of rows of A");
  s.m = j.contains("m") ? as_size(j["m"], "m") : s.n;
  s.e = j.contains("e") ? as_vector(j["e"], "e") : LatticeVector(s.n, 0);
  if (j.contains("beta")) s.beta = as_vector(j["beta"], "beta");
  if (j.contains("gamma")) s.gamma = as_vector(j["gamma"], "gamma");
  if (j.contains("u0")) s.u0 = as_vector(j["u0"], "u0");
  if (j.contains("oracle")) {
    if (!j["oracle"].is_string()) throw InputError("oracle must be a string");
    s.oracle = j["oracle"].get<std::string>();
  }
  if (j.contains("lambda")) {
    std::vector<std::uint32_t> lam;
    for (Int x : as_vector(j["lambda"], "lambda")) lam.push_back(mod(x, s.p));
    s.lambda = lam;
  }
  s.caps.weight_cap = default_weight_cap(s.p, s.a, std::max<std::size_t>(s.A.size(), 1));
  if (j.contains("caps")) {
    const auto& c = j["caps"];
    if (!c.is_object()) throw InputError("caps must be an object");
    if (c.contains("weight_cap")) s.caps.weight_cap = as_int(c["weight_cap"], "weight_cap");
    if (c.contains("relation_norm_cap")) s.caps.relation_norm_cap = as_int(c["relation_norm_cap"], "relation_norm_cap");
    if (c.contains("oracle_budget")) {
      Int b = as_int(c["oracle_budget"], "oracle_budget");
      if (b <= 0) throw InputError("oracle_budget must be positive");
      s.caps.oracle_budget = static_cast<std::uint64_t>(b);
    }
  }
  s.validate();
  return s;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

void apply_cap_override(ProblemSpec& spec, const std::string& assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string::npos) throw InputError("cap override must look like key=value");
  const std::string key = assignment.substr(0, eq);
  Int value = as_int(json(assignment.substr(eq + 1)), key);
  if (value < 0) throw InputError("cap values must be nonnegative");
  if (key == "weight_cap") {
    spec.caps.weight_cap = value;
  } else if (key == "relation_norm_cap") {
    spec.caps.relation_norm_cap = value;
  } else if (key == "oracle_budget") {
    if (value == 0) throw InputError("oracle_budget must be positive");
    spec.caps.oracle_budget = static_cast<std::uint64_t>(value);
  } else {
    throw InputError("unknown cap: " + key);
  }
}

}  // namespace gkz
