#pragma once

// JSON renderings of results. Integers beyond 2^53 are written as strings.

#include <json.hpp>

#include "gkz/gfpoly.hpp"
#include "gkz/hasse.hpp"
#include "gkz/oracle.hpp"
#include "gkz/pweight.hpp"
#include "gkz/series0.hpp"
#include "gkz/solutions.hpp"

namespace gkz::json_io {

using nlohmann::json;

json integer(Int x);
json integer(const BigInt& x);
json vector(const std::vector<Int>& v);
json vectors(const std::vector<std::vector<Int>>& vs);

/// {"text": "...", "terms": [{"coef": c, "exps": [...]}, ...]}
json poly(const GfPoly& f);

/// {"exps": [...], "value": "num/den", "pi_exp": k}
json pi_term(const ExponentVector& exps, const PiRational& r);

json weight_report(const WeightReport& r);
json catalog(const GoodnessCatalog& c);
json solution_basis(const SolutionBasis& b);
json gamma_sequence(const GammaSequence& s);
json hasse(const HasseResult& r);
json series_report(const SeriesReport& r);
json oracle_report(const OracleReport& r);

}  // namespace gkz::json_io
