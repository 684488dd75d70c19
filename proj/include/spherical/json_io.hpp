#pragma once

// JSON forms of the data types. Round trips are exact: integers that do
// not fit in 64 bits are written as decimal strings.

#include "spherical/characters.hpp"
#include "spherical/graded.hpp"
#include "spherical/report.hpp"
#include "spherical/root_datum.hpp"

#include <json.hpp>

namespace spherical {

using nlohmann::json;

json to_json(const BigInt& n);
BigInt bigint_from_json(const json& j);

json to_json(const Weight& w);
Weight weight_from_json(const json& j);

json to_json(const QPoly& p);  // [[exp, coeff], ...]
QPoly qpoly_from_json(const json& j);

json to_json(const LaurentCoeff& c);  // [[v_exp, x_exp, coeff], ...]
LaurentCoeff laurent_from_json(const json& j);

// {cartan, rank, sigma, simple_roots, simple_coroots, positive_roots, rho_b_times_2}
json to_json(const RootDatum& rd);
// Reads cartan, rank, sigma, simple_roots, simple_coroots; derived fields
// are recomputed and, when present, must agree.
RootDatum root_datum_from_json(const json& j);

// {grades: [{k, terms: [{mu: [...], coeff: [...]}]}], window: [lo, hi]}
json to_json(const HeckeElement& f);
HeckeElement hecke_from_json(const json& j);
// as above with "lambda" in place of "mu"
json to_json(const SatakeImage& f);
SatakeImage satake_from_json(const json& j);

json to_json(const IrrDecomp& d);  // [{lambda, mult}]
IrrDecomp irr_decomp_from_json(const json& j);

json to_json(const VerifyReport& r);

}  // namespace spherical
