#pragma once

#include <vector>

#include "json.hpp"

#include "alcove.hpp"
#include "bwb.hpp"
#include "coinv.hpp"
#include "fusion.hpp"
#include "liecore.hpp"
#include "sod.hpp"
#include "verify.hpp"

// Canonical JSON forms for the domain types.  Conventions: objects carry
// lexicographically sorted keys (the nlohmann default map backing);
// arbitrary-precision integers are decimal strings; bounded structural
// integers (weights, degrees, exponents, ranks) are JSON numbers; the only
// floating values are trig cross-checks, marked with "approx": true.
namespace bunblocks::jsonio {

using json = nlohmann::json;

// [[weight, "multiplicity"], ...] ascending by weight.
json character_json(const liecore::SL2Character& c);

// [[highest weight, "multiplicity"], ...] in peeling order (descending).
json decomposition_json(const liecore::Decomposition& d);

// {"regular": bool, "length": n, "reduced": [...]} (+ "word" for the BFS route).
json alcove_json(const alcove::AlcoveClass& c, bool with_word);

// Rows of decimal strings.
json matrix_json(const fusion::IntMatrix& m);

// {"vanishes": true} or {"vanishes": false, "degree": n, "dim": "..."}.
json cohomology_json(const bwb::CohomologyAnswer& a);

// {"top_degree": n, "pieces": [...], "total_character": [...], ...}.
json graded_module_json(const coinv::GradedModule& m);

// {"variant": ..., "type": ..., "genus": ..., "xi_parity": ..., "blocks": [...]}.
json block_table_json(const sod::BlockTable& t);

// [[p, q, "h^{p,q}"], ...] ascending by (p, q).
json hodge_json(const sod::HodgePolynomial& h);

// {"str": "2s^-1+4+2s", "coeffs": [[exponent, "coefficient"], ...]}.
json hh_json(const sod::HHPolynomial& h);

// [{"id": 1, "description": ..., "pass": ..., "detail": ..., "ms": n}, ...].
json criteria_json(const std::vector<verify::CriterionResult>& rs);

} // namespace bunblocks::jsonio
