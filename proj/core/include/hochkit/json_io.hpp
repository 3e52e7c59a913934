#pragma once

#include <string>
#include <string_view>

#include "hochkit/hkr.hpp"
#include "hochkit/multiop.hpp"
#include "hochkit/multivector.hpp"
#include "hochkit/polynomial.hpp"
#include "hochkit/sder.hpp"

namespace hochkit {

// JSON forms (strict: unknown fields are rejected on input).
//   polynomial: [{"exps": [int], "num": "string", "den": "string"}, ...]
//   operator:   {"vars": m, "arity": n,
//                "terms": [{"coeff": <polynomial>, "slots": [[int]]}]}
//   multivector:{"vars": m, "degree": n,
//                "components": [{"index": [1-based ints], "coeff": <polynomial>}]}
//   decomposition: {"order": r, "words": [{"scalar": "p/q",
//                   "factors": [[<polynomial> x m], ...]}]}
//   cohomology report: {"window": {"m","n","r","d","slack"}, "dims": [int],
//                "basis_sizes": [int], "hkr_prediction": [int], "match": bool}
//   split:      {"e": <operator>, "eta": <multivector>}
// Serialization is canonical (terms in their container order, keys sorted),
// so equal values produce identical bytes.

std::string polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(std::string_view text, int vars);

std::string op_to_json(const MultiDiffOp& d);
MultiDiffOp op_from_json(std::string_view text);

std::string mvf_to_json(const MultiVectorField& f);

std::string decomposition_to_json(const SDerDecomposition& dec);

std::string report_to_json(const CohomologyReport& rep);

std::string split_to_json(const CocycleSplit& s);

}  // namespace hochkit
