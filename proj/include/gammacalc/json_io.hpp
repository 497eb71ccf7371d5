#pragma once

#include <json.hpp>

#include "gammacalc/bounds.hpp"
#include "gammacalc/gamma.hpp"
#include "gammacalc/polynomial.hpp"
#include "gammacalc/simplicial.hpp"
#include "gammacalc/volume.hpp"

namespace gammacalc {

using Json = nlohmann::json;

/// Accepts "p", "p/q", "a.b" strings and plain JSON integers. Floats are
/// rejected: exactness is the product.
Rat rat_from_json(const Json& j);
Json rat_to_json(const Rat& q);

std::vector<Rat> rat_vector_from_json(const Json& j);
Json rat_vector_to_json(const std::vector<Rat>& v);

/// {"coeffs": ["1","4","1"], "formal_degree": 2}
Polynomial polynomial_from_json(const Json& j);
Json polynomial_to_json(const Polynomial& p);

/// {"entries": ["1","2"], "formal_degree": 2, "extended": false}
GammaVector gamma_vector_from_json(const Json& j);
Json gamma_vector_to_json(const GammaVector& g);

Json gamma_matrix_to_json(const GammaMatrix& m);

/// {"facets": [["1","2"],["1","3"],["2","3"]]}
SimplicialComplex complex_from_json(const Json& j);

Json fh_to_json(const FHVectors& fh);
Json identity_report_to_json(const IdentityReport& r);

/// {"r": 1, "quantity": "...", "claimed_sign": "...", "hypothesis": "...", "witness": "p/q"}
Json sign_claim_to_json(const SignClaim& c);

/// {"a": ["1","2","4"], "d": 2}
IntersectionSequence intersection_sequence_from_json(const Json& j);

Json aux_decomposition_to_json(const AuxDecomposition& a);
Json log_concavity_report_to_json(const LogConcavityReport& r);

}  // namespace gammacalc
