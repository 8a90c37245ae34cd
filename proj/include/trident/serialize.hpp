#pragma once

// JSON encodings shared by the CLI and the Python bindings.
//
//   MultiPoly -> [[exp_w, exp_x, exp_y, exp_z, "coeff"], ...] in term order
//   UniPoly   -> ["c0", "c1", ...] ascending by degree

#include <json.hpp>

#include "trident/chebyshev.hpp"
#include "trident/identity_suite.hpp"
#include "trident/partition_oracle.hpp"
#include "trident/polyring.hpp"
#include "trident/sequence_engine.hpp"
#include "trident/specializations.hpp"
#include "trident/zero_locus.hpp"

namespace trident {

using json = nlohmann::json;

json to_json(const MultiPoly& p);
json to_json(const UniPoly& p);
MultiPoly multipoly_from_json(const json& j);
UniPoly unipoly_from_json(const json& j);

json to_json(const IdentityReport& r);
json to_json(const ChebyshevFormReport& r);
json to_json(const GfReport& r);
json to_json(const StructuralReport& r);
json to_json(const LocusReport& r);
json to_json(const CoefficientProfile& p);

}  // namespace trident
