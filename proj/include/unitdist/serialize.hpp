#pragma once

#include <json.hpp>
#include <string>

#include "unitdist/density.hpp"
#include "unitdist/tower.hpp"
#include "unitdist/verifier.hpp"
#include "unitdist/witness.hpp"

namespace unitdist {

using Json = nlohmann::ordered_json;

// Standalone tower element: {"tower": [radicand encodings, innermost first],
// "coeffs": nested ["num/den" | [lo, hi]]}. Bit-exact round-trip.
Json to_json(const TowerElem& e);
TowerElem tower_elem_from_json(const nlohmann::json& j);

Json to_json(const WitnessSet& s);
WitnessSet witness_from_json(const nlohmann::json& j);

Json to_json(const PointMap& m);
PointMap point_map_from_json(const nlohmann::json& j);

Json to_json(const VerificationReport& r);

Json to_json(const ApproximationResult& r);

std::string to_dot(const WitnessSet& s);
std::string to_svg(const WitnessSet& s);

// Decimal rendering of the exact value, certified to `digits` places.
std::string decimal_of(const TowerElem& e, unsigned digits);

}  // namespace unitdist
