#pragma once

#include <json.hpp>

#include "corrineq/functional.hpp"
#include "corrineq/series.hpp"
#include "corrineq/spaces.hpp"

namespace corrineq {

// Instance schema:
//   {
//     "space": { "type": "chain", "N": 2, "mu": ["1/2", "1/2"] }
//            | { "type": "lattice", "ground_size": 2, "mu": [...] },
//     "functions": [ ["0", "1"], ... ],          // values per point
//     "series":    [ ["0", "1"], ... ]           // optional, p_1..p_T
//   }
// Rationals are strings "p/q" (or "p"); lattice points are listed in
// bitmask order 0..2^|X|-1. Round-trips are bit-exact.

nlohmann::json rationals_to_json(const std::vector<Rational>& v);
std::vector<Rational> rationals_from_json(const nlohmann::json& j);

nlohmann::json space_to_json(const Space& s);
Space space_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const Space& space, const std::vector<MonotoneFn>& fns);
FunctionalInstance instance_from_json(const nlohmann::json& j);

/// Reads the optional "series" array as p_1..p_T on the instance's space.
FunctionSeries function_series_from_json(const Space& space, const nlohmann::json& j);

}  // namespace corrineq
