#pragma once

#include <string>

#include <json.hpp>

#include "wmink/body.hpp"
#include "wmink/density.hpp"
#include "wmink/minkowski_solver.hpp"
#include "wmink/shephard.hpp"
#include "wmink/surface_measure.hpp"

namespace wmink {

using Json = nlohmann::json;

/// Schema: {"kind":"lebesgue"|"abs_linear"|"power_cone"|"gaussian",
///          "theta":[...], "inv_p":number, "half_space_normal":[...]}.
/// Violations raise DomainError carrying a JSON-pointer path.
WeightedDensity density_from_json(const Json& j);
Json density_to_json(const WeightedDensity& d);

/// Schema: {"normals":[[...]], "offsets":[...]} or {"generators":[[...]]}.
SymmetricPolytope body_from_json(const Json& j);
Json body_to_json(const SymmetricPolytope& P);

/// Schema: {"density":{...}, "normals":[[...]], "targets":[...]}.
MinkowskiProblem problem_from_json(const Json& j);

Json to_json(const MCOracle& oracle);
Json to_json(const SphericalAtomicMeasure& sigma);
Json to_json(const SolverReport& report);
Json to_json(const ComparisonReport& report);
Json to_json(const StabilityReport& report);

Json load_json_file(const std::string& path);

}  // namespace wmink
