#pragma once

#include <json.hpp>

#include "rbopt/design.hpp"
#include "rbopt/mechanism.hpp"
#include "rbopt/metrics.hpp"

namespace rbopt {

// JSON field names are the snake_case struct member names; see
// docs/config.md for the full schema used by the harness.

void to_json(nlohmann::json& j, const DesignVector& d);
void from_json(const nlohmann::json& j, DesignVector& d);

void to_json(nlohmann::json& j, const BoundsSet& b);
void from_json(const nlohmann::json& j, BoundsSet& b);

void to_json(nlohmann::json& j, const FitnessWeights& w);
void from_json(const nlohmann::json& j, FitnessWeights& w);

void to_json(nlohmann::json& j, const SoilParams& s);
void from_json(const nlohmann::json& j, SoilParams& s);

void to_json(nlohmann::json& j, const ScenarioParams& s);
void from_json(const nlohmann::json& j, ScenarioParams& s);

void to_json(nlohmann::json& j, const MechanismState& m);
void to_json(nlohmann::json& j, const ForceState& f);
void to_json(nlohmann::json& j, const MetricsReport& r);

}  // namespace rbopt
