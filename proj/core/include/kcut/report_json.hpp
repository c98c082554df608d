#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "kcut/dynamics.hpp"

namespace kcut {

using json = nlohmann::json;

// Rationals travel as strings ("3", "1/2") so they stay exact. Every
// *_from_json throws std::invalid_argument (or nlohmann's type errors) on
// malformed input.

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// {"n", "k", "edges": [[u, v, "w"], ...]}
json game_to_json(const GameSpec& spec);
GameSpec game_from_json(const json& j);

json coloring_to_json(const Coloring& sigma);
Coloring coloring_from_json(const json& j);

json move_to_json(const JointMove& m);
JointMove move_from_json(const json& j);

json witness_to_json(const DeviationWitness& w);
DeviationWitness witness_from_json(const json& j);

json concept_to_json(const Concept& c);
Concept concept_from_json(const json& j);

/// {"concept", "verdict", "witness"?, "counts": {"coalitions_examined"}}
json report_to_json(const EquilibriumReport& r);
EquilibriumReport report_from_json(const json& j);

json trace_to_json(const DynamicsTrace& t);
DynamicsTrace trace_from_json(const json& j);

/// Self-contained record of a failed conclusion: game, coloring, move.
std::string falsification_witness_json(const GameSpec& spec, const Coloring& sigma, const JointMove& m);

}  // namespace kcut
