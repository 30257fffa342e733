#pragma once

#include <string>

#include <json.hpp>

#include "bipglue/behavior.hpp"
#include "bipglue/interaction_set.hpp"
#include "bipglue/priority.hpp"

namespace bipglue {

// Formats:
//   interaction  {"fire":["p"],"act":[],"neg":["r"]} or the text "p! -r"
//   glue         [interaction, ...] or {"interactions":[...]}
//   priority     {"pairs":[{"lower":["p"],"higher":["r","t"]}]}
//   behaviour    {"states":[...],"initial":"1","ports":[...],
//                 "transitions":[{"from":"1","label":["p"],"to":"2"}],
//                 "offers":[{"state":"1","port":"r"}]}
// where behaviour offers list only pairs beyond those implied by transitions.
// Malformed documents raise ParseError (position 0) or SemanticError.

Interaction interaction_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Interaction& a);

InteractionSet glue_from_json(const nlohmann::json& j);
nlohmann::json to_json(const InteractionSet& s);

PriorityModel priority_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PriorityModel& prec);

Behaviour behaviour_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Behaviour& b);

nlohmann::json parse_json(const std::string& text);

}  // namespace bipglue
