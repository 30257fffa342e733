#pragma once

#include <string>

#include "bipglue/behavior.hpp"
#include "bipglue/connector.hpp"
#include "bipglue/tree.hpp"

namespace bipglue {

// Graphviz sources. Connector operands are drawn as triangles (triggers) or
// bullets (synchrons), tree nodes as boxes, offered-only ports as a state
// tooltip.
std::string to_dot(const Behaviour& b);
std::string to_dot(const CausalTree& t);
std::string to_dot(const ConnectorTerm& x);

}  // namespace bipglue
