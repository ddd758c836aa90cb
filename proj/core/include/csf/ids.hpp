#pragma once

#include <string>

namespace csf {

// Identifiers are plain text, unique within a scenario and stable across a run.
// Scenario files restrict them to [a-z][a-z0-9_]*.
using EntityId = std::string;
using AgentId = EntityId;
using FrameId = std::string;
using ResourceId = std::string;

} // namespace csf
