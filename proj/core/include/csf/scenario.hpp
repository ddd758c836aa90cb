#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "csf/frames.hpp"
#include "csf/types.hpp"

namespace csf {

// A scripted environment change: sets entity attributes at the given tick,
// before any agent perceives. When probability is set the event applies only
// if the run's seeded generator draws below it; otherwise it always applies.
struct ScriptedEvent {
  std::uint64_t tick = 0;
  EntityId entity;
  std::map<std::string, Value> set;
  std::optional<double> probability;
  bool operator==(const ScriptedEvent&) const = default;
};

// One agent declaration: the agent id doubles as its entity id.
struct AgentSpec {
  AgentId id;
  Profile profile;
  std::vector<FrameId> frames; // the agent's long-term frame repertoire
  bool operator==(const AgentSpec&) const = default;
};

struct Scenario {
  std::string name;
  EngineParams params;
  std::map<EntityId, std::map<std::string, Value>> entities;
  std::map<FrameId, CognitiveSocialFrame> frames;
  std::map<ResourceId, CognitiveResource> resources;
  std::map<AgentId, AgentSpec> agents;
  std::vector<ScriptedEvent> events;
  bool operator==(const Scenario&) const = default;
};

enum class Severity { error, warning };

struct Diagnostic {
  Severity severity = Severity::error;
  std::string message;
  std::string where; // path into the source document, e.g. "/agents/bob/default_salient"
  bool operator==(const Diagnostic&) const = default;
};

// Parses a UTF-8 JSON scenario document and resolves defaults (alpha 0.5,
// epsilon 0, policy instant, lambda 0.25, theta 0).
// Throws ParseError (syntax or shape, with line/position for syntax errors),
// ReferenceError (dangling frame/resource/preference references) and
// DomainError (out-of-range numbers).
Scenario parse_scenario(const std::string& document);

// Canonical JSON form with all defaults materialized;
// parse_scenario(serialize_scenario(s)) == s for every validated scenario.
std::string serialize_scenario(const Scenario& scenario);

// Semantic diagnostics. Errors make the scenario non-runnable; warnings do
// not. Every diagnostic carries a document path.
std::vector<Diagnostic> validate(const Scenario& scenario);

inline bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics)
    if (d.severity == Severity::error) return true;
  return false;
}

// Built-in scenarios: "library_dance" and "coach_father".
// Throws UnknownScenario for any other name.
Scenario builtin(const std::string& name);
std::vector<std::string> builtin_names();
const std::string& builtin_document(const std::string& name);

} // namespace csf
