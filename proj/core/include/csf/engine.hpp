#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "csf/frames.hpp"
#include "csf/memory.hpp"
#include "csf/scenario.hpp"

namespace csf {

using Json = nlohmann::ordered_json;

struct Action {
  AgentId actor;
  std::string verb;
  std::optional<EntityId> target;
  std::map<std::string, Value> args;
  bool operator==(const Action&) const = default;
  bool operator<(const Action& other) const;
};

// Shared world state. Entities are attribute maps and must carry a text
// "location"; actions accumulate during a tick and apply only at the barrier.
struct Environment {
  std::map<EntityId, std::map<std::string, Value>> entities;
  std::vector<Action> pending_actions;
  std::uint64_t tick = 0;
};

enum class Stage { perceive, interpret, update, execute, act };

const char* stage_name(Stage stage);

// Trace events are strictly ordered by (tick, agent id, stage order); the
// payload is a stage-specific record.
struct TraceEvent {
  std::uint64_t tick = 0;
  AgentId agent;
  Stage stage = Stage::perceive;
  Json payload;
  bool operator==(const TraceEvent&) const = default;
};

// One percept per entity sharing the agent's location, itself included, each
// carrying that entity's full attribute map. Sorted by entity id.
std::vector<Percept> perceive(const Environment& env, const AgentState& agent);

// Runs the deployed mechanism resources in lexicographic id order; knowledge
// resources are never executed. Within a mechanism every rule whose condition
// holds fires, lower priority first (ties keep declaration order); a rule
// whose condition or target binds "?" fires once per matching context
// subject. Duplicate actions are emitted once.
std::vector<Action> execute(ResourceView& view,
                            const std::map<ResourceId, double>& deployed,
                            const LongTermMemory& long_term);

// One five-stage pass (perceive, interpret, update, execute, act) for one
// agent. Interpretation uses the salient set left by the previous cycle.
// Emitted actions are appended to env.pending_actions; the environment is not
// otherwise touched.
std::vector<TraceEvent> cycle(AgentState& agent, Environment& env, const EngineParams& params);

// Applies one action at the tick barrier. "move" sets the actor's location
// from args.location; "set_attr" sets args.name to args.value on the target
// (default: the actor). Every other verb leaves the environment unchanged.
void apply_action(Environment& env, const Action& action);

class Simulation {
public:
  // The scenario is assumed validated; run() on an invalid one is undefined.
  Simulation(Scenario scenario, std::uint64_t seed);

  // Advances the given number of ticks and returns the accumulated trace.
  // Each tick: scripted events, then every agent's cycle in lexicographic
  // agent order, then the action barrier.
  std::vector<TraceEvent> run(std::uint64_t ticks);

  Environment& environment() { return env_; }
  const Environment& environment() const { return env_; }
  AgentState& agent_state(const AgentId& id);
  const EngineParams& params() const { return scenario_.params; }
  const Scenario& scenario() const { return scenario_; }

private:
  void apply_scripted_events(std::uint64_t tick);

  Scenario scenario_;
  Environment env_;
  std::map<AgentId, AgentState> agents_;
  std::mt19937_64 rng_;
};

// Validates, then runs a fresh simulation. Identical (scenario, ticks, seed)
// produce identical traces. Throws ValidationError when validation reports
// errors.
std::vector<TraceEvent> run(const Scenario& scenario, std::uint64_t ticks, std::uint64_t seed);

} // namespace csf
