#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "csf/types.hpp"

namespace csf {

// Raw percepts waiting for interpretation. Content lives for at most one
// cycle: the perceive stage writes it, the interpret stage drains it.
struct SensoryMemory {
  std::vector<Percept> percepts;
};

// One environment snapshot per cycle: a write replaces any stale content.
void sensory_write(SensoryMemory& mem, std::vector<Percept> percepts);

// Returns the current percepts and empties the store.
std::vector<Percept> sensory_drain(SensoryMemory& mem);

// Short-lived state the deployed resources and the frame update mechanism
// share: the current social context, the salient frame set, the deployed
// resources with their residual salience, and resource-managed scratch data.
struct WorkingMemory {
  SocialContext social_context;
  std::set<FrameId> salient_frames;
  std::map<ResourceId, double> deployed; // residual salience in [0,1]
  std::map<std::string, Value> scratch;
  bool operator==(const WorkingMemory&) const = default;
};

// Frame and resource definitions; read-only during a run.
struct LongTermMemory {
  std::map<FrameId, CognitiveSocialFrame> frames;
  std::map<ResourceId, CognitiveResource> resources;
  bool operator==(const LongTermMemory&) const = default;
};

// Structural hash, used to audit that a run leaves long-term memory untouched.
std::uint64_t ltm_fingerprint(const LongTermMemory& ltm);

// Instrumentation for the memory access rules. resource_sensory_reads counts
// sensory reads that succeeded through a resource view; it must stay 0 for
// the lifetime of an agent. denied_sensory_attempts counts raised violations.
struct MemoryAudit {
  std::uint64_t resource_sensory_reads = 0;
  std::uint64_t denied_sensory_attempts = 0;
};

struct AgentState {
  AgentId id;
  Profile profile;
  SensoryMemory sensory;
  WorkingMemory working;
  LongTermMemory long_term;
  MemoryAudit audit;
};

// Capability-scoped handle handed to cognitive resources. It exposes exactly
// what the access rules permit:
//   rule 1  no sensory access; read_sensory/write_sensory always raise
//           AccessViolation naming the rule
//   rule 2  full working-memory read, scratch write
//   rule 3  frame definitions in long-term memory
// Knowledge facts are readable while their resource is deployed.
class ResourceView {
public:
  explicit ResourceView(AgentState& state) : state_(&state) {}

  const AgentId& agent() const { return state_->id; }

  // rule 2
  const WorkingMemory& working() const { return state_->working; }
  const SocialContext& social_context() const { return state_->working.social_context; }
  const std::set<FrameId>& salient_frames() const { return state_->working.salient_frames; }
  const std::map<ResourceId, double>& deployed() const { return state_->working.deployed; }
  std::optional<Value> scratch(const std::string& key) const;
  void set_scratch(const std::string& key, Value value);

  // rule 3
  const CognitiveSocialFrame& frame(const FrameId& id) const; // throws UnknownFrame

  // Fact of a currently deployed knowledge resource, absent otherwise.
  std::optional<Value> fact(const ResourceId& resource, const std::string& key) const;

  // rule 1: both always throw AccessViolation(1).
  const std::vector<Percept>& read_sensory() const;
  void write_sensory(std::vector<Percept> percepts);

private:
  AgentState* state_;
};

ResourceView open_resource_view(AgentState& state);

} // namespace csf
