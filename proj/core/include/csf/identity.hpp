#pragma once

#include <map>
#include <set>
#include <vector>

#include "csf/frames.hpp"
#include "csf/memory.hpp"

namespace csf {

// The agent's estimate of how salient a frame is for another actor. Other
// minds' preferences are unobservable, so the estimate uses neutral
// preference: estimated_salience = alpha * (2 * fitness - 1).
struct Ascription {
  EntityId target;
  FrameId frame;
  double estimated_salience = 0.0;
  bool operator==(const Ascription&) const = default;
};

struct SocialGroup {
  FrameId key_frame;
  std::set<EntityId> members;
  bool operator==(const SocialGroup&) const = default;
};

// Projects the agent's frames onto target: each frame's fitness is evaluated
// against a hypothetical working memory holding only the agent's social
// percepts about target. Ascriptions above params.epsilon_salience come back
// sorted by estimated salience descending, then frame id.
// Throws UnknownTarget when the context holds no percept about target.
std::vector<Ascription> ascribe_frames(const AgentState& agent,
                                       const EntityId& target,
                                       const LongTermMemory& long_term,
                                       const EngineParams& params);

// Groups actors by the frame of their top ascription. Actors with empty
// ascription lists are omitted; the returned groups partition the rest.
// Ascription lists are expected sorted the way ascribe_frames returns them.
std::vector<SocialGroup> categorize(const std::map<EntityId, std::vector<Ascription>>& by_actor);

// Strength of the agent's identification with a group, in [-1,1]:
// preference for the key frame plus a 0.5 bonus when that frame is currently
// salient for the agent, clamped. In-group iff the result is positive.
double identification(const Profile& profile,
                      const SocialGroup& group,
                      const std::set<FrameId>& agent_salient);

// The agent's model of the target's deployed resources: the union of the
// ascribed frames' resource sets.
std::set<ResourceId> predict_resources(const std::vector<Ascription>& ascriptions,
                                       const LongTermMemory& long_term);

} // namespace csf
