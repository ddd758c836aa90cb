#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "csf/memory.hpp"
#include "csf/types.hpp"

namespace csf {

// How the deployed resource set transitions between cycles.
//   instant        plain substitution by the new target set
//   undeploy_hook  as instant, plus a finalizer invoked once per removal
//   decay          leaving resources lose decay_lambda of residual salience
//                  per tick and are dropped strictly below decay_theta
enum class DeploymentPolicy { instant, undeploy_hook, decay };

struct EngineParams {
  double epsilon_salience = 0.0; // in [-1,1]; frames need salience strictly above it
  double alpha_default = 0.5;    // in [0,1]; profiles without an explicit alpha
  double fitness_floor = 1e-6;   // > 0; realizes the open interval ]0,1]
  DeploymentPolicy policy = DeploymentPolicy::instant;
  double decay_lambda = 0.25; // in ]0,1]
  double decay_theta = 0.0;   // in [0,1[
  bool operator==(const EngineParams&) const = default;
};

enum class DeploymentEventKind { deployed, refreshed, undeployed };

struct DeploymentEvent {
  DeploymentEventKind kind = DeploymentEventKind::deployed;
  ResourceId resource;
  std::uint64_t tick = 0;
  bool operator==(const DeploymentEvent&) const = default;
};

// Two-phase construal of one frame: filter the percepts (attention), then
// annotate each match with a social meaning (interpretation). Identical
// emitted triples merge. An annotate template that copies an attribute the
// percept lacks emits nothing for that percept.
SocialContext construe(const CognitiveSocialFrame& frame,
                       const std::vector<Percept>& percepts);

// bias plus the weights of the terms holding on working memory, clamped into
// [params.fitness_floor, 1].
double evaluate_fitness(const CognitiveSocialFrame& frame,
                        const WorkingMemory& working,
                        const LongTermMemory& long_term,
                        const EngineParams& params);

// profile.preferences[frame_id], or 0 when absent.
double evaluate_preference(const Profile& profile, const FrameId& frame_id);

// Balance of context fit against intrinsic preference:
//   alpha * (2 * fitness - 1) + (1 - alpha) * preference
// Strictly increasing in both arguments for alpha in ]0,1[.
double combine_salience(double fitness, double preference, double alpha);

double salience(const CognitiveSocialFrame& frame,
                const WorkingMemory& working,
                const LongTermMemory& long_term,
                const Profile& profile,
                const EngineParams& params);

// Builds a fresh social context as the identity-key-merged union of every
// salient frame's construal. Conflicting percepts are both retained.
// Throws UnknownFrame for salient ids missing from long-term memory.
SocialContext interpret(const std::vector<Percept>& percepts,
                        const std::set<FrameId>& salient_frames,
                        const LongTermMemory& long_term);

// Invoked once per resource removed under the undeploy_hook policy.
using UndeployHook = std::function<void(const ResourceId&, std::uint64_t tick)>;

struct PolicyResult {
  std::map<ResourceId, double> deployed; // residual salience per resource
  std::vector<DeploymentEvent> events;
};

// Transitions the deployed set toward the target set under params.policy.
// Event order per tick: undeployed, then deployed, then refreshed, each block
// sorted by resource id.
PolicyResult apply_policy(const std::map<ResourceId, double>& prev_deployed,
                          const std::set<ResourceId>& target,
                          const EngineParams& params,
                          std::uint64_t tick,
                          const UndeployHook& hook = {});

// Per-frame salience breakdown, kept for traces and the explain command.
struct FrameScore {
  FrameId frame;
  double fitness = 0.0;
  double preference = 0.0;
  double salience = 0.0;
  bool salient = false;
  bool operator==(const FrameScore&) const = default;
};

struct UpdateResult {
  std::set<FrameId> salient;
  std::map<ResourceId, double> deployed;
  std::vector<DeploymentEvent> events;
  std::vector<FrameScore> scores; // lexicographic frame order
};

// Re-selects the salient frames against working memory holding the new social
// context, then deploys their resources under the active policy. Frames are
// scored in lexicographic id order.
UpdateResult update(const SocialContext& context,
                    const LongTermMemory& long_term,
                    const Profile& profile,
                    const EngineParams& params,
                    const WorkingMemory& previous,
                    std::uint64_t tick,
                    const UndeployHook& hook = {});

// All unordered pairs of context percepts that read different values into the
// same subject and dimension. Pairs come out key-ordered. Conflicts are never
// auto-resolved; resolving them is mechanism-resource business.
std::vector<std::pair<SocialPercept, SocialPercept>> detect_conflicts(const SocialContext& context);

} // namespace csf
