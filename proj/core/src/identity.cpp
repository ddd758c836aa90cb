#include "csf/identity.hpp"

#include <algorithm>

#include "csf/errors.hpp"

namespace csf {

std::vector<Ascription> ascribe_frames(const AgentState& agent,
                                       const EntityId& target,
                                       const LongTermMemory& long_term,
                                       const EngineParams& params) {
  // Hypothetical working memory: just what the agent perceives about target.
  WorkingMemory hypothetical;
  bool any = false;
  for (const auto& sp : agent.working.social_context) {
    if (sp.subject != target) continue;
    hypothetical.social_context.add(sp);
    any = true;
  }
  if (!any) throw UnknownTarget(target);

  std::vector<Ascription> out;
  for (const auto& [fid, frame] : long_term.frames) {
    double fit = evaluate_fitness(frame, hypothetical, long_term, params);
    double estimated = agent.profile.alpha * (2.0 * fit - 1.0); // neutral preference
    if (estimated > params.epsilon_salience) out.push_back({target, fid, estimated});
  }
  std::sort(out.begin(), out.end(), [](const Ascription& a, const Ascription& b) {
    if (a.estimated_salience != b.estimated_salience)
      return a.estimated_salience > b.estimated_salience;
    return a.frame < b.frame;
  });
  return out;
}

std::vector<SocialGroup> categorize(const std::map<EntityId, std::vector<Ascription>>& by_actor) {
  std::map<FrameId, std::set<EntityId>> members;
  for (const auto& [actor, ascriptions] : by_actor) {
    if (ascriptions.empty()) continue;
    members[ascriptions.front().frame].insert(actor);
  }
  std::vector<SocialGroup> groups;
  groups.reserve(members.size());
  for (auto& [key_frame, actors] : members)
    groups.push_back({key_frame, std::move(actors)});
  return groups;
}

double identification(const Profile& profile,
                      const SocialGroup& group,
                      const std::set<FrameId>& agent_salient) {
  double score = evaluate_preference(profile, group.key_frame);
  if (agent_salient.count(group.key_frame)) score += 0.5;
  return std::clamp(score, -1.0, 1.0);
}

std::set<ResourceId> predict_resources(const std::vector<Ascription>& ascriptions,
                                       const LongTermMemory& long_term) {
  std::set<ResourceId> out;
  for (const auto& ascription : ascriptions) {
    auto it = long_term.frames.find(ascription.frame);
    if (it == long_term.frames.end()) throw UnknownFrame(ascription.frame);
    out.insert(it->second.resources.begin(), it->second.resources.end());
  }
  return out;
}

} // namespace csf
