#include "csf/frames.hpp"

#include <algorithm>

#include "csf/errors.hpp"

namespace csf {

namespace {

std::optional<SocialPercept> instantiate(const AnnotateTemplate& annotate,
                                         const Percept& percept,
                                         const FrameId& source) {
  SocialPercept sp;
  sp.subject = percept.subject;
  sp.dimension = annotate.dimension;
  if (annotate.literal) {
    sp.value = *annotate.literal;
  } else if (annotate.attribute) {
    auto it = percept.attributes.find(*annotate.attribute);
    if (it == percept.attributes.end()) return std::nullopt; // nothing to copy
    sp.value = it->second;
  } else {
    return std::nullopt;
  }
  sp.strength = annotate.strength;
  sp.sources = {source};
  return sp;
}

} // namespace

SocialContext construe(const CognitiveSocialFrame& frame,
                       const std::vector<Percept>& percepts) {
  SocialContext out;
  for (const auto& rule : frame.construal) {
    for (const auto& percept : percepts) {
      if (!eval_condition(rule.filter, percept)) continue; // attention phase
      if (auto sp = instantiate(rule.annotate, percept, frame.id)) out.add(*sp);
    }
  }
  return out;
}

double evaluate_fitness(const CognitiveSocialFrame& frame,
                        const WorkingMemory& working,
                        const LongTermMemory& long_term,
                        const EngineParams& params) {
  double v = frame.fitness.bias;
  MemoryScope scope{&working, &long_term, nullptr};
  for (const auto& term : frame.fitness.terms)
    if (eval_condition(term.when, scope)) v += term.weight;
  return std::clamp(v, params.fitness_floor, 1.0);
}

double evaluate_preference(const Profile& profile, const FrameId& frame_id) {
  auto it = profile.preferences.find(frame_id);
  return it == profile.preferences.end() ? 0.0 : it->second;
}

double combine_salience(double fitness, double preference, double alpha) {
  return alpha * (2.0 * fitness - 1.0) + (1.0 - alpha) * preference;
}

double salience(const CognitiveSocialFrame& frame,
                const WorkingMemory& working,
                const LongTermMemory& long_term,
                const Profile& profile,
                const EngineParams& params) {
  double fit = evaluate_fitness(frame, working, long_term, params);
  double pref = evaluate_preference(profile, frame.id);
  return combine_salience(fit, pref, profile.alpha);
}

SocialContext interpret(const std::vector<Percept>& percepts,
                        const std::set<FrameId>& salient_frames,
                        const LongTermMemory& long_term) {
  SocialContext context; // starts cleared every cycle
  for (const FrameId& fid : salient_frames) {
    auto it = long_term.frames.find(fid);
    if (it == long_term.frames.end()) throw UnknownFrame(fid);
    for (const auto& sp : construe(it->second, percepts)) context.add(sp);
  }
  return context;
}

PolicyResult apply_policy(const std::map<ResourceId, double>& prev_deployed,
                          const std::set<ResourceId>& target,
                          const EngineParams& params,
                          std::uint64_t tick,
                          const UndeployHook& hook) {
  PolicyResult result;
  std::vector<ResourceId> removed, added, refreshed;

  if (params.policy == DeploymentPolicy::decay) {
    for (const auto& [rid, residual] : prev_deployed) {
      if (target.count(rid)) continue;
      double next = residual - params.decay_lambda;
      if (next < params.decay_theta) {
        removed.push_back(rid); // dropped strictly below theta
      } else {
        result.deployed.emplace(rid, next);
      }
    }
    for (const auto& rid : target) {
      (prev_deployed.count(rid) ? refreshed : added).push_back(rid);
      result.deployed[rid] = 1.0;
    }
  } else {
    for (const auto& [rid, residual] : prev_deployed)
      if (!target.count(rid)) removed.push_back(rid);
    for (const auto& rid : target) {
      if (!prev_deployed.count(rid)) added.push_back(rid);
      result.deployed.emplace(rid, 1.0);
    }
    if (params.policy == DeploymentPolicy::undeploy_hook && hook)
      for (const auto& rid : removed) hook(rid, tick);
  }

  for (const auto& rid : removed)
    result.events.push_back({DeploymentEventKind::undeployed, rid, tick});
  for (const auto& rid : added)
    result.events.push_back({DeploymentEventKind::deployed, rid, tick});
  for (const auto& rid : refreshed)
    result.events.push_back({DeploymentEventKind::refreshed, rid, tick});
  return result;
}

UpdateResult update(const SocialContext& context,
                    const LongTermMemory& long_term,
                    const Profile& profile,
                    const EngineParams& params,
                    const WorkingMemory& previous,
                    std::uint64_t tick,
                    const UndeployHook& hook) {
  WorkingMemory eval_wm = previous;
  eval_wm.social_context = context; // fitness sees the new context

  UpdateResult result;
  std::set<ResourceId> target;
  for (const auto& [fid, frame] : long_term.frames) {
    double fit = evaluate_fitness(frame, eval_wm, long_term, params);
    double pref = evaluate_preference(profile, fid);
    double sal = combine_salience(fit, pref, profile.alpha);
    bool is_salient = sal > params.epsilon_salience;
    result.scores.push_back({fid, fit, pref, sal, is_salient});
    if (is_salient) {
      result.salient.insert(fid);
      target.insert(frame.resources.begin(), frame.resources.end());
    }
  }

  auto policy = apply_policy(previous.deployed, target, params, tick, hook);
  result.deployed = std::move(policy.deployed);
  result.events = std::move(policy.events);
  return result;
}

std::vector<std::pair<SocialPercept, SocialPercept>> detect_conflicts(const SocialContext& context) {
  std::vector<std::pair<SocialPercept, SocialPercept>> pairs;
  std::vector<const SocialPercept*> percepts;
  for (const auto& sp : context) percepts.push_back(&sp);
  for (std::size_t i = 0; i < percepts.size(); ++i)
    for (std::size_t j = i + 1; j < percepts.size(); ++j)
      if (conflicts(*percepts[i], *percepts[j]))
        pairs.emplace_back(*percepts[i], *percepts[j]);
  return pairs;
}

} // namespace csf
