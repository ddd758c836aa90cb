#include "csf/engine.hpp"

#include <algorithm>
#include <tuple>

#include "csf/errors.hpp"
#include "csf/identity.hpp"

namespace csf {

bool Action::operator<(const Action& other) const {
  return std::tie(actor, verb, target, args) <
         std::tie(other.actor, other.verb, other.target, other.args);
}

const char* stage_name(Stage stage) {
  switch (stage) {
    case Stage::perceive: return "perceive";
    case Stage::interpret: return "interpret";
    case Stage::update: return "update";
    case Stage::execute: return "execute";
    case Stage::act: return "act";
  }
  return "?";
}

namespace {

Json value_json(const Value& v) {
  if (is_text(v)) return std::get<std::string>(v);
  if (is_bool(v)) return std::get<bool>(v);
  return std::get<double>(v);
}

Json percept_json(const Percept& p) {
  Json j;
  j["subject"] = p.subject;
  Json attrs = Json::object();
  for (const auto& [k, v] : p.attributes) attrs[k] = value_json(v);
  j["attributes"] = std::move(attrs);
  j["tick"] = p.tick;
  return j;
}

Json social_percept_json(const SocialPercept& sp) {
  Json j;
  j["subject"] = sp.subject;
  j["dimension"] = sp.dimension;
  j["value"] = value_json(sp.value);
  j["strength"] = sp.strength;
  Json sources = Json::array();
  for (const auto& fid : sp.sources) sources.push_back(fid);
  j["sources"] = std::move(sources);
  return j;
}

Json action_json(const Action& a) {
  Json j;
  j["actor"] = a.actor;
  j["verb"] = a.verb;
  if (a.target) j["target"] = *a.target;
  Json args = Json::object();
  for (const auto& [k, v] : a.args) args[k] = value_json(v);
  j["args"] = std::move(args);
  return j;
}

const char* event_kind_name(DeploymentEventKind kind) {
  switch (kind) {
    case DeploymentEventKind::deployed: return "deployed";
    case DeploymentEventKind::refreshed: return "refreshed";
    case DeploymentEventKind::undeployed: return "undeployed";
  }
  return "?";
}

bool rule_binds_subject(const MechanismRule& rule) {
  if (rule.then.target && *rule.then.target == "?") return true;
  for (const auto& atom : rule.when.atoms)
    if (atom.sel.kind == SelectorKind::social && atom.sel.a == "?") return true;
  return false;
}

Action instantiate_action(const ActionTemplate& tmpl, const AgentId& actor,
                          const EntityId* bound) {
  Action action;
  action.actor = actor;
  action.verb = tmpl.verb;
  if (tmpl.target) action.target = (*tmpl.target == "?" && bound) ? *bound : *tmpl.target;
  action.args = tmpl.args;
  return action;
}

} // namespace

std::vector<Percept> perceive(const Environment& env, const AgentState& agent) {
  auto self = env.entities.find(agent.id);
  if (self == env.entities.end())
    throw DomainError("agent has no entity: " + agent.id, agent.id);
  auto loc = self->second.find("location");
  if (loc == self->second.end() || !is_text(loc->second))
    throw DomainError("agent entity has no text location: " + agent.id, agent.id);
  const std::string& here = std::get<std::string>(loc->second);

  std::vector<Percept> out;
  for (const auto& [eid, attrs] : env.entities) { // map order: sorted by id
    auto it = attrs.find("location");
    if (it == attrs.end() || !is_text(it->second)) continue;
    if (std::get<std::string>(it->second) != here) continue;
    Percept p;
    p.subject = eid;
    p.attributes = attrs;
    p.tick = env.tick;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Action> execute(ResourceView& view,
                            const std::map<ResourceId, double>& deployed,
                            const LongTermMemory& long_term) {
  std::vector<Action> out;
  std::set<Action> seen;
  auto emit = [&](Action action) {
    if (seen.insert(action).second) out.push_back(std::move(action));
  };

  std::set<EntityId> subjects = view.social_context().subjects();

  for (const auto& [rid, residual] : deployed) { // lexicographic resource order
    auto it = long_term.resources.find(rid);
    if (it == long_term.resources.end()) continue;
    const CognitiveResource& resource = it->second;
    if (resource.kind != ResourceKind::mechanism) continue; // knowledge is not executable

    // Stable sort keeps declaration order among equal priorities.
    std::vector<const MechanismRule*> rules;
    for (const auto& rule : resource.rules) rules.push_back(&rule);
    std::stable_sort(rules.begin(), rules.end(),
                     [](const MechanismRule* a, const MechanismRule* b) {
                       return a->priority < b->priority;
                     });

    for (const MechanismRule* rule : rules) {
      if (rule_binds_subject(*rule)) {
        for (const EntityId& subject : subjects) {
          MemoryScope scope{&view.working(), &long_term, &subject};
          if (eval_condition(rule->when, scope))
            emit(instantiate_action(rule->then, view.agent(), &subject));
        }
      } else {
        MemoryScope scope{&view.working(), &long_term, nullptr};
        if (eval_condition(rule->when, scope))
          emit(instantiate_action(rule->then, view.agent(), nullptr));
      }
    }
  }
  return out;
}

std::vector<TraceEvent> cycle(AgentState& agent, Environment& env, const EngineParams& params) {
  std::vector<TraceEvent> events;
  const std::uint64_t tick = env.tick;

  // Perceive: snapshot the co-located entities into sensory memory.
  auto percepts = perceive(env, agent);
  sensory_write(agent.sensory, percepts);
  {
    Json payload;
    payload["location"] = value_json(env.entities.at(agent.id).at("location"));
    Json list = Json::array();
    for (const auto& p : percepts) list.push_back(percept_json(p));
    payload["percepts"] = std::move(list);
    events.push_back({tick, agent.id, Stage::perceive, std::move(payload)});
  }

  // Interpret: drain sensory memory through the previous cycle's salient set.
  auto drained = sensory_drain(agent.sensory);
  SocialContext context = interpret(drained, agent.working.salient_frames, agent.long_term);
  auto conflict_pairs = detect_conflicts(context);
  agent.working.social_context = context;
  {
    Json payload;
    Json ctx = Json::array();
    for (const auto& sp : context) ctx.push_back(social_percept_json(sp));
    payload["context"] = std::move(ctx);
    Json conflicts_json = Json::array();
    for (const auto& [a, b] : conflict_pairs) {
      Json pair = Json::array();
      pair.push_back(social_percept_json(a));
      pair.push_back(social_percept_json(b));
      conflicts_json.push_back(std::move(pair));
    }
    payload["conflicts"] = std::move(conflicts_json);
    events.push_back({tick, agent.id, Stage::interpret, std::move(payload)});
  }

  // Update: re-select salient frames and transition the deployed set.
  UpdateResult upd = update(context, agent.long_term, agent.profile, params,
                            agent.working, tick);
  agent.working.salient_frames = upd.salient;
  agent.working.deployed = upd.deployed;
  {
    Json payload;
    Json scores = Json::array();
    for (const auto& s : upd.scores) {
      Json row;
      row["frame"] = s.frame;
      row["fitness"] = s.fitness;
      row["preference"] = s.preference;
      row["salience"] = s.salience;
      row["salient"] = s.salient;
      scores.push_back(std::move(row));
    }
    payload["salience"] = std::move(scores);
    Json salient = Json::array();
    for (const auto& fid : upd.salient) salient.push_back(fid);
    payload["salient"] = std::move(salient);
    Json deployed = Json::array();
    for (const auto& [rid, residual] : upd.deployed) {
      Json row;
      row["resource"] = rid;
      row["residual"] = residual;
      deployed.push_back(std::move(row));
    }
    payload["deployed"] = std::move(deployed);
    Json evs = Json::array();
    for (const auto& e : upd.events) {
      Json row;
      row["kind"] = event_kind_name(e.kind);
      row["resource"] = e.resource;
      evs.push_back(std::move(row));
    }
    payload["events"] = std::move(evs);

    // Mind-reading layer: project frames onto every other context subject,
    // then categorize by top ascription.
    std::map<EntityId, std::vector<Ascription>> by_actor;
    for (const auto& subject : context.subjects()) {
      if (subject == agent.id) continue;
      by_actor.emplace(subject, ascribe_frames(agent, subject, agent.long_term, params));
    }
    Json ascriptions = Json::array();
    for (const auto& [target, list] : by_actor) {
      Json row;
      row["target"] = target;
      Json frames = Json::array();
      for (const auto& a : list) {
        Json entry;
        entry["frame"] = a.frame;
        entry["estimated_salience"] = a.estimated_salience;
        frames.push_back(std::move(entry));
      }
      row["frames"] = std::move(frames);
      ascriptions.push_back(std::move(row));
    }
    payload["ascriptions"] = std::move(ascriptions);
    Json groups = Json::array();
    for (const auto& group : categorize(by_actor)) {
      Json row;
      row["key_frame"] = group.key_frame;
      Json members = Json::array();
      for (const auto& m : group.members) members.push_back(m);
      row["members"] = std::move(members);
      row["identification"] = identification(agent.profile, group, upd.salient);
      groups.push_back(std::move(row));
    }
    payload["groups"] = std::move(groups);
    events.push_back({tick, agent.id, Stage::update, std::move(payload)});
  }

  // Execute: run the deployed mechanisms against the new context.
  ResourceView view = open_resource_view(agent);
  std::vector<Action> actions = execute(view, agent.working.deployed, agent.long_term);
  {
    Json payload;
    Json list = Json::array();
    for (const auto& a : actions) list.push_back(action_json(a));
    payload["actions"] = std::move(list);
    events.push_back({tick, agent.id, Stage::execute, std::move(payload)});
  }

  // Act: hand the actions to the environment; they apply at the tick barrier.
  for (auto& action : actions) env.pending_actions.push_back(std::move(action));
  {
    Json payload;
    payload["appended"] = actions.size();
    events.push_back({tick, agent.id, Stage::act, std::move(payload)});
  }

  return events;
}

void apply_action(Environment& env, const Action& action) {
  if (action.verb == "move") {
    auto it = action.args.find("location");
    if (it == action.args.end() || !is_text(it->second)) return;
    auto entity = env.entities.find(action.actor);
    if (entity == env.entities.end()) return;
    entity->second["location"] = it->second;
    return;
  }
  if (action.verb == "set_attr") {
    auto name = action.args.find("name");
    auto value = action.args.find("value");
    if (name == action.args.end() || value == action.args.end() || !is_text(name->second))
      return;
    const EntityId& target = action.target ? *action.target : action.actor;
    auto entity = env.entities.find(target);
    if (entity == env.entities.end()) return;
    entity->second[std::get<std::string>(name->second)] = value->second;
    return;
  }
  // Every other verb is a social gesture with no physical effect.
}

Simulation::Simulation(Scenario scenario, std::uint64_t seed)
    : scenario_(std::move(scenario)), rng_(seed) {
  env_.entities = scenario_.entities;
  env_.tick = 0;
  for (const auto& [aid, spec] : scenario_.agents) {
    AgentState state;
    state.id = aid;
    state.profile = spec.profile;
    for (const auto& fid : spec.frames) {
      auto it = scenario_.frames.find(fid);
      if (it != scenario_.frames.end()) state.long_term.frames.emplace(fid, it->second);
    }
    state.long_term.resources = scenario_.resources;
    state.working.salient_frames = spec.profile.default_salient; // tick-0 bootstrap
    agents_.emplace(aid, std::move(state));
  }
}

AgentState& Simulation::agent_state(const AgentId& id) {
  auto it = agents_.find(id);
  if (it == agents_.end()) throw DomainError("unknown agent: " + id, id);
  return it->second;
}

void Simulation::apply_scripted_events(std::uint64_t tick) {
  for (const auto& event : scenario_.events) {
    if (event.tick != tick) continue;
    if (event.probability) {
      double draw = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
      if (draw >= *event.probability) continue;
    }
    auto entity = env_.entities.find(event.entity);
    if (entity == env_.entities.end()) continue;
    for (const auto& [name, value] : event.set) entity->second[name] = value;
  }
}

std::vector<TraceEvent> Simulation::run(std::uint64_t ticks) {
  std::vector<TraceEvent> trace;
  for (std::uint64_t t = 0; t < ticks; ++t) {
    env_.tick = t;
    apply_scripted_events(t); // world changes land before anyone perceives
    for (auto& [aid, agent] : agents_) { // lexicographic agent order
      auto events = cycle(agent, env_, scenario_.params);
      trace.insert(trace.end(), std::make_move_iterator(events.begin()),
                   std::make_move_iterator(events.end()));
    }
    // Tick barrier: actions apply in emission order, visible next tick only.
    for (const auto& action : env_.pending_actions) apply_action(env_, action);
    env_.pending_actions.clear();
  }
  return trace;
}

std::vector<TraceEvent> run(const Scenario& scenario, std::uint64_t ticks, std::uint64_t seed) {
  auto diagnostics = validate(scenario);
  if (has_errors(diagnostics)) {
    std::string message = "scenario failed validation:";
    for (const auto& d : diagnostics)
      if (d.severity == Severity::error) message += "\n  " + d.message + " (at " + d.where + ")";
    throw ValidationError(message);
  }
  Simulation sim(scenario, seed);
  return sim.run(ticks);
}

} // namespace csf
