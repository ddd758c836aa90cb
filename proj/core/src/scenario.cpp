#include "csf/scenario.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "csf/errors.hpp"

namespace csf {

namespace {

using Json = nlohmann::ordered_json;

bool valid_id(const std::string& id) {
  if (id.empty()) return false;
  if (!(id.front() >= 'a' && id.front() <= 'z')) return false;
  for (char c : id) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

void check_id(const std::string& id, const std::string& where) {
  if (!valid_id(id))
    throw ParseError("identifier must match [a-z][a-z0-9_]*: \"" + id + "\"", where);
}

[[noreturn]] void shape_error(const std::string& what, const std::string& where) {
  throw ParseError(what, where);
}

const Json& expect_object(const Json& j, const std::string& where) {
  if (!j.is_object()) shape_error("expected an object", where);
  return j;
}

const Json& expect_array(const Json& j, const std::string& where) {
  if (!j.is_array()) shape_error("expected an array", where);
  return j;
}

std::string expect_string(const Json& j, const std::string& where) {
  if (!j.is_string()) shape_error("expected a string", where);
  return j.get<std::string>();
}

double expect_number(const Json& j, const std::string& where) {
  if (!j.is_number()) shape_error("expected a number", where);
  return j.get<double>();
}

std::uint64_t expect_tick(const Json& j, const std::string& where) {
  if (!j.is_number_integer() && !j.is_number_unsigned())
    shape_error("expected a non-negative integer", where);
  if (j.is_number_integer() && j.get<std::int64_t>() < 0)
    throw DomainError("tick must be non-negative", where);
  return j.get<std::uint64_t>();
}

void check_range(double v, double lo, double hi, bool lo_open, bool hi_open,
                 const std::string& name, const std::string& where) {
  bool ok = (lo_open ? v > lo : v >= lo) && (hi_open ? v < hi : v <= hi);
  if (!ok) {
    std::string lob = lo_open ? "]" : "[";
    std::string hib = hi_open ? "[" : "]";
    throw DomainError(name + " out of range " + lob + std::to_string(lo) + "," +
                          std::to_string(hi) + hib + ": " + std::to_string(v),
                      where);
  }
}

void check_keys(const Json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (key == a) { known = true; break; }
    if (!known) shape_error("unknown key \"" + key + "\"", where);
  }
}

Value value_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) return Value(j.get<std::string>());
  if (j.is_boolean()) return Value(j.get<bool>());
  if (j.is_number()) return Value(j.get<double>());
  shape_error("expected a scalar (text, number or boolean)", where);
}

Json value_to_json(const Value& v) {
  if (is_text(v)) return std::get<std::string>(v);
  if (is_bool(v)) return std::get<bool>(v);
  return std::get<double>(v);
}

std::map<std::string, Value> scalar_map(const Json& j, const std::string& where) {
  std::map<std::string, Value> out;
  for (const auto& [key, value] : expect_object(j, where).items())
    out.emplace(key, value_from_json(value, where + "/" + key));
  return out;
}

ConditionAtom parse_atom(const Json& j, const std::string& where) {
  expect_object(j, where);
  check_keys(j, {"sel", "op", "value"}, where);
  if (!j.contains("sel")) shape_error("atom missing \"sel\"", where);
  ConditionAtom atom;
  try {
    atom.sel = parse_selector(expect_string(j.at("sel"), where + "/sel"));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), where + "/sel");
  }
  std::string op_text = j.contains("op") ? expect_string(j.at("op"), where + "/op") : "exists";
  auto op = comparator_from_text(op_text);
  if (!op) shape_error("unknown comparator \"" + op_text + "\"", where + "/op");
  atom.op = *op;
  if (atom.op != Comparator::exists) {
    if (!j.contains("value"))
      shape_error("comparator \"" + op_text + "\" needs a \"value\"", where);
    atom.literal = value_from_json(j.at("value"), where + "/value");
  } else if (j.contains("value")) {
    shape_error("\"exists\" takes no \"value\"", where);
  }
  return atom;
}

Condition parse_condition(const Json& j, const std::string& where) {
  Condition cond;
  const auto& arr = expect_array(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i)
    cond.atoms.push_back(parse_atom(arr[i], where + "/" + std::to_string(i)));
  return cond;
}

Json atom_to_json(const ConditionAtom& atom) {
  Json j;
  j["sel"] = selector_text(atom.sel);
  j["op"] = comparator_text(atom.op);
  if (atom.literal) j["value"] = value_to_json(*atom.literal);
  return j;
}

Json condition_to_json(const Condition& cond) {
  Json arr = Json::array();
  for (const auto& atom : cond.atoms) arr.push_back(atom_to_json(atom));
  return arr;
}

AnnotateTemplate parse_annotate(const Json& j, const std::string& where) {
  expect_object(j, where);
  check_keys(j, {"dimension", "value", "strength"}, where);
  AnnotateTemplate out;
  if (!j.contains("dimension")) shape_error("annotate missing \"dimension\"", where);
  out.dimension = expect_string(j.at("dimension"), where + "/dimension");
  if (out.dimension.empty()) shape_error("dimension must be non-empty", where + "/dimension");
  if (!j.contains("value")) shape_error("annotate missing \"value\"", where);
  const Json& v = j.at("value");
  if (v.is_object()) {
    check_keys(v, {"attr"}, where + "/value");
    if (!v.contains("attr")) shape_error("attribute reference missing \"attr\"", where + "/value");
    out.attribute = expect_string(v.at("attr"), where + "/value/attr");
  } else {
    out.literal = value_from_json(v, where + "/value");
  }
  if (j.contains("strength")) {
    out.strength = expect_number(j.at("strength"), where + "/strength");
    check_range(out.strength, 0.0, 1.0, false, false, "strength", where + "/strength");
  }
  return out;
}

Json annotate_to_json(const AnnotateTemplate& a) {
  Json j;
  j["dimension"] = a.dimension;
  if (a.literal) j["value"] = value_to_json(*a.literal);
  else j["value"] = Json{{"attr", *a.attribute}};
  j["strength"] = a.strength;
  return j;
}

CognitiveSocialFrame parse_frame(const FrameId& id, const Json& j, const std::string& where,
                                 const std::map<ResourceId, CognitiveResource>& resources) {
  expect_object(j, where);
  check_keys(j, {"construal", "fitness", "resources"}, where);
  CognitiveSocialFrame frame;
  frame.id = id;

  if (!j.contains("construal"))
    shape_error("frame missing \"construal\" (use [] for an explicitly empty construal)", where);
  const auto& rules = expect_array(j.at("construal"), where + "/construal");
  for (std::size_t i = 0; i < rules.size(); ++i) {
    std::string rwhere = where + "/construal/" + std::to_string(i);
    expect_object(rules[i], rwhere);
    check_keys(rules[i], {"filter", "annotate"}, rwhere);
    ConstrualRule rule;
    if (rules[i].contains("filter"))
      rule.filter = parse_condition(rules[i].at("filter"), rwhere + "/filter");
    if (!rules[i].contains("annotate")) shape_error("construal rule missing \"annotate\"", rwhere);
    rule.annotate = parse_annotate(rules[i].at("annotate"), rwhere + "/annotate");
    frame.construal.push_back(std::move(rule));
  }

  if (j.contains("fitness")) {
    const Json& f = expect_object(j.at("fitness"), where + "/fitness");
    check_keys(f, {"bias", "terms"}, where + "/fitness");
    if (f.contains("bias"))
      frame.fitness.bias = expect_number(f.at("bias"), where + "/fitness/bias");
    if (f.contains("terms")) {
      const auto& terms = expect_array(f.at("terms"), where + "/fitness/terms");
      for (std::size_t i = 0; i < terms.size(); ++i) {
        std::string twhere = where + "/fitness/terms/" + std::to_string(i);
        expect_object(terms[i], twhere);
        check_keys(terms[i], {"weight", "when"}, twhere);
        FitnessTerm term;
        if (!terms[i].contains("weight")) shape_error("fitness term missing \"weight\"", twhere);
        term.weight = expect_number(terms[i].at("weight"), twhere + "/weight");
        if (terms[i].contains("when"))
          term.when = parse_condition(terms[i].at("when"), twhere + "/when");
        frame.fitness.terms.push_back(std::move(term));
      }
    }
  }

  if (j.contains("resources")) {
    const auto& refs = expect_array(j.at("resources"), where + "/resources");
    for (std::size_t i = 0; i < refs.size(); ++i) {
      std::string rwhere = where + "/resources/" + std::to_string(i);
      ResourceId rid = expect_string(refs[i], rwhere);
      if (!resources.count(rid)) throw ReferenceError(rid, rwhere);
      frame.resources.insert(std::move(rid));
    }
  }
  return frame;
}

Json frame_to_json(const CognitiveSocialFrame& frame) {
  Json j;
  Json construal = Json::array();
  for (const auto& rule : frame.construal) {
    Json r;
    r["filter"] = condition_to_json(rule.filter);
    r["annotate"] = annotate_to_json(rule.annotate);
    construal.push_back(std::move(r));
  }
  j["construal"] = std::move(construal);
  Json fitness;
  fitness["bias"] = frame.fitness.bias;
  Json terms = Json::array();
  for (const auto& term : frame.fitness.terms) {
    Json t;
    t["weight"] = term.weight;
    t["when"] = condition_to_json(term.when);
    terms.push_back(std::move(t));
  }
  fitness["terms"] = std::move(terms);
  j["fitness"] = std::move(fitness);
  Json refs = Json::array();
  for (const auto& rid : frame.resources) refs.push_back(rid);
  j["resources"] = std::move(refs);
  return j;
}

CognitiveResource parse_resource(const ResourceId& id, const Json& j, const std::string& where) {
  expect_object(j, where);
  check_keys(j, {"kind", "facts", "rules"}, where);
  CognitiveResource res;
  res.id = id;
  if (!j.contains("kind")) shape_error("resource missing \"kind\"", where);
  std::string kind = expect_string(j.at("kind"), where + "/kind");
  if (kind == "knowledge") {
    res.kind = ResourceKind::knowledge;
    if (j.contains("rules"))
      shape_error("knowledge resources hold facts, not rules", where);
    if (!j.contains("facts")) shape_error("knowledge resource missing \"facts\"", where);
    res.facts = scalar_map(j.at("facts"), where + "/facts");
  } else if (kind == "mechanism") {
    res.kind = ResourceKind::mechanism;
    if (j.contains("facts"))
      shape_error("mechanism resources hold rules, not facts", where);
    if (!j.contains("rules")) shape_error("mechanism resource missing \"rules\"", where);
    const auto& rules = expect_array(j.at("rules"), where + "/rules");
    for (std::size_t i = 0; i < rules.size(); ++i) {
      std::string rwhere = where + "/rules/" + std::to_string(i);
      expect_object(rules[i], rwhere);
      check_keys(rules[i], {"priority", "when", "then"}, rwhere);
      MechanismRule rule;
      if (rules[i].contains("priority")) {
        const Json& p = rules[i].at("priority");
        if (!p.is_number_integer() && !p.is_number_unsigned())
          shape_error("priority must be an integer", rwhere + "/priority");
        rule.priority = p.get<int>();
      }
      if (rules[i].contains("when"))
        rule.when = parse_condition(rules[i].at("when"), rwhere + "/when");
      if (!rules[i].contains("then")) shape_error("mechanism rule missing \"then\"", rwhere);
      const Json& then = expect_object(rules[i].at("then"), rwhere + "/then");
      check_keys(then, {"verb", "target", "args"}, rwhere + "/then");
      if (!then.contains("verb")) shape_error("action missing \"verb\"", rwhere + "/then");
      rule.then.verb = expect_string(then.at("verb"), rwhere + "/then/verb");
      if (rule.then.verb.empty()) shape_error("verb must be non-empty", rwhere + "/then/verb");
      if (then.contains("target"))
        rule.then.target = expect_string(then.at("target"), rwhere + "/then/target");
      if (then.contains("args"))
        rule.then.args = scalar_map(then.at("args"), rwhere + "/then/args");
      res.rules.push_back(std::move(rule));
    }
  } else {
    shape_error("resource kind must be \"knowledge\" or \"mechanism\"", where + "/kind");
  }
  return res;
}

Json resource_to_json(const CognitiveResource& res) {
  Json j;
  if (res.kind == ResourceKind::knowledge) {
    j["kind"] = "knowledge";
    Json facts = Json::object();
    for (const auto& [k, v] : res.facts) facts[k] = value_to_json(v);
    j["facts"] = std::move(facts);
  } else {
    j["kind"] = "mechanism";
    Json rules = Json::array();
    for (const auto& rule : res.rules) {
      Json r;
      r["priority"] = rule.priority;
      r["when"] = condition_to_json(rule.when);
      Json then;
      then["verb"] = rule.then.verb;
      if (rule.then.target) then["target"] = *rule.then.target;
      Json args = Json::object();
      for (const auto& [k, v] : rule.then.args) args[k] = value_to_json(v);
      then["args"] = std::move(args);
      r["then"] = std::move(then);
      rules.push_back(std::move(r));
    }
    j["rules"] = std::move(rules);
  }
  return j;
}

const char* policy_text(DeploymentPolicy p) {
  switch (p) {
    case DeploymentPolicy::instant: return "instant";
    case DeploymentPolicy::undeploy_hook: return "undeploy_hook";
    case DeploymentPolicy::decay: return "decay";
  }
  return "instant";
}

EngineParams parse_params(const Json& j, const std::string& where) {
  EngineParams params;
  expect_object(j, where);
  check_keys(j, {"epsilon", "alpha", "fitness_floor", "policy", "lambda", "theta"}, where);
  if (j.contains("epsilon")) {
    params.epsilon_salience = expect_number(j.at("epsilon"), where + "/epsilon");
    check_range(params.epsilon_salience, -1.0, 1.0, false, false, "epsilon", where + "/epsilon");
  }
  if (j.contains("alpha")) {
    params.alpha_default = expect_number(j.at("alpha"), where + "/alpha");
    check_range(params.alpha_default, 0.0, 1.0, false, false, "alpha", where + "/alpha");
  }
  if (j.contains("fitness_floor")) {
    params.fitness_floor = expect_number(j.at("fitness_floor"), where + "/fitness_floor");
    check_range(params.fitness_floor, 0.0, 1.0, true, false, "fitness_floor",
                where + "/fitness_floor");
  }
  if (j.contains("policy")) {
    std::string p = expect_string(j.at("policy"), where + "/policy");
    if (p == "instant") params.policy = DeploymentPolicy::instant;
    else if (p == "undeploy_hook") params.policy = DeploymentPolicy::undeploy_hook;
    else if (p == "decay") params.policy = DeploymentPolicy::decay;
    else shape_error("unknown policy \"" + p + "\"", where + "/policy");
  }
  if (j.contains("lambda")) {
    params.decay_lambda = expect_number(j.at("lambda"), where + "/lambda");
    check_range(params.decay_lambda, 0.0, 1.0, true, false, "lambda", where + "/lambda");
  }
  if (j.contains("theta")) {
    params.decay_theta = expect_number(j.at("theta"), where + "/theta");
    check_range(params.decay_theta, 0.0, 1.0, false, true, "theta", where + "/theta");
  }
  return params;
}

} // namespace

Scenario parse_scenario(const std::string& document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const Json::parse_error& e) {
    // Recover line/column from the byte offset for a usable message.
    std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    if (byte > document.size()) byte = document.size();
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte; ++i) {
      if (document[i] == '\n') { ++line; col = 1; }
      else ++col;
    }
    throw ParseError(std::string("invalid JSON: ") + e.what(),
                     "line " + std::to_string(line) + ", column " + std::to_string(col),
                     line, col);
  }

  expect_object(doc, "/");
  check_keys(doc, {"name", "params", "entities", "frames", "resources", "agents", "events"}, "/");

  Scenario scenario;
  if (!doc.contains("name")) shape_error("scenario missing \"name\"", "/");
  scenario.name = expect_string(doc.at("name"), "/name");
  if (scenario.name.empty()) shape_error("name must be non-empty", "/name");

  if (doc.contains("params")) scenario.params = parse_params(doc.at("params"), "/params");

  if (doc.contains("entities")) {
    for (const auto& [eid, attrs] : expect_object(doc.at("entities"), "/entities").items()) {
      check_id(eid, "/entities/" + eid);
      scenario.entities.emplace(eid, scalar_map(attrs, "/entities/" + eid));
    }
  }

  if (doc.contains("resources")) {
    for (const auto& [rid, body] : expect_object(doc.at("resources"), "/resources").items()) {
      check_id(rid, "/resources/" + rid);
      scenario.resources.emplace(rid, parse_resource(rid, body, "/resources/" + rid));
    }
  }

  if (doc.contains("frames")) {
    for (const auto& [fid, body] : expect_object(doc.at("frames"), "/frames").items()) {
      check_id(fid, "/frames/" + fid);
      scenario.frames.emplace(fid,
                              parse_frame(fid, body, "/frames/" + fid, scenario.resources));
    }
  }

  if (doc.contains("agents")) {
    for (const auto& [aid, body] : expect_object(doc.at("agents"), "/agents").items()) {
      std::string where = "/agents/" + aid;
      check_id(aid, where);
      expect_object(body, where);
      check_keys(body, {"frames", "preferences", "alpha", "default_salient"}, where);
      AgentSpec spec;
      spec.id = aid;
      spec.profile.alpha = scenario.params.alpha_default;
      if (body.contains("frames")) {
        const auto& refs = expect_array(body.at("frames"), where + "/frames");
        for (std::size_t i = 0; i < refs.size(); ++i) {
          std::string fwhere = where + "/frames/" + std::to_string(i);
          FrameId fid = expect_string(refs[i], fwhere);
          if (!scenario.frames.count(fid)) throw ReferenceError(fid, fwhere);
          spec.frames.push_back(std::move(fid));
        }
      } else {
        for (const auto& [fid, frame] : scenario.frames) spec.frames.push_back(fid);
      }
      if (body.contains("preferences")) {
        for (const auto& [fid, v] :
             expect_object(body.at("preferences"), where + "/preferences").items()) {
          std::string pwhere = where + "/preferences/" + fid;
          if (!scenario.frames.count(fid)) throw ReferenceError(fid, pwhere);
          double pref = expect_number(v, pwhere);
          check_range(pref, -1.0, 1.0, false, false, "preference", pwhere);
          spec.profile.preferences.emplace(fid, pref);
        }
      }
      if (body.contains("alpha")) {
        spec.profile.alpha = expect_number(body.at("alpha"), where + "/alpha");
        check_range(spec.profile.alpha, 0.0, 1.0, false, false, "alpha", where + "/alpha");
      }
      if (body.contains("default_salient")) {
        const auto& refs = expect_array(body.at("default_salient"), where + "/default_salient");
        for (std::size_t i = 0; i < refs.size(); ++i)
          spec.profile.default_salient.insert(
              expect_string(refs[i], where + "/default_salient/" + std::to_string(i)));
      }
      scenario.agents.emplace(aid, std::move(spec));
    }
  }

  if (doc.contains("events")) {
    const auto& events = expect_array(doc.at("events"), "/events");
    for (std::size_t i = 0; i < events.size(); ++i) {
      std::string where = "/events/" + std::to_string(i);
      expect_object(events[i], where);
      check_keys(events[i], {"tick", "entity", "set", "probability"}, where);
      ScriptedEvent event;
      if (!events[i].contains("tick")) shape_error("event missing \"tick\"", where);
      event.tick = expect_tick(events[i].at("tick"), where + "/tick");
      if (!events[i].contains("entity")) shape_error("event missing \"entity\"", where);
      event.entity = expect_string(events[i].at("entity"), where + "/entity");
      if (!events[i].contains("set")) shape_error("event missing \"set\"", where);
      event.set = scalar_map(events[i].at("set"), where + "/set");
      if (event.set.empty()) shape_error("event \"set\" must be non-empty", where + "/set");
      if (events[i].contains("probability")) {
        double p = expect_number(events[i].at("probability"), where + "/probability");
        check_range(p, 0.0, 1.0, false, false, "probability", where + "/probability");
        event.probability = p;
      }
      scenario.events.push_back(std::move(event));
    }
  }

  return scenario;
}

std::string serialize_scenario(const Scenario& scenario) {
  Json doc;
  doc["name"] = scenario.name;

  Json params;
  params["epsilon"] = scenario.params.epsilon_salience;
  params["alpha"] = scenario.params.alpha_default;
  params["fitness_floor"] = scenario.params.fitness_floor;
  params["policy"] = policy_text(scenario.params.policy);
  params["lambda"] = scenario.params.decay_lambda;
  params["theta"] = scenario.params.decay_theta;
  doc["params"] = std::move(params);

  Json entities = Json::object();
  for (const auto& [eid, attrs] : scenario.entities) {
    Json a = Json::object();
    for (const auto& [k, v] : attrs) a[k] = value_to_json(v);
    entities[eid] = std::move(a);
  }
  doc["entities"] = std::move(entities);

  Json frames = Json::object();
  for (const auto& [fid, frame] : scenario.frames) frames[fid] = frame_to_json(frame);
  doc["frames"] = std::move(frames);

  Json resources = Json::object();
  for (const auto& [rid, res] : scenario.resources) resources[rid] = resource_to_json(res);
  doc["resources"] = std::move(resources);

  Json agents = Json::object();
  for (const auto& [aid, spec] : scenario.agents) {
    Json a;
    Json frame_refs = Json::array();
    for (const auto& fid : spec.frames) frame_refs.push_back(fid);
    a["frames"] = std::move(frame_refs);
    Json prefs = Json::object();
    for (const auto& [fid, v] : spec.profile.preferences) prefs[fid] = v;
    a["preferences"] = std::move(prefs);
    a["alpha"] = spec.profile.alpha;
    Json salient = Json::array();
    for (const auto& fid : spec.profile.default_salient) salient.push_back(fid);
    a["default_salient"] = std::move(salient);
    agents[aid] = std::move(a);
  }
  doc["agents"] = std::move(agents);

  Json events = Json::array();
  for (const auto& event : scenario.events) {
    Json e;
    e["tick"] = event.tick;
    e["entity"] = event.entity;
    Json set = Json::object();
    for (const auto& [k, v] : event.set) set[k] = value_to_json(v);
    e["set"] = std::move(set);
    if (event.probability) e["probability"] = *event.probability;
    events.push_back(std::move(e));
  }
  doc["events"] = std::move(events);

  return doc.dump(2) + "\n";
}

namespace {

void collect_condition_attrs(const Condition& cond, std::set<std::string>& out) {
  for (const auto& atom : cond.atoms)
    if (atom.sel.kind == SelectorKind::attribute) out.insert(atom.sel.a);
}

} // namespace

std::vector<Diagnostic> validate(const Scenario& scenario) {
  std::vector<Diagnostic> out;
  auto error = [&](std::string message, std::string where) {
    out.push_back({Severity::error, std::move(message), std::move(where)});
  };
  auto warning = [&](std::string message, std::string where) {
    out.push_back({Severity::warning, std::move(message), std::move(where)});
  };

  if (scenario.agents.empty()) error("scenario declares no agents", "/agents");

  for (const auto& [eid, attrs] : scenario.entities) {
    auto it = attrs.find("location");
    if (it == attrs.end())
      error("entity \"" + eid + "\" has no location", "/entities/" + eid);
    else if (!is_text(it->second))
      error("entity \"" + eid + "\" location must be text", "/entities/" + eid + "/location");
  }

  // Attribute names the world can actually produce.
  std::set<std::string> declared_attrs;
  for (const auto& [eid, attrs] : scenario.entities)
    for (const auto& [name, v] : attrs) declared_attrs.insert(name);
  for (const auto& event : scenario.events)
    for (const auto& [name, v] : event.set) declared_attrs.insert(name);

  auto check_attrs = [&](const Condition& cond, const std::string& where) {
    std::set<std::string> used;
    collect_condition_attrs(cond, used);
    for (const auto& name : used)
      if (!declared_attrs.count(name))
        warning("attribute \"" + name + "\" is declared by no entity or event", where);
  };

  for (const auto& [fid, frame] : scenario.frames) {
    std::string fwhere = "/frames/" + fid;
    if (frame.resources.empty())
      warning("frame \"" + fid + "\" deploys no resources", fwhere + "/resources");
    for (std::size_t i = 0; i < frame.construal.size(); ++i) {
      const auto& rule = frame.construal[i];
      std::string rwhere = fwhere + "/construal/" + std::to_string(i);
      check_attrs(rule.filter, rwhere + "/filter");
      if (rule.annotate.attribute) {
        std::set<std::string> guaranteed;
        collect_condition_attrs(rule.filter, guaranteed);
        if (!guaranteed.count(*rule.annotate.attribute))
          warning("annotate copies attribute \"" + *rule.annotate.attribute +
                      "\" that the filter does not guarantee",
                  rwhere + "/annotate");
        if (!declared_attrs.count(*rule.annotate.attribute))
          warning("attribute \"" + *rule.annotate.attribute +
                      "\" is declared by no entity or event",
                  rwhere + "/annotate");
      }
    }
    for (std::size_t i = 0; i < frame.fitness.terms.size(); ++i)
      check_attrs(frame.fitness.terms[i].when,
                  fwhere + "/fitness/terms/" + std::to_string(i) + "/when");
  }

  auto check_memory_refs = [&](const Condition& cond, const std::string& where) {
    for (const auto& atom : cond.atoms) {
      if (atom.sel.kind == SelectorKind::fact) {
        auto it = scenario.resources.find(atom.sel.a);
        if (it == scenario.resources.end())
          warning("fact selector names undeclared resource \"" + atom.sel.a + "\"", where);
        else if (it->second.kind != ResourceKind::knowledge)
          warning("fact selector names non-knowledge resource \"" + atom.sel.a + "\"", where);
        else if (!it->second.facts.count(atom.sel.b))
          warning("resource \"" + atom.sel.a + "\" has no fact \"" + atom.sel.b + "\"", where);
      } else if (atom.sel.kind == SelectorKind::deployed) {
        if (!scenario.resources.count(atom.sel.a))
          warning("deployed selector names undeclared resource \"" + atom.sel.a + "\"", where);
      }
    }
  };
  for (const auto& [fid, frame] : scenario.frames)
    for (std::size_t i = 0; i < frame.fitness.terms.size(); ++i)
      check_memory_refs(frame.fitness.terms[i].when,
                        "/frames/" + fid + "/fitness/terms/" + std::to_string(i) + "/when");
  for (const auto& [rid, res] : scenario.resources)
    for (std::size_t i = 0; i < res.rules.size(); ++i) {
      std::string rwhere = "/resources/" + rid + "/rules/" + std::to_string(i);
      check_memory_refs(res.rules[i].when, rwhere + "/when");
      const auto& target = res.rules[i].then.target;
      if (target && *target != "?" && !scenario.entities.count(*target))
        warning("action targets undeclared entity \"" + *target + "\"", rwhere + "/then/target");
    }

  for (const auto& [aid, spec] : scenario.agents) {
    std::string awhere = "/agents/" + aid;
    if (!scenario.entities.count(aid))
      error("agent \"" + aid + "\" has no matching entity", awhere);
    std::set<FrameId> known(spec.frames.begin(), spec.frames.end());
    for (const auto& fid : spec.profile.default_salient)
      if (!known.count(fid))
        error("default_salient names unknown frame \"" + fid + "\"",
              awhere + "/default_salient");
  }

  for (std::size_t i = 0; i < scenario.events.size(); ++i)
    if (!scenario.entities.count(scenario.events[i].entity))
      error("event names undeclared entity \"" + scenario.events[i].entity + "\"",
            "/events/" + std::to_string(i) + "/entity");

  return out;
}

} // namespace csf
