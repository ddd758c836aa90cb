#include "csf/memory.hpp"

#include <cstring>

#include "csf/errors.hpp"

namespace csf {

void sensory_write(SensoryMemory& mem, std::vector<Percept> percepts) {
  mem.percepts = std::move(percepts);
}

std::vector<Percept> sensory_drain(SensoryMemory& mem) {
  std::vector<Percept> out;
  out.swap(mem.percepts);
  return out;
}

namespace {

// FNV-1a over a structural walk of the definitions.
struct Hasher {
  std::uint64_t h = 14695981039346656037ull;

  void bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= 1099511628211ull;
    }
  }
  void text(const std::string& s) {
    std::uint64_t n = s.size();
    bytes(&n, sizeof n);
    bytes(s.data(), s.size());
  }
  void number(double d) { bytes(&d, sizeof d); }
  void tag(unsigned char t) { bytes(&t, 1); }
  void value(const Value& v) {
    tag(static_cast<unsigned char>(v.index()));
    if (is_text(v)) text(std::get<std::string>(v));
    else if (is_number(v)) number(std::get<double>(v));
    else tag(std::get<bool>(v) ? 1 : 0);
  }
  void condition(const Condition& c) {
    for (const auto& atom : c.atoms) {
      text(selector_text(atom.sel));
      text(comparator_text(atom.op));
      tag(atom.literal ? 1 : 0);
      if (atom.literal) value(*atom.literal);
    }
    tag(0xCE);
  }
};

} // namespace

std::uint64_t ltm_fingerprint(const LongTermMemory& ltm) {
  Hasher hash;
  for (const auto& [fid, frame] : ltm.frames) {
    hash.text(fid);
    for (const auto& rule : frame.construal) {
      hash.condition(rule.filter);
      hash.text(rule.annotate.dimension);
      hash.tag(rule.annotate.literal ? 1 : 0);
      if (rule.annotate.literal) hash.value(*rule.annotate.literal);
      if (rule.annotate.attribute) hash.text(*rule.annotate.attribute);
      hash.number(rule.annotate.strength);
    }
    hash.number(frame.fitness.bias);
    for (const auto& term : frame.fitness.terms) {
      hash.condition(term.when);
      hash.number(term.weight);
    }
    for (const auto& rid : frame.resources) hash.text(rid);
    hash.tag(0xF5);
  }
  for (const auto& [rid, res] : ltm.resources) {
    hash.text(rid);
    hash.tag(res.kind == ResourceKind::knowledge ? 'k' : 'm');
    for (const auto& [k, v] : res.facts) {
      hash.text(k);
      hash.value(v);
    }
    for (const auto& rule : res.rules) {
      hash.number(rule.priority);
      hash.condition(rule.when);
      hash.text(rule.then.verb);
      hash.tag(rule.then.target ? 1 : 0);
      if (rule.then.target) hash.text(*rule.then.target);
      for (const auto& [k, v] : rule.then.args) {
        hash.text(k);
        hash.value(v);
      }
    }
    hash.tag(0xE5);
  }
  return hash.h;
}

std::optional<Value> ResourceView::scratch(const std::string& key) const {
  auto it = state_->working.scratch.find(key);
  if (it == state_->working.scratch.end()) return std::nullopt;
  return it->second;
}

void ResourceView::set_scratch(const std::string& key, Value value) {
  state_->working.scratch[key] = std::move(value);
}

const CognitiveSocialFrame& ResourceView::frame(const FrameId& id) const {
  auto it = state_->long_term.frames.find(id);
  if (it == state_->long_term.frames.end()) throw UnknownFrame(id);
  return it->second;
}

std::optional<Value> ResourceView::fact(const ResourceId& resource, const std::string& key) const {
  if (state_->working.deployed.find(resource) == state_->working.deployed.end())
    return std::nullopt;
  auto rit = state_->long_term.resources.find(resource);
  if (rit == state_->long_term.resources.end()) return std::nullopt;
  if (rit->second.kind != ResourceKind::knowledge) return std::nullopt;
  auto fit = rit->second.facts.find(key);
  if (fit == rit->second.facts.end()) return std::nullopt;
  return fit->second;
}

const std::vector<Percept>& ResourceView::read_sensory() const {
  state_->audit.denied_sensory_attempts += 1;
  throw AccessViolation(1, "cognitive resource denied sensory memory read (access rule 1: "
                           "observations of the world go through the social context)");
}

void ResourceView::write_sensory(std::vector<Percept>) {
  state_->audit.denied_sensory_attempts += 1;
  throw AccessViolation(1, "cognitive resource denied sensory memory write (access rule 1)");
}

ResourceView open_resource_view(AgentState& state) {
  return ResourceView(state);
}

} // namespace csf
