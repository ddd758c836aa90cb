#include "csf/types.hpp"

#include <algorithm>

#include "csf/errors.hpp"

namespace csf {

Percept make_percept(EntityId subject,
                     std::vector<std::pair<std::string, Value>> attributes,
                     std::uint64_t tick) {
  Percept p;
  p.subject = std::move(subject);
  p.tick = tick;
  for (auto& [name, value] : attributes) {
    if (!p.attributes.emplace(name, std::move(value)).second)
      throw DomainError("duplicate percept attribute: " + name, p.subject);
  }
  return p;
}

bool PerceptKey::operator<(const PerceptKey& other) const {
  if (subject != other.subject) return subject < other.subject;
  return attributes < other.attributes;
}

PerceptKey percept_identity(const Percept& p) {
  PerceptKey key;
  key.subject = p.subject;
  key.attributes.assign(p.attributes.begin(), p.attributes.end()); // map order = name-sorted
  return key;
}

bool SocialKey::operator<(const SocialKey& other) const {
  if (subject != other.subject) return subject < other.subject;
  if (dimension != other.dimension) return dimension < other.dimension;
  return value < other.value;
}

SocialKey social_percept_identity(const SocialPercept& sp) {
  return SocialKey{sp.subject, sp.dimension, sp.value};
}

bool conflicts(const SocialPercept& a, const SocialPercept& b) {
  return a.subject == b.subject && a.dimension == b.dimension && !(a.value == b.value);
}

SocialPercept merge_percepts(SocialPercept a, const SocialPercept& b) {
  a.sources.insert(b.sources.begin(), b.sources.end());
  a.strength = std::max(a.strength, b.strength);
  return a;
}

void SocialContext::add(const SocialPercept& sp) {
  auto key = social_percept_identity(sp);
  auto [it, inserted] = by_key_.emplace(std::move(key), sp);
  if (!inserted) it->second = merge_percepts(it->second, sp);
}

const SocialPercept* SocialContext::find(const SocialKey& key) const {
  auto it = by_key_.find(key);
  return it == by_key_.end() ? nullptr : &it->second;
}

std::set<EntityId> SocialContext::subjects() const {
  std::set<EntityId> out;
  for (const auto& [key, sp] : by_key_) out.insert(sp.subject);
  return out;
}

} // namespace csf
