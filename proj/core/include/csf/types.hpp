#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "csf/condition.hpp"
#include "csf/ids.hpp"
#include "csf/value.hpp"

namespace csf {

// A raw sensory observation of one entity, taken in the cycle named by tick.
struct Percept {
  EntityId subject;
  std::map<std::string, Value> attributes;
  std::uint64_t tick = 0;
  bool operator==(const Percept&) const = default;
};

// Convenience builder; throws DomainError on duplicate attribute names.
Percept make_percept(EntityId subject,
                     std::vector<std::pair<std::string, Value>> attributes,
                     std::uint64_t tick = 0);

// Identity of a percept: subject plus name-sorted attribute list. The tick is
// deliberately excluded.
struct PerceptKey {
  EntityId subject;
  std::vector<std::pair<std::string, Value>> attributes;
  bool operator==(const PerceptKey&) const = default;
  bool operator<(const PerceptKey& other) const;
};

PerceptKey percept_identity(const Percept& p);

// An interpreted percept: some frame read a social meaning (dimension, value)
// into the subject. strength grades how strongly, in [0,1].
struct SocialPercept {
  EntityId subject;
  std::string dimension;
  Value value;
  std::set<FrameId> sources;
  double strength = 1.0;
  bool operator==(const SocialPercept&) const = default;
};

// Identity of a social percept: sources and strength excluded, so the same
// meaning produced by different frames collapses onto one key.
struct SocialKey {
  EntityId subject;
  std::string dimension;
  Value value;
  bool operator==(const SocialKey&) const = default;
  bool operator<(const SocialKey& other) const;
};

SocialKey social_percept_identity(const SocialPercept& sp);

// True iff a and b read different values into the same subject and dimension.
bool conflicts(const SocialPercept& a, const SocialPercept& b);

// Merge two percepts with equal identity keys: sources unioned, strength max.
SocialPercept merge_percepts(SocialPercept a, const SocialPercept& b);

// The agent's interpretation of its surroundings: a set of social percepts
// with no two elements sharing an identity key. Conflicting percepts (same
// subject and dimension, different value) may coexist; adding a percept whose
// key is already present merges instead of replacing.
class SocialContext {
public:
  void add(const SocialPercept& sp);

  bool contains(const SocialKey& key) const { return by_key_.count(key) != 0; }
  const SocialPercept* find(const SocialKey& key) const;

  std::size_t size() const { return by_key_.size(); }
  bool empty() const { return by_key_.empty(); }

  // Iterates percepts in identity-key order.
  auto begin() const { return Iterator{by_key_.begin()}; }
  auto end() const { return Iterator{by_key_.end()}; }

  std::set<EntityId> subjects() const;

  bool operator==(const SocialContext&) const = default;

private:
  using Map = std::map<SocialKey, SocialPercept>;

  struct Iterator {
    using iterator_category = std::forward_iterator_tag;
    using value_type = SocialPercept;
    using difference_type = std::ptrdiff_t;
    using pointer = const SocialPercept*;
    using reference = const SocialPercept&;

    Map::const_iterator it;
    const SocialPercept& operator*() const { return it->second; }
    const SocialPercept* operator->() const { return &it->second; }
    Iterator& operator++() { ++it; return *this; }
    Iterator operator++(int) { Iterator copy = *this; ++it; return copy; }
    bool operator==(const Iterator&) const = default;
  };

  Map by_key_;
};

// Interpretation phase of a construal rule: what the matched percept means.
// The emitted value is either a literal or a copy of one percept attribute.
struct AnnotateTemplate {
  std::string dimension;
  std::optional<Value> literal;         // exactly one of literal /
  std::optional<std::string> attribute; // attribute is set
  double strength = 1.0;
  bool operator==(const AnnotateTemplate&) const = default;
};

// One construal rule: the filter is the attention phase, the annotate template
// the interpretation phase. Filters are total over any percept.
struct ConstrualRule {
  Condition filter;
  AnnotateTemplate annotate;
  bool operator==(const ConstrualRule&) const = default;
};

struct FitnessTerm {
  Condition when;
  double weight = 0.0;
  bool operator==(const FitnessTerm&) const = default;
};

// Weighted conditional sum over working-memory contents, clamped into
// [fitness_floor, 1] at evaluation time.
struct FitnessExpr {
  double bias = 0.0;
  std::vector<FitnessTerm> terms;
  bool operator==(const FitnessExpr&) const = default;
};

struct CognitiveSocialFrame {
  FrameId id;
  std::vector<ConstrualRule> construal; // explicitly empty is allowed
  FitnessExpr fitness;
  std::set<ResourceId> resources;
  bool operator==(const CognitiveSocialFrame&) const = default;
};

// What a fired mechanism rule emits. target "?" resolves to the subject bound
// by the rule's social selectors.
struct ActionTemplate {
  std::string verb;
  std::optional<std::string> target;
  std::map<std::string, Value> args;
  bool operator==(const ActionTemplate&) const = default;
};

struct MechanismRule {
  int priority = 0; // lower fires first; ties keep declaration order
  Condition when;
  ActionTemplate then;
  bool operator==(const MechanismRule&) const = default;
};

enum class ResourceKind { knowledge, mechanism };

// A deployable unit of cognition: either knowledge (facts) or a mechanism
// (priority-ordered condition -> action rules). Exactly one side is populated.
struct CognitiveResource {
  ResourceId id;
  ResourceKind kind = ResourceKind::knowledge;
  std::map<std::string, Value> facts;
  std::vector<MechanismRule> rules;
  bool operator==(const CognitiveResource&) const = default;
};

// Per-agent disposition: intrinsic frame preferences in [-1,1] (absent frames
// count as 0), the fitness/preference balance weight alpha, and the frames
// salient at tick 0.
struct Profile {
  std::map<FrameId, double> preferences;
  double alpha = 0.5;
  std::set<FrameId> default_salient;
  bool operator==(const Profile&) const = default;
};

} // namespace csf
