#pragma once

// Shared builders for the test suites. Value has a bool alternative, so bare
// string literals must never reach a Value constructor; always go through V().

#include <random>
#include <set>
#include <string>
#include <vector>

#include "csf/errors.hpp"
#include "csf/frames.hpp"
#include "csf/types.hpp"

namespace csft {

using namespace csf;

inline Value V(const char* s) { return Value(std::string(s)); }
inline Value V(std::string s) { return Value(std::move(s)); }
inline Value V(double d) { return Value(d); }
inline Value V(bool b) { return Value(b); }

inline ConditionAtom atom(const std::string& sel, const std::string& op, Value literal) {
  ConditionAtom a;
  a.sel = parse_selector(sel);
  a.op = *comparator_from_text(op);
  a.literal = std::move(literal);
  return a;
}

inline ConditionAtom atom_exists(const std::string& sel) {
  ConditionAtom a;
  a.sel = parse_selector(sel);
  a.op = Comparator::exists;
  return a;
}

inline Condition cond(std::vector<ConditionAtom> atoms) { return Condition{std::move(atoms)}; }

inline SocialPercept sp(EntityId subject, std::string dimension, Value value,
                        std::set<FrameId> sources, double strength = 1.0) {
  return SocialPercept{std::move(subject), std::move(dimension), std::move(value),
                       std::move(sources), strength};
}

inline AnnotateTemplate emit_literal(std::string dimension, Value value, double strength = 1.0) {
  AnnotateTemplate a;
  a.dimension = std::move(dimension);
  a.literal = std::move(value);
  a.strength = strength;
  return a;
}

// A frame whose fitness is a constant bias with no terms.
inline CognitiveSocialFrame bias_frame(FrameId id, double bias,
                                       std::set<ResourceId> resources = {}) {
  CognitiveSocialFrame f;
  f.id = std::move(id);
  f.fitness.bias = bias;
  f.resources = std::move(resources);
  return f;
}

inline LongTermMemory ltm_of(std::vector<CognitiveSocialFrame> frames,
                             std::vector<CognitiveResource> resources = {}) {
  LongTermMemory ltm;
  for (auto& f : frames) ltm.frames.emplace(f.id, std::move(f));
  for (auto& r : resources) ltm.resources.emplace(r.id, std::move(r));
  return ltm;
}

} // namespace csft
