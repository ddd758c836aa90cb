#pragma once

// Independent brute-force re-implementations of the interpret and update
// mechanisms, used as oracles. Everything here works on flat vectors with
// linear scans and re-derives atom evaluation, fitness arithmetic and the
// salience combiner from scratch; none of it calls the production path it
// checks.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "csf/memory.hpp"
#include "csf/types.hpp"

namespace oracle {

using namespace csf;

inline bool value_passes(const Value& have, Comparator op, const Value& want) {
  switch (op) {
    case Comparator::exists: return true;
    case Comparator::eq: return have == want;
    case Comparator::ne: return !(have == want);
    default: break;
  }
  if (have.index() != want.index()) return false;
  auto ord = [&](auto a, auto b) {
    switch (op) {
      case Comparator::lt: return a < b;
      case Comparator::le: return a <= b;
      case Comparator::gt: return a > b;
      case Comparator::ge: return a >= b;
      default: return false;
    }
  };
  if (is_number(have)) return ord(std::get<double>(have), std::get<double>(want));
  if (is_text(have)) return ord(std::get<std::string>(have), std::get<std::string>(want));
  return ord(std::get<bool>(have), std::get<bool>(want));
}

inline bool filter_passes(const Condition& filter, const Percept& p) {
  for (const auto& a : filter.atoms) {
    if (a.sel.kind != SelectorKind::attribute) return false;
    bool found = false;
    for (const auto& [name, value] : p.attributes) {
      if (name != a.sel.a) continue;
      found = true;
      if (a.op != Comparator::exists && !(a.literal && value_passes(value, a.op, *a.literal)))
        return false;
    }
    if (!found) return false;
  }
  return true;
}

// Alg. 2 by hand: per salient frame, per rule, per percept, collect emissions
// and merge by linear scan over a flat vector.
inline std::vector<SocialPercept> interpret_bruteforce(const std::vector<Percept>& percepts,
                                                       const std::vector<FrameId>& salient,
                                                       const LongTermMemory& ltm) {
  std::vector<SocialPercept> merged;
  for (const auto& fid : salient) {
    const auto& frame = ltm.frames.at(fid);
    for (const auto& rule : frame.construal) {
      for (const auto& p : percepts) {
        if (!filter_passes(rule.filter, p)) continue;
        SocialPercept emission;
        emission.subject = p.subject;
        emission.dimension = rule.annotate.dimension;
        if (rule.annotate.literal) {
          emission.value = *rule.annotate.literal;
        } else {
          bool found = false;
          for (const auto& [name, value] : p.attributes) {
            if (name == *rule.annotate.attribute) {
              emission.value = value;
              found = true;
            }
          }
          if (!found) continue;
        }
        emission.strength = rule.annotate.strength;
        emission.sources = {fid};

        bool absorbed = false;
        for (auto& existing : merged) {
          if (existing.subject == emission.subject &&
              existing.dimension == emission.dimension && existing.value == emission.value) {
            existing.sources.insert(fid);
            existing.strength = std::max(existing.strength, emission.strength);
            absorbed = true;
            break;
          }
        }
        if (!absorbed) merged.push_back(std::move(emission));
      }
    }
  }
  std::sort(merged.begin(), merged.end(), [](const SocialPercept& a, const SocialPercept& b) {
    if (a.subject != b.subject) return a.subject < b.subject;
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    return a.value < b.value;
  });
  return merged;
}

// Fitness term conditions in these generated scenarios use social selectors
// only; evaluated by scanning the percept vector.
inline bool memory_atom_passes(const ConditionAtom& a,
                               const std::vector<SocialPercept>& context) {
  if (a.sel.kind != SelectorKind::social) return false;
  for (const auto& sp : context) {
    if (!a.sel.a.empty() && a.sel.a != "?" && sp.subject != a.sel.a) continue;
    if (a.sel.a == "?") continue; // unbound here
    if (sp.dimension != a.sel.b) continue;
    if (a.op == Comparator::exists) return true;
    if (a.literal && value_passes(sp.value, a.op, *a.literal)) return true;
  }
  return false;
}

inline double fitness_bruteforce(const CognitiveSocialFrame& frame,
                                 const std::vector<SocialPercept>& context, double floor) {
  double v = frame.fitness.bias;
  for (const auto& term : frame.fitness.terms) {
    bool holds = true;
    for (const auto& a : term.when.atoms)
      if (!memory_atom_passes(a, context)) holds = false;
    if (holds) v += term.weight;
  }
  if (v < floor) v = floor;
  if (v > 1.0) v = 1.0;
  return v;
}

struct UpdateOracle {
  std::vector<FrameId> salient;
  std::vector<ResourceId> deployed;
};

// Alg. 3 by hand: threshold filter, then a flat union of resource sets.
inline UpdateOracle update_bruteforce(const std::vector<SocialPercept>& context,
                                      const LongTermMemory& ltm, const Profile& profile,
                                      double epsilon, double floor) {
  UpdateOracle out;
  for (const auto& [fid, frame] : ltm.frames) {
    double fitness = fitness_bruteforce(frame, context, floor);
    double preference = 0.0;
    for (const auto& [pid, v] : profile.preferences)
      if (pid == fid) preference = v;
    double sal = profile.alpha * (2.0 * fitness - 1.0) + (1.0 - profile.alpha) * preference;
    if (sal > epsilon) out.salient.push_back(fid);
  }
  for (const auto& fid : out.salient)
    for (const auto& rid : ltm.frames.at(fid).resources)
      if (std::find(out.deployed.begin(), out.deployed.end(), rid) == out.deployed.end())
        out.deployed.push_back(rid);
  std::sort(out.salient.begin(), out.salient.end());
  std::sort(out.deployed.begin(), out.deployed.end());
  return out;
}

} // namespace oracle
