#include "csf/condition.hpp"

#include <functional>

#include "csf/errors.hpp"
#include "csf/memory.hpp"
#include "csf/types.hpp"

namespace csf {

namespace {

std::vector<std::string> split_selector(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(':', start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

} // namespace

Selector parse_selector(const std::string& text) {
  auto parts = split_selector(text);
  const auto bad = [&] { throw ParseError("malformed selector: " + text, ""); };
  Selector sel;
  if (parts.empty() || parts.front().empty()) bad();
  const std::string& kind = parts.front();
  if (kind == "attr") {
    if (parts.size() != 2 || parts[1].empty()) bad();
    sel.kind = SelectorKind::attribute;
    sel.a = parts[1];
  } else if (kind == "social") {
    sel.kind = SelectorKind::social;
    if (parts.size() == 2 && !parts[1].empty()) {
      sel.b = parts[1]; // any subject
    } else if (parts.size() == 3 && !parts[1].empty() && !parts[2].empty()) {
      sel.a = parts[1];
      sel.b = parts[2];
    } else {
      bad();
    }
  } else if (kind == "fact") {
    if (parts.size() != 3 || parts[1].empty() || parts[2].empty()) bad();
    sel.kind = SelectorKind::fact;
    sel.a = parts[1];
    sel.b = parts[2];
  } else if (kind == "deployed") {
    if (parts.size() != 2 || parts[1].empty()) bad();
    sel.kind = SelectorKind::deployed;
    sel.a = parts[1];
  } else {
    bad();
  }
  return sel;
}

std::string selector_text(const Selector& sel) {
  switch (sel.kind) {
    case SelectorKind::attribute: return "attr:" + sel.a;
    case SelectorKind::social:
      return sel.a.empty() ? "social:" + sel.b : "social:" + sel.a + ":" + sel.b;
    case SelectorKind::fact: return "fact:" + sel.a + ":" + sel.b;
    case SelectorKind::deployed: return "deployed:" + sel.a;
  }
  return {};
}

std::optional<Comparator> comparator_from_text(const std::string& text) {
  if (text == "==") return Comparator::eq;
  if (text == "!=") return Comparator::ne;
  if (text == "<") return Comparator::lt;
  if (text == "<=") return Comparator::le;
  if (text == ">") return Comparator::gt;
  if (text == ">=") return Comparator::ge;
  if (text == "exists") return Comparator::exists;
  return std::nullopt;
}

std::string comparator_text(Comparator op) {
  switch (op) {
    case Comparator::eq: return "==";
    case Comparator::ne: return "!=";
    case Comparator::lt: return "<";
    case Comparator::le: return "<=";
    case Comparator::gt: return ">";
    case Comparator::ge: return ">=";
    case Comparator::exists: return "exists";
  }
  return {};
}

namespace {

template <typename T>
bool ordered(const T& a, Comparator op, const T& b) {
  switch (op) {
    case Comparator::lt: return a < b;
    case Comparator::le: return a <= b;
    case Comparator::gt: return a > b;
    case Comparator::ge: return a >= b;
    default: return false;
  }
}

} // namespace

bool compare_values(const Value& lhs, Comparator op, const Value& rhs) {
  switch (op) {
    case Comparator::exists:
      return true;
    case Comparator::eq:
      return lhs == rhs;
    case Comparator::ne:
      return !(lhs == rhs);
    default:
      break;
  }
  if (lhs.index() != rhs.index()) return false;
  if (is_number(lhs)) return ordered(std::get<double>(lhs), op, std::get<double>(rhs));
  if (is_text(lhs)) return ordered(std::get<std::string>(lhs), op, std::get<std::string>(rhs));
  return ordered(std::get<bool>(lhs), op, std::get<bool>(rhs));
}

namespace {

bool atom_on_value(const ConditionAtom& atom, const Value& value) {
  if (atom.op == Comparator::exists) return true;
  if (!atom.literal) return false;
  return compare_values(value, atom.op, *atom.literal);
}

bool atom_holds_percept(const ConditionAtom& atom, const Percept& percept) {
  if (atom.sel.kind != SelectorKind::attribute) return false; // absent in this context
  auto it = percept.attributes.find(atom.sel.a);
  if (it == percept.attributes.end()) return false;
  return atom_on_value(atom, it->second);
}

bool atom_holds_memory(const ConditionAtom& atom, const MemoryScope& scope) {
  const WorkingMemory* wm = scope.working;
  switch (atom.sel.kind) {
    case SelectorKind::attribute:
      return false; // percept attributes are out of reach here
    case SelectorKind::social: {
      if (!wm) return false;
      const EntityId* subject = nullptr;
      if (atom.sel.a == "?") {
        if (!scope.bound_subject) return false;
        subject = scope.bound_subject;
      } else if (!atom.sel.a.empty()) {
        subject = &atom.sel.a;
      }
      for (const auto& sp : wm->social_context) { // existential over matches
        if (subject && sp.subject != *subject) continue;
        if (sp.dimension != atom.sel.b) continue;
        if (atom_on_value(atom, sp.value)) return true;
      }
      return false;
    }
    case SelectorKind::fact: {
      if (!wm || !scope.long_term) return false;
      if (wm->deployed.find(atom.sel.a) == wm->deployed.end()) return false;
      auto rit = scope.long_term->resources.find(atom.sel.a);
      if (rit == scope.long_term->resources.end()) return false;
      if (rit->second.kind != ResourceKind::knowledge) return false;
      auto fit = rit->second.facts.find(atom.sel.b);
      if (fit == rit->second.facts.end()) return false;
      return atom_on_value(atom, fit->second);
    }
    case SelectorKind::deployed: {
      if (!wm) return false;
      if (wm->deployed.find(atom.sel.a) == wm->deployed.end()) return false;
      return atom_on_value(atom, Value(true));
    }
  }
  return false;
}

} // namespace

bool eval_condition(const Condition& cond, const Percept& percept) {
  for (const auto& atom : cond.atoms)
    if (!atom_holds_percept(atom, percept)) return false;
  return true;
}

bool eval_condition(const Condition& cond, const MemoryScope& scope) {
  for (const auto& atom : cond.atoms)
    if (!atom_holds_memory(atom, scope)) return false;
  return true;
}

} // namespace csf
