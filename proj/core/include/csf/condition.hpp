#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csf/ids.hpp"
#include "csf/value.hpp"

namespace csf {

struct Percept;
struct WorkingMemory;
struct LongTermMemory;

// Where an atom reads its value from.
//   attribute  "attr:<name>"                one attribute of the percept under test
//   social     "social:<dimension>"         any social percept on that dimension
//              "social:<subject>:<dim>"     subject-qualified; subject "?" binds the
//                                           enclosing mechanism rule's match variable
//   fact       "fact:<resource>:<key>"      knowledge fact of a deployed resource
//   deployed   "deployed:<resource>"        membership in the deployed resource set
enum class SelectorKind { attribute, social, fact, deployed };

struct Selector {
  SelectorKind kind = SelectorKind::attribute;
  std::string a; // attribute name | social subject ("" = any, "?" = bound) | resource id
  std::string b; // social dimension | fact key
  bool operator==(const Selector&) const = default;
};

// Selector string forms round-trip through these two.
Selector parse_selector(const std::string& text); // throws ParseError
std::string selector_text(const Selector& sel);

enum class Comparator { eq, ne, lt, le, gt, ge, exists };

std::optional<Comparator> comparator_from_text(const std::string& text);
std::string comparator_text(Comparator op);

// Three-valued lookup collapsed to bool: an absent selector makes every
// comparator false, including exists and !=.
struct ConditionAtom {
  Selector sel;
  Comparator op = Comparator::exists;
  std::optional<Value> literal; // required for every comparator except exists
  bool operator==(const ConditionAtom&) const = default;
};

// Conjunction of atoms; the empty conjunction is true.
struct Condition {
  std::vector<ConditionAtom> atoms;
  bool operator==(const Condition&) const = default;
};

// Ordered comparisons require matching types (numbers by value, text
// lexicographically, false < true); mismatched types compare unequal.
bool compare_values(const Value& lhs, Comparator op, const Value& rhs);

// Filter context: atoms address the percept's attributes. Selectors of any
// other kind evaluate as absent, keeping filters total.
bool eval_condition(const Condition& cond, const Percept& percept);

// Working-memory context for fitness terms and mechanism rules.
struct MemoryScope {
  const WorkingMemory* working = nullptr;
  const LongTermMemory* long_term = nullptr;
  const EntityId* bound_subject = nullptr; // binds "?" in social selectors
};

bool eval_condition(const Condition& cond, const MemoryScope& scope);

} // namespace csf
