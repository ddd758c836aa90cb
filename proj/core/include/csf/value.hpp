#pragma once

#include <string>
#include <variant>

namespace csf {

// Scalar carried by percept attributes, social percepts and knowledge facts:
// text, number or boolean. No nested structures, so rule evaluation stays total.
// Equality never crosses types (Value(true) != Value(1.0)).
using Value = std::variant<std::string, double, bool>;

inline bool is_text(const Value& v) { return std::holds_alternative<std::string>(v); }
inline bool is_number(const Value& v) { return std::holds_alternative<double>(v); }
inline bool is_bool(const Value& v) { return std::holds_alternative<bool>(v); }

// Human-readable form for diagnostics and messages.
std::string value_repr(const Value& v);

} // namespace csf
