#include "csf/value.hpp"

#include <charconv>
#include <limits>

namespace csf {

std::string value_repr(const Value& v) {
  if (is_text(v)) return "\"" + std::get<std::string>(v) + "\"";
  if (is_bool(v)) return std::get<bool>(v) ? "true" : "false";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), std::get<double>(v));
  return std::string(buf, end);
}

} // namespace csf
