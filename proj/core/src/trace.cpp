#include "csf/trace.hpp"

#include <sstream>

#include "csf/errors.hpp"

namespace csf {

std::string trace_line(const TraceEvent& event) {
  Json line;
  line["tick"] = event.tick;
  line["agent"] = event.agent;
  line["stage"] = stage_name(event.stage);
  line["payload"] = event.payload;
  return line.dump();
}

void write_trace(std::ostream& out, const std::vector<TraceEvent>& events) {
  for (const auto& event : events) out << trace_line(event) << '\n';
}

std::string trace_text(const std::vector<TraceEvent>& events) {
  std::ostringstream out;
  write_trace(out, events);
  return out.str();
}

TraceEvent parse_trace_line(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid trace line: ") + e.what(), "");
  }
  if (!j.is_object() || !j.contains("tick") || !j.contains("agent") || !j.contains("stage") ||
      !j.contains("payload"))
    throw ParseError("trace line missing tick/agent/stage/payload", "");
  TraceEvent event;
  event.tick = j.at("tick").get<std::uint64_t>();
  event.agent = j.at("agent").get<std::string>();
  std::string stage = j.at("stage").get<std::string>();
  if (stage == "perceive") event.stage = Stage::perceive;
  else if (stage == "interpret") event.stage = Stage::interpret;
  else if (stage == "update") event.stage = Stage::update;
  else if (stage == "execute") event.stage = Stage::execute;
  else if (stage == "act") event.stage = Stage::act;
  else throw ParseError("unknown stage: " + stage, "");
  event.payload = j.at("payload");
  return event;
}

} // namespace csf
