#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "csf/engine.hpp"

namespace csf {

// Line-oriented trace format: one JSON object per line with keys in fixed
// order (tick, agent, stage, payload). Every line parses on its own, and a
// full trace from identical inputs is byte-identical.
std::string trace_line(const TraceEvent& event);

void write_trace(std::ostream& out, const std::vector<TraceEvent>& events);

std::string trace_text(const std::vector<TraceEvent>& events);

// Parses one line back into an event; throws ParseError on malformed input.
TraceEvent parse_trace_line(const std::string& line);

} // namespace csf
