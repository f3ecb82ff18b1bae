#pragma once

#include "cross/metric.hpp"

#include <string>
#include <string_view>

namespace cross {

// Textual metric-spec grammar, e.g.
//   S7:h(0.5,1,1)   RP7:h(1,1,1)   CP3:hcheck(0.7)   S9:g(2)   S15:k(0.5)
//   Sd(11):round    RPd(11):round  CPn(4):fs  HPn(2):fs  CaP2:fs
// with an optional homothety suffix `*scale=2.0`.
// Throws parse_error (position + reason) on malformed input.
MetricSpec parse_metric(std::string_view text);

// Canonical text for a spec; parse_metric(format_metric(s)) == s.
std::string format_metric(const MetricSpec& spec);

} // namespace cross
