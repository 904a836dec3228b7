#pragma once

#include <string>

#include "tvg/graph.hpp"

namespace tvg {

// Text format for evolving graphs:
//   teg 1
//   n <count>
//   lifetime finite                       | lifetime periodic <prefix_len> <period>
//   e <time> <u> <v>                      (u < v, times non-decreasing across lines)
// '#' starts a comment.  For periodic graphs, times in [0, prefix_len)
// describe the prefix and times in [prefix_len, prefix_len + period) the cycle.
EvolvingGraph parse_teg(const std::string& text);
std::string serialize_teg(const EvolvingGraph& g);

EvolvingGraph load_teg_file(const std::string& path);

}  // namespace tvg
