#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "trt/graph.hpp"

namespace trt {

/// Encodes `g` as a graph6 line (no trailing newline).
std::string encode_graph6(const Graph& g);

/// Decodes one graph6 line. An optional ">>graph6<<" header and a trailing
/// "\n" or "\r\n" are accepted. Throws Graph6Error with the byte offset of
/// the first malformed byte (bad character, short or long body, nonzero
/// padding bits).
Graph decode_graph6(std::string_view line);

/// Reads every non-empty line of `in` as a graph6 graph.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace trt
