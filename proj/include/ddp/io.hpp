#ifndef DDP_IO_HPP
#define DDP_IO_HPP

#include <string>

#include "ddp/graph.hpp"

namespace ddp {

enum class GraphFormat { EdgeList, Graph6 };

// Edge-list format: first non-comment line is the order n, every further
// line one "u v" pair. '#' starts a comment. graph6 is the standard
// McKay encoding (one graph per line, n <= 62 supported here).
Graph parse_graph(const std::string& text, GraphFormat format);  // throws ParseError

std::string serialize_graph(const Graph& g, GraphFormat format);

// Leading integer line means edge-list, anything else graph6.
GraphFormat detect_format(const std::string& text);

}  // namespace ddp

#endif
