#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "uec/graph.hpp"

namespace uec {

/// graph6 (short header only, n <= 62). Throws InputError on bad length,
/// characters outside 63..126, or nonzero padding bits.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Edge-list text: optional `n <count>` line, then `u v` per line, `#` comments.
/// When the header is absent n is one more than the largest vertex seen.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

enum class GraphFormat { edgelist, graph6 };

GraphFormat parse_format(std::string_view name);

/// Names of the shipped fixtures (k3, p3, c4, ... twok4).
const std::vector<std::string>& fixture_names();
/// Fixture by name (case-insensitive). Throws InputError if unknown.
Graph fixture(std::string_view name);
/// Edge-list text of a fixture, in the layout of fixtures/<name>.el.
std::string fixture_text(std::string_view name);

}  // namespace uec
