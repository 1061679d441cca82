#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "uec/graph.hpp"

namespace uec {

/// Partition of V(G) into at most three independent classes, stored
/// permutation-free: classes sorted internally and ordered by least element.
struct ColorPartition {
  std::vector<std::vector<Vertex>> classes;

  /// Canonical partition induced by a colour assignment (any labels).
  static ColorPartition from_labels(std::span<const int> labels);
  /// Class index per vertex, in canonical class order.
  std::vector<int> labels(int n) const;
  VertexMask class_mask(std::size_t i) const { return mask_of(classes[i]); }

  auto operator<=>(const ColorPartition&) const = default;
};

inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

/// Distinct partitions induced by proper 3-colourings (at most `cap`).
/// Vertices are coloured in descending degree order (ties by index); the
/// first vertex takes class 0 and class j opens only after class j-1.
std::vector<ColorPartition> proper_3_partitions(const Graph& g, std::size_t cap = kNoCap);

/// Number of proper labelled k-colourings, k <= 4, by backtracking memoised
/// on frontier colours.
std::uint64_t chromatic_value(const Graph& g, int k);

bool is_3_colorable(const Graph& g);
bool is_bipartite(const Graph& g);

struct UniqueColoring {
  bool unique = false;
  std::optional<ColorPartition> partition;
};

/// chi(G) = 3 and exactly one partition into three independent sets.
UniqueColoring is_uniquely_3_colorable(const Graph& g);

/// Whether each union of two colour classes induces a connected subgraph.
/// Throws InputError if p is not a proper partition of g.
bool classes_union_connected(const Graph& g, const ColorPartition& p);

/// Partial assignment vertex -> class in {0, 1, 2}.
using Precoloring = std::map<Vertex, int>;

/// Proper completions of a precolouring, as partitions (at most `cap`).
/// Throws InputError if the assignment is improper on its domain.
std::vector<ColorPartition> extend_precoloring(const Graph& g, const Precoloring& assignment,
                                               std::size_t cap = kNoCap);

/// Whether g has a proper 3-colouring in which a and b share a colour
/// (the edge ab, if present, is ignored). Equivalent to 3-colourability of
/// the graph with a and b identified.
bool colorable_with_equal(const Graph& g, Vertex a, Vertex b);

/// Throws InputError unless p partitions V(g) into independent sets.
void check_proper(const Graph& g, const ColorPartition& p);

}  // namespace uec
