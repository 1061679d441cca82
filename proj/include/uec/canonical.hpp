#pragma once

#include <span>
#include <string>
#include <vector>

#include "uec/graph.hpp"

namespace uec {

struct CanonicalForm {
  /// labeling[i] is the input vertex placed at canonical position i.
  std::vector<Vertex> labeling;
  /// graph6 of the relabelled graph; equal iff the inputs are isomorphic.
  std::string graph6;
};

/// Canonical labelling by equitable refinement and individualisation, with
/// subtrees pruned by automorphisms discovered during the search.
CanonicalForm canonical_form(const Graph& g);

/// As above, respecting a vertex colouring: colour classes are kept in
/// increasing colour order and only colour-preserving maps are allowed.
CanonicalForm canonical_form(const Graph& g, std::span<const int> colors);

std::string canonical_graph6(const Graph& g);

/// The graph with vertex labeling[i] renamed to i.
Graph relabel(const Graph& g, std::span<const Vertex> labeling);

/// Whether some automorphism of g maps a to b.
bool same_orbit(const Graph& g, Vertex a, Vertex b);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace uec
