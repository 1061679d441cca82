#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace uec {

using Vertex = int;

/// Set of vertices of a graph with at most 64 vertices, bit v = vertex v.
using VertexMask = std::uint64_t;

inline constexpr int kMaxOrder = 64;

constexpr VertexMask bit(Vertex v) noexcept { return VertexMask{1} << v; }

constexpr VertexMask prefix_mask(int n) noexcept {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

constexpr int popcount(VertexMask s) noexcept { return std::popcount(s); }

constexpr Vertex lowest(VertexMask s) noexcept { return std::countr_zero(s); }

VertexMask mask_of(std::initializer_list<Vertex> vs);
VertexMask mask_of(std::span<const Vertex> vs);
std::vector<Vertex> members(VertexMask s);

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

Edge make_edge(Vertex a, Vertex b);

/// Simple undirected graph on the dense vertex range 0..n-1.
///
/// Adjacency is a bitmask per vertex, so edge membership and neighbourhood
/// intersections are single word operations. Every mutation keeps the
/// adjacency symmetric, loop-free and free of parallel edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  VertexMask vertices() const noexcept { return prefix_mask(n_); }
  VertexMask neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  int min_degree() const;
  int max_degree() const;

  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  /// Throws InputError on out-of-range endpoints, loops and duplicates.
  void add_edge(Vertex a, Vertex b);
  /// Throws InputError when the edge is absent.
  void remove_edge(Vertex a, Vertex b);

  /// Edges sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexMask> adj_;
};

Graph build_graph(int n, std::span<const Edge> edges);
Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

Graph delete_edge(const Graph& g, Edge e);

/// G/e: the ends of e are merged into the smaller endpoint, parallel edges
/// collapse, and the vertices above the larger endpoint shift down by one.
Graph contract_edge(const Graph& g, Edge e);

/// G[S], relabelled so that the members of S keep their relative order.
Graph induced_subgraph(const Graph& g, VertexMask s);

/// Edge union of graphs over the same vertex universe.
Graph union_subgraphs(std::span<const Graph> parts);

/// The subgraph spanned by the edges of g, with isolated vertices removed.
Graph drop_isolated(const Graph& g);

/// Graph with one extra vertex n adjacent to `neighbors`.
Graph add_vertex(const Graph& g, VertexMask neighbors);

/// Graph on the same universe keeping only the given edges.
Graph edge_subgraph(int n, std::span<const Edge> edges);

/// e(V1, V2). Throws InputError if the sets overlap.
int e_between(const Graph& g, VertexMask a, VertexMask b);

/// Vertex sets of the connected components of g[within].
std::vector<VertexMask> components(const Graph& g, VertexMask within);
std::vector<VertexMask> components(const Graph& g);
int component_count(const Graph& g);

bool is_connected(const Graph& g);
/// 2-connected: connected, at least 3 vertices, no cut vertex.
bool is_biconnected(const Graph& g);

using Triangle = std::array<Vertex, 3>;

/// All 3-cycles, each sorted, in lexicographic order.
std::vector<Triangle> triangles(const Graph& g);
int triangle_count(const Graph& g);

/// Triangles T such that G - V(T) has at least two components.
std::vector<Triangle> separating_3_cycles(const Graph& g);

}  // namespace uec
