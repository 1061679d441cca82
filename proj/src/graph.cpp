#include "uec/graph.hpp"

#include <algorithm>
#include <string>

#include "uec/error.hpp"

namespace uec {

VertexMask mask_of(std::initializer_list<Vertex> vs) {
  VertexMask s = 0;
  for (Vertex v : vs) s |= bit(v);
  return s;
}

VertexMask mask_of(std::span<const Vertex> vs) {
  VertexMask s = 0;
  for (Vertex v : vs) s |= bit(v);
  return s;
}

std::vector<Vertex> members(VertexMask s) {
  std::vector<Vertex> out;
  out.reserve(popcount(s));
  for (; s; s &= s - 1) out.push_back(lowest(s));
  return out;
}

Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder)
    throw InputError("graph order " + std::to_string(n) + " outside 0.." +
                     std::to_string(kMaxOrder));
  adj_.assign(n, 0);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw InputError("vertex " + std::to_string(v) + " out of range for n=" +
                     std::to_string(n_));
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : kMaxOrder;
  for (VertexMask a : adj_) d = std::min(d, popcount(a));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (VertexMask a : adj_) d = std::max(d, popcount(a));
  return d;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  return (adj_[a] >> b) & 1U;
}

void Graph::add_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw InputError("loop at vertex " + std::to_string(a));
  if (has_edge(a, b))
    throw InputError("duplicate edge " + std::to_string(a) + " " + std::to_string(b));
  adj_[a] |= bit(b);
  adj_[b] |= bit(a);
  ++m_;
}

void Graph::remove_edge(Vertex a, Vertex b) {
  if (!has_edge(a, b))
    throw InputError("edge " + std::to_string(a) + " " + std::to_string(b) +
                     " not in graph");
  adj_[a] &= ~bit(b);
  adj_[b] &= ~bit(a);
  --m_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (VertexMask s = adj_[u] & ~prefix_mask(u + 1); s; s &= s - 1)
      out.push_back({u, lowest(s)});
  return out;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

Graph delete_edge(const Graph& g, Edge e) {
  Graph h = g;
  h.remove_edge(e.u, e.v);
  return h;
}

Graph contract_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e)) throw InputError("cannot contract an edge that is not in the graph");
  const Vertex keep = std::min(e.u, e.v);
  const Vertex gone = std::max(e.u, e.v);
  auto relabel = [gone](Vertex x) { return x > gone ? x - 1 : x; };
  Graph h(g.order() - 1);
  for (const Edge& f : g.edges()) {
    Vertex a = f.u == gone ? keep : f.u;
    Vertex b = f.v == gone ? keep : f.v;
    if (a == b) continue;
    a = relabel(a);
    b = relabel(b);
    if (!h.has_edge(a, b)) h.add_edge(a, b);
  }
  return h;
}

Graph induced_subgraph(const Graph& g, VertexMask s) {
  if (s & ~g.vertices()) throw InputError("induced_subgraph: vertex set exceeds graph");
  std::vector<Vertex> index(g.order(), -1);
  int k = 0;
  for (Vertex v : members(s)) index[v] = k++;
  Graph h(k);
  for (Vertex v : members(s))
    for (Vertex w : members(g.neighbors(v) & s))
      if (v < w) h.add_edge(index[v], index[w]);
  return h;
}

Graph union_subgraphs(std::span<const Graph> parts) {
  if (parts.empty()) return Graph{};
  Graph h(parts.front().order());
  for (const Graph& p : parts) {
    if (p.order() != h.order())
      throw InputError("union_subgraphs: parts have different vertex universes");
    for (const Edge& e : p.edges())
      if (!h.has_edge(e)) h.add_edge(e.u, e.v);
  }
  return h;
}

Graph drop_isolated(const Graph& g) {
  VertexMask keep = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.neighbors(v)) keep |= bit(v);
  return induced_subgraph(g, keep);
}

Graph add_vertex(const Graph& g, VertexMask neighbors) {
  Graph h(g.order() + 1);
  for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
  for (Vertex v : members(neighbors)) h.add_edge(v, g.order());
  return h;
}

Graph edge_subgraph(int n, std::span<const Edge> edges) {
  Graph h(n);
  for (const Edge& e : edges)
    if (!h.has_edge(e)) h.add_edge(e.u, e.v);
  return h;
}

int e_between(const Graph& g, VertexMask a, VertexMask b) {
  if (a & b) throw InputError("e_between: vertex sets overlap");
  int count = 0;
  for (Vertex v : members(a)) count += popcount(g.neighbors(v) & b);
  return count;
}

std::vector<VertexMask> components(const Graph& g, VertexMask within) {
  std::vector<VertexMask> out;
  VertexMask left = within & g.vertices();
  while (left) {
    VertexMask comp = bit(lowest(left));
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (Vertex v : members(frontier)) next |= g.neighbors(v);
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

std::vector<VertexMask> components(const Graph& g) { return components(g, g.vertices()); }

int component_count(const Graph& g) { return static_cast<int>(components(g).size()); }

bool is_connected(const Graph& g) { return g.order() <= 1 || component_count(g) == 1; }

bool is_biconnected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (components(g, g.vertices() & ~bit(v)).size() != 1) return false;
  return true;
}

std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    const VertexMask up = g.neighbors(u) & ~prefix_mask(u + 1);
    for (Vertex v : members(up))
      for (Vertex w : members(up & g.neighbors(v) & ~prefix_mask(v + 1)))
        out.push_back({u, v, w});
  }
  return out;
}

int triangle_count(const Graph& g) {
  int count = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const VertexMask up = g.neighbors(u) & ~prefix_mask(u + 1);
    for (Vertex v : members(up)) count += popcount(up & g.neighbors(v) & ~prefix_mask(v + 1));
  }
  return count;
}

std::vector<Triangle> separating_3_cycles(const Graph& g) {
  std::vector<Triangle> out;
  for (const Triangle& t : triangles(g)) {
    const VertexMask rest = g.vertices() & ~mask_of({t[0], t[1], t[2]});
    if (components(g, rest).size() >= 2) out.push_back(t);
  }
  return out;
}

}  // namespace uec
