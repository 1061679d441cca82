#include "uec/embedding.hpp"

#include <algorithm>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include "uec/error.hpp"

namespace uec {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(g.order());
  int index = 0;
  for (const Edge& e : g.edges()) {
    auto [d, ok] = boost::add_edge(e.u, e.v, bg);
    boost::put(boost::edge_index, bg, d, index++);
  }
  return bg;
}

bool trivially_planar(const Graph& g) { return g.order() <= 4 || g.size() <= 8; }

bool too_dense(const Graph& g) { return g.order() >= 3 && g.size() > 3 * g.order() - 6; }

}  // namespace

std::vector<Edge> FaceWalk::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    out.push_back(make_edge(vertices[i], vertices[(i + 1) % vertices.size()]));
  return out;
}

bool planar(const Graph& g) {
  if (trivially_planar(g)) return true;
  if (too_dense(g)) return false;
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

PlanarityResult is_planar(const Graph& g) {
  PlanarityResult out;
  if (too_dense(g)) return out;
  BoostGraph bg = to_boost(g);
  std::vector<std::vector<BoostEdge>> rot(g.order());
  const bool ok = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(rot.begin(), boost::get(boost::vertex_index, bg)));
  if (!ok) return out;
  PlanarEmbedding emb;
  emb.rotation.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (const BoostEdge& e : rot[v]) {
      const auto s = static_cast<Vertex>(boost::source(e, bg));
      const auto t = static_cast<Vertex>(boost::target(e, bg));
      emb.rotation[v].push_back(s == v ? t : s);
    }
  }
  out.planar = true;
  out.embedding = std::move(emb);
  return out;
}

void validate_rotation(const Graph& g, const PlanarEmbedding& emb) {
  if (static_cast<int>(emb.rotation.size()) != g.order())
    throw InputError("rotation system has wrong vertex count");
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& r = emb.rotation[v];
    if (mask_of(r) != g.neighbors(v) || static_cast<int>(r.size()) != g.degree(v))
      throw InputError("rotation at vertex " + std::to_string(v) + " does not match adjacency");
  }
}

FaceStructure::FaceStructure(const Graph& g, const PlanarEmbedding& emb) : n_(g.order()) {
  validate_rotation(g, emb);
  // position[v * n + w] = index of w in rotation[v]
  std::vector<int> position(n_ * n_, -1);
  for (Vertex v = 0; v < n_; ++v)
    for (std::size_t i = 0; i < emb.rotation[v].size(); ++i)
      position[v * n_ + emb.rotation[v][i]] = static_cast<int>(i);

  dart_face_.assign(n_ * n_, -1);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : emb.rotation[u]) {
      if (dart_face_[u * n_ + v] >= 0) continue;
      FaceWalk walk;
      const int id = static_cast<int>(faces_.size());
      Vertex a = u, b = v;
      while (dart_face_[a * n_ + b] < 0) {
        dart_face_[a * n_ + b] = id;
        walk.vertices.push_back(a);
        // next dart leaves b towards the successor of a in b's rotation
        const auto& rb = emb.rotation[b];
        const Vertex c = rb[(position[b * n_ + a] + 1) % rb.size()];
        a = b;
        b = c;
      }
      faces_.push_back(std::move(walk));
    }
  }
  int nontrivial = 0;
  for (VertexMask comp : components(g))
    if (popcount(comp) > 1) ++nontrivial;
  face_count_ = static_cast<int>(faces_.size()) - nontrivial + 1;
}

int FaceStructure::count_of_degree(int d) const {
  return static_cast<int>(std::ranges::count_if(faces_, [d](const FaceWalk& f) { return f.degree() == d; }));
}

int FaceStructure::count_of_degree_at_least(int d) const {
  return static_cast<int>(std::ranges::count_if(faces_, [d](const FaceWalk& f) { return f.degree() >= d; }));
}

std::vector<FaceWalk> faces(const Graph& g, const PlanarEmbedding& emb) {
  return FaceStructure(g, emb).faces();
}

DualMultigraph dual(const Graph& g, const PlanarEmbedding& emb) {
  const FaceStructure fs(g, emb);
  DualMultigraph d;
  d.nodes = static_cast<int>(fs.faces().size());
  d.node_degree.assign(d.nodes, 0);
  for (const Edge& e : g.edges()) {
    const int a = fs.face_of(e.u, e.v);
    const int b = fs.face_of(e.v, e.u);
    d.links.emplace_back(a, b);
    d.primal.push_back(e);
    ++d.node_degree[a];
    ++d.node_degree[b];
  }
  return d;
}

int euler_face_count(const Graph& g) { return g.size() - g.order() + 1 + component_count(g); }

}  // namespace uec
