#include <map>

#include "uec/canonical.hpp"
#include "uec/embedding.hpp"
#include "uec/error.hpp"
#include "uec/search.hpp"

namespace uec {

namespace {

// splits v along the rotation arc rot[a..b]: the new vertex takes the arc
// and v, and v keeps rot[a], rot[b] and everything outside the arc
Graph split_vertex(const Graph& t, Vertex v, const std::vector<Vertex>& rot, int a, int len) {
  const int d = static_cast<int>(rot.size());
  VertexMask arc = 0, inner = 0;
  for (int s = 0; s <= len; ++s) {
    arc |= bit(rot[(a + s) % d]);
    if (s > 0 && s < len) inner |= bit(rot[(a + s) % d]);
  }
  Graph g = add_vertex(t, arc | bit(v));
  for (Vertex w : members(inner)) g.remove_edge(v, w);
  return g;
}

}  // namespace

std::vector<Graph> triangulations(int n) {
  if (n < 4 || n > 20) throw InputError("triangulations: n must be in 4..20");
  std::map<std::string, Graph> level{{canonical_graph6(build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})),
                                      build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})}};
  for (int i = 4; i < n; ++i) {
    std::map<std::string, Graph> next;
    for (const auto& [key, t] : level) {
      const PlanarEmbedding emb = *is_planar(t).embedding;
      for (Vertex v = 0; v < i; ++v) {
        const auto& rot = emb.rotation[v];
        const int d = static_cast<int>(rot.size());
        for (int a = 0; a < d; ++a)
          for (int len = 1; len < d; ++len) {
            Graph g = split_vertex(t, v, rot, a, len);
            const CanonicalForm cf = canonical_form(g);
            if (!next.contains(cf.graph6)) next.emplace(cf.graph6, relabel(g, cf.labeling));
          }
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [key, g] : level) out.push_back(std::move(g));
  return out;
}

}  // namespace uec
