#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "uec/graph.hpp"

namespace uec {

/// Rotation system: rotation[v] lists the neighbours of v in cyclic order.
struct PlanarEmbedding {
  std::vector<std::vector<Vertex>> rotation;
};

/// Closed boundary walk. Dart i runs vertices[i] -> vertices[i+1 mod len];
/// a cut edge appears twice, so degree() counts it twice.
struct FaceWalk {
  std::vector<Vertex> vertices;

  int degree() const { return static_cast<int>(vertices.size()); }
  VertexMask vertex_set() const { return mask_of(vertices); }
  std::vector<Edge> edges() const;
};

struct PlanarityResult {
  bool planar = false;
  std::optional<PlanarEmbedding> embedding;
};

/// Boyer-Myrvold planarity test; the embedding is its first embedding.
PlanarityResult is_planar(const Graph& g);

/// Planarity decision only (no embedding is materialised).
bool planar(const Graph& g);

/// Throws InputError if the rotation system does not describe g.
void validate_rotation(const Graph& g, const PlanarEmbedding& emb);

/// Faces of an embedding together with the dart -> face map.
class FaceStructure {
 public:
  FaceStructure(const Graph& g, const PlanarEmbedding& emb);

  const std::vector<FaceWalk>& faces() const { return faces_; }
  /// Face to the left of the dart u -> v (the face whose walk uses it).
  int face_of(Vertex u, Vertex v) const { return dart_face_[u * n_ + v]; }
  /// Faces of the plane graph: traversal walks of different components
  /// that bound the same outer region are counted once.
  int face_count() const { return face_count_; }
  int count_of_degree(int d) const;
  int count_of_degree_at_least(int d) const;

 private:
  int n_ = 0;
  std::vector<FaceWalk> faces_;
  std::vector<int> dart_face_;
  int face_count_ = 0;
};

std::vector<FaceWalk> faces(const Graph& g, const PlanarEmbedding& emb);

/// Dual multigraph: node per traversal face, one link per primal edge.
struct DualMultigraph {
  int nodes = 0;
  std::vector<std::pair<int, int>> links;  // links[i] is dual to primal[i]
  std::vector<Edge> primal;
  std::vector<int> node_degree;  // self-links contribute 2
};

DualMultigraph dual(const Graph& g, const PlanarEmbedding& emb);

/// Euler face count |E| - |V| + 1 + omega, valid for any planar graph.
int euler_face_count(const Graph& g);

}  // namespace uec
