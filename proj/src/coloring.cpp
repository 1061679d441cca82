#include "uec/coloring.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <unordered_map>

#include "uec/error.hpp"

namespace uec {

ColorPartition ColorPartition::from_labels(std::span<const int> labels) {
  std::map<int, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < static_cast<Vertex>(labels.size()); ++v) groups[labels[v]].push_back(v);
  ColorPartition p;
  for (auto& [label, vs] : groups) p.classes.push_back(std::move(vs));
  std::ranges::sort(p.classes, [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return p;
}

std::vector<int> ColorPartition::labels(int n) const {
  std::vector<int> out(n, -1);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (Vertex v : classes[i]) out[v] = static_cast<int>(i);
  return out;
}

void check_proper(const Graph& g, const ColorPartition& p) {
  VertexMask seen = 0;
  if (p.classes.size() > 3) throw InputError("partition has more than three classes");
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    const VertexMask c = p.class_mask(i);
    if (c & seen) throw InputError("partition classes overlap");
    if (c & ~g.vertices()) throw InputError("partition mentions a vertex outside the graph");
    seen |= c;
    for (Vertex v : p.classes[i])
      if (g.neighbors(v) & c) throw InputError("partition class " + std::to_string(i) + " is not independent");
  }
  if (seen != g.vertices()) throw InputError("partition does not cover every vertex");
}

namespace {

std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  std::ranges::stable_sort(order, [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

// Backtracking 3-colouring over a fixed vertex order with forward checking.
// Classes listed in `fixed` (used by a precolouring) are distinct; the other
// classes are interchangeable and are opened in increasing order.
class ThreeColoring {
 public:
  using Visitor = std::function<bool(const std::array<VertexMask, 3>&)>;

  ThreeColoring(const Graph& g, std::vector<Vertex> order) : g_(g), order_(std::move(order)) {}

  void fix(Vertex v, int c) {
    cls_[c] |= bit(v);
    fixed_classes_ |= 1U << c;
  }

  // Visits complete colourings until the visitor returns false.
  void run(const Visitor& visit) {
    VertexMask colored = cls_[0] | cls_[1] | cls_[2];
    sym_.clear();
    for (int c = 0; c < 3; ++c)
      if (!(fixed_classes_ >> c & 1U)) sym_.push_back(c);
    stop_ = false;
    visit_ = &visit;
    free_.clear();
    for (Vertex v : order_)
      if (!(colored & bit(v))) free_.push_back(v);
    descend(0, 0);
  }

 private:
  void descend(std::size_t i, int opened) {
    if (stop_) return;
    if (i == free_.size()) {
      if (!(*visit_)(cls_)) stop_ = true;
      return;
    }
    const Vertex v = free_[i];
    const VertexMask nv = g_.neighbors(v);
    for (int c = 0; c < 3 && !stop_; ++c) {
      const bool symmetric = !(fixed_classes_ >> c & 1U);
      int next_opened = opened;
      if (symmetric) {
        const auto rank = std::ranges::find(sym_, c) - sym_.begin();
        if (rank > opened) continue;
        if (rank == opened) next_opened = opened + 1;
      }
      if (nv & cls_[c]) continue;
      cls_[c] |= bit(v);
      if (viable(nv)) descend(i + 1, next_opened);
      cls_[c] &= ~bit(v);
    }
  }

  bool viable(VertexMask touched) const {
    const VertexMask colored = cls_[0] | cls_[1] | cls_[2];
    for (VertexMask s = touched & ~colored; s; s &= s - 1) {
      const VertexMask nw = g_.neighbors(lowest(s));
      if ((nw & cls_[0]) && (nw & cls_[1]) && (nw & cls_[2])) return false;
    }
    return true;
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  std::vector<Vertex> free_;
  std::array<VertexMask, 3> cls_{};
  unsigned fixed_classes_ = 0;
  std::vector<int> sym_;
  const Visitor* visit_ = nullptr;
  bool stop_ = false;
};

ColorPartition partition_of(const Graph& g, const std::array<VertexMask, 3>& cls) {
  std::vector<int> labels(g.order(), -1);
  for (int c = 0; c < 3; ++c)
    for (Vertex v : members(cls[c])) labels[v] = c;
  return ColorPartition::from_labels(labels);
}

// Labelled k-colourings of g[comp] by backtracking along a BFS order,
// memoised on the colours of the frontier: coloured vertices that still
// have an uncoloured neighbour. The count below a level depends only on
// those colours.
class ComponentCounter {
 public:
  ComponentCounter(const Graph& g, VertexMask comp, int k) : g_(g), k_(k) {
    VertexMask seen = bit(lowest(comp));
    order_.push_back(lowest(comp));
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (Vertex w : members(g.neighbors(order_[i]) & comp & ~seen)) {
        seen |= bit(w);
        order_.push_back(w);
      }
    const std::size_t len = order_.size();
    frontier_.assign(len + 1, 0);
    VertexMask done = 0, todo = comp;
    for (std::size_t i = 0; i < len; ++i) {
      done |= bit(order_[i]);
      todo &= ~bit(order_[i]);
      for (Vertex v : members(done))
        if (g.neighbors(v) & todo) frontier_[i + 1] |= bit(v);
    }
    memo_.resize(len + 1);
    color_.assign(g.order(), -1);
  }

  std::uint64_t count() { return rec(0); }

 private:
  std::uint64_t key(std::size_t i) const {
    std::uint64_t h = 0;
    for (Vertex v : members(frontier_[i])) h = h * 4 + static_cast<std::uint64_t>(color_[v]);
    return h;
  }

  std::uint64_t rec(std::size_t i) {
    if (i == order_.size()) return 1;
    // frontiers wider than 32 vertices do not fit the key; count without memo
    const bool memo = popcount(frontier_[i]) <= 32;
    const std::uint64_t h = memo ? key(i) : 0;
    if (memo)
      if (auto it = memo_[i].find(h); it != memo_[i].end()) return it->second;
    const Vertex v = order_[i];
    std::uint64_t total = 0;
    for (int c = 0; c < k_; ++c) {
      bool ok = true;
      for (Vertex w : members(g_.neighbors(v)))
        if (color_[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color_[v] = c;
      total += rec(i + 1);
      color_[v] = -1;
    }
    if (memo) memo_[i].emplace(h, total);
    return total;
  }

  const Graph& g_;
  int k_;
  std::vector<Vertex> order_;
  std::vector<VertexMask> frontier_;
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> memo_;
  std::vector<int> color_;
};

}  // namespace

std::vector<ColorPartition> proper_3_partitions(const Graph& g, std::size_t cap) {
  if (cap == 0) throw InputError("proper_3_partitions: cap must be at least 1");
  std::vector<ColorPartition> out;
  ThreeColoring engine(g, degree_order(g));
  engine.run([&](const std::array<VertexMask, 3>& cls) {
    out.push_back(partition_of(g, cls));
    return out.size() < cap;
  });
  return out;
}

std::uint64_t chromatic_value(const Graph& g, int k) {
  if (k < 0 || k > 4) throw InputError("chromatic_value: k must be in 0..4");
  std::uint64_t total = 1;
  for (VertexMask comp : components(g)) {
    total *= ComponentCounter(g, comp, k).count();
    if (total == 0) break;
  }
  return total;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (VertexMask comp : components(g)) {
    std::vector<Vertex> queue{lowest(comp)};
    side[queue[0]] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Vertex v = queue[i];
      for (Vertex w : members(g.neighbors(v))) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_3_colorable(const Graph& g) { return !proper_3_partitions(g, 1).empty(); }

UniqueColoring is_uniquely_3_colorable(const Graph& g) {
  UniqueColoring out;
  if (is_bipartite(g)) return out;
  auto parts = proper_3_partitions(g, 2);
  if (parts.size() == 1) {
    out.unique = true;
    out.partition = std::move(parts.front());
  }
  return out;
}

bool classes_union_connected(const Graph& g, const ColorPartition& p) {
  check_proper(g, p);
  for (std::size_t i = 0; i < p.classes.size(); ++i)
    for (std::size_t j = i + 1; j < p.classes.size(); ++j) {
      const VertexMask u = p.class_mask(i) | p.class_mask(j);
      if (components(g, u).size() != 1) return false;
    }
  return true;
}

std::vector<ColorPartition> extend_precoloring(const Graph& g, const Precoloring& assignment,
                                               std::size_t cap) {
  if (cap == 0) throw InputError("extend_precoloring: cap must be at least 1");
  ThreeColoring engine(g, degree_order(g));
  std::array<VertexMask, 3> cls{};
  for (auto [v, c] : assignment) {
    if (v < 0 || v >= g.order()) throw InputError("precolouring names a vertex outside the graph");
    if (c < 0 || c > 2) throw InputError("precolouring class must be 0, 1 or 2");
    if (g.neighbors(v) & cls[c])
      throw InputError("precolouring is improper at vertex " + std::to_string(v));
    cls[c] |= bit(v);
    engine.fix(v, c);
  }
  std::vector<ColorPartition> out;
  engine.run([&](const std::array<VertexMask, 3>& full) {
    out.push_back(partition_of(g, full));
    return out.size() < cap;
  });
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool colorable_with_equal(const Graph& g, Vertex a, Vertex b) {
  Graph h = g;
  if (h.has_edge(a, b)) h.remove_edge(a, b);
  ThreeColoring engine(h, degree_order(h));
  engine.fix(a, 0);
  engine.fix(b, 0);
  bool found = false;
  engine.run([&](const std::array<VertexMask, 3>&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace uec
