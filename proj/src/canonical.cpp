#include "uec/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "uec/error.hpp"
#include "uec/io.hpp"

namespace uec {

namespace {

// Ordered partition of the positions 0..n-1. cell_size[s] is the size of the
// cell starting at position s and 0 at positions inside a cell.
struct Partition {
  std::vector<int> lab;
  std::vector<int> cell_size;

  bool discrete() const {
    return std::ranges::all_of(cell_size, [](int s) { return s <= 1; });
  }
};

VertexMask cell_mask(const Partition& p, int start) {
  VertexMask m = 0;
  for (int i = start; i < start + p.cell_size[start]; ++i) m |= bit(p.lab[i]);
  return m;
}

// Equitable refinement. Splitting decisions depend only on cell positions and
// neighbour counts, so the result is invariant under relabelling.
void refine(const Graph& g, Partition& p, std::vector<int> queue) {
  const int n = g.order();
  std::vector<char> queued(n, 0);
  for (int s : queue) queued[s] = 1;
  std::vector<int> count(n);
  std::vector<int> order(n);
  std::size_t head = 0;
  while (head < queue.size()) {
    const int ws = queue[head++];
    queued[ws] = 0;
    const VertexMask w = cell_mask(p, ws);
    for (int xs = 0; xs < n;) {
      const int size = p.cell_size[xs];
      if (size == 1) {
        ++xs;
        continue;
      }
      bool uniform = true;
      for (int i = 0; i < size; ++i) {
        count[i] = popcount(g.neighbors(p.lab[xs + i]) & w);
        if (count[i] != count[0]) uniform = false;
      }
      if (uniform) {
        xs += size;
        continue;
      }
      std::iota(order.begin(), order.begin() + size, 0);
      std::stable_sort(order.begin(), order.begin() + size,
                       [&](int a, int b) { return count[a] < count[b]; });
      std::vector<int> saved(p.lab.begin() + xs, p.lab.begin() + xs + size);
      std::vector<int> sorted_counts(size);
      for (int i = 0; i < size; ++i) {
        p.lab[xs + i] = saved[order[i]];
        sorted_counts[i] = count[order[i]];
      }
      // cut into fragments of equal count
      std::vector<std::pair<int, int>> fragments;  // (start, size)
      int fs = 0;
      for (int i = 1; i <= size; ++i) {
        if (i == size || sorted_counts[i] != sorted_counts[fs]) {
          fragments.emplace_back(xs + fs, i - fs);
          fs = i;
        }
      }
      for (auto [s, len] : fragments) {
        p.cell_size[s] = len;
        for (int i = s + 1; i < s + len; ++i) p.cell_size[i] = 0;
      }
      if (queued[xs]) {
        for (std::size_t f = 1; f < fragments.size(); ++f) {
          queue.push_back(fragments[f].first);
          queued[fragments[f].first] = 1;
        }
      } else {
        std::size_t largest = 0;
        for (std::size_t f = 1; f < fragments.size(); ++f)
          if (fragments[f].second > fragments[largest].second) largest = f;
        for (std::size_t f = 0; f < fragments.size(); ++f) {
          if (f == largest) continue;
          queue.push_back(fragments[f].first);
          queued[fragments[f].first] = 1;
        }
      }
      xs += size;
    }
  }
}

using Certificate = std::vector<VertexMask>;

Certificate certificate(const Graph& g, const std::vector<int>& lab) {
  const int n = g.order();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[lab[i]] = i;
  Certificate rows(n, 0);
  for (int i = 0; i < n; ++i)
    for (VertexMask s = g.neighbors(lab[i]); s; s &= s - 1) rows[i] |= bit(pos[lowest(s)]);
  return rows;
}

class LabelSearch {
 public:
  explicit LabelSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run(Partition root) {
    std::vector<int> queue;
    for (int s = 0; s < n_; s += root.cell_size[s]) queue.push_back(s);
    refine(g_, root, queue);
    std::vector<int> prefix;
    dfs(root, prefix);
  }

  const std::vector<int>& best_lab() const { return best_lab_; }

 private:
  // Returns the depth to backtrack to; values below the current depth abort
  // the remaining siblings.
  int dfs(const Partition& p, std::vector<int>& prefix) {
    const int depth = static_cast<int>(prefix.size());
    if (p.discrete()) return leaf(p, prefix);

    int target = 0;
    while (p.cell_size[target] <= 1) target += std::max(1, p.cell_size[target]);
    const int size = p.cell_size[target];
    std::vector<int> candidates(p.lab.begin() + target, p.lab.begin() + target + size);
    std::ranges::sort(candidates);

    std::vector<int> explored;
    for (int w : candidates) {
      if (!explored.empty() && pruned(w, explored, prefix)) continue;
      Partition child = p;
      const auto at = std::find(child.lab.begin() + target, child.lab.begin() + target + size, w);
      std::iter_swap(child.lab.begin() + target, at);
      child.cell_size[target] = 1;
      child.cell_size[target + 1] = size - 1;
      refine(g_, child, {target});
      prefix.push_back(w);
      const int back = dfs(child, prefix);
      prefix.pop_back();
      explored.push_back(w);
      if (back < depth) return back;
    }
    return depth;
  }

  int leaf(const Partition& p, const std::vector<int>& prefix) {
    Certificate cert = certificate(g_, p.lab);
    const int depth = static_cast<int>(prefix.size());
    if (first_lab_.empty()) {
      first_lab_ = best_lab_ = p.lab;
      first_cert_ = best_cert_ = std::move(cert);
      first_path_ = best_path_ = prefix;
      return depth;
    }
    if (cert == first_cert_) {
      record(first_lab_, p.lab);
      return common_prefix(first_path_, prefix);
    }
    if (cert == best_cert_) {
      record(best_lab_, p.lab);
      return common_prefix(best_path_, prefix);
    }
    if (cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = p.lab;
      best_path_ = prefix;
    }
    return depth;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    int i = 0;
    while (i < static_cast<int>(std::min(a.size(), b.size())) && a[i] == b[i]) ++i;
    return i;
  }

  void record(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> perm(n_);
    for (int i = 0; i < n_; ++i) perm[from[i]] = to[i];
    generators_.push_back(std::move(perm));
  }

  // w is skipped when an automorphism fixing the prefix pointwise maps an
  // explored sibling onto it.
  bool pruned(int w, const std::vector<int>& explored, const std::vector<int>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& perm : generators_) {
      if (!std::ranges::all_of(prefix, [&](int v) { return perm[v] == v; })) continue;
      any = true;
      for (int v = 0; v < n_; ++v) parent[find(v)] = find(perm[v]);
    }
    if (!any) return false;
    const int rw = find(w);
    return std::ranges::any_of(explored, [&](int x) { return find(x) == rw; });
  }

  const Graph& g_;
  int n_;
  std::vector<int> first_lab_, best_lab_;
  Certificate first_cert_, best_cert_;
  std::vector<int> first_path_, best_path_;
  std::vector<std::vector<int>> generators_;
};

CanonicalForm finish(const Graph& g, std::vector<int> lab) {
  CanonicalForm out;
  out.labeling = std::move(lab);
  out.graph6 = emit_graph6(relabel(g, out.labeling));
  return out;
}

}  // namespace

Graph relabel(const Graph& g, std::span<const Vertex> labeling) {
  const int n = g.order();
  if (static_cast<int>(labeling.size()) != n) throw InputError("relabel: labeling size mismatch");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (labeling[i] < 0 || labeling[i] >= n || pos[labeling[i]] >= 0)
      throw InputError("relabel: labeling is not a permutation");
    pos[labeling[i]] = i;
  }
  Graph h(n);
  for (const Edge& e : g.edges()) h.add_edge(pos[e.u], pos[e.v]);
  return h;
}

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors) {
  const int n = g.order();
  if (static_cast<int>(colors.size()) != n) throw InputError("canonical_form: colour count mismatch");
  Partition root;
  root.lab.resize(n);
  std::iota(root.lab.begin(), root.lab.end(), 0);
  std::ranges::stable_sort(root.lab, [&](int a, int b) { return colors[a] < colors[b]; });
  root.cell_size.assign(n, 0);
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colors[root.lab[j]] == colors[root.lab[i]]) ++j;
    root.cell_size[i] = j - i;
    i = j;
  }
  if (n == 0) return finish(g, {});
  LabelSearch search(g);
  search.run(std::move(root));
  return finish(g, search.best_lab());
}

CanonicalForm canonical_form(const Graph& g) {
  const std::vector<int> colors(g.order(), 0);
  return canonical_form(g, colors);
}

std::string canonical_graph6(const Graph& g) { return canonical_form(g).graph6; }

bool same_orbit(const Graph& g, Vertex a, Vertex b) {
  if (a == b) return true;
  if (g.degree(a) != g.degree(b)) return false;
  std::vector<int> ca(g.order(), 1), cb(g.order(), 1);
  ca[a] = 0;
  cb[b] = 0;
  return canonical_form(g, ca).graph6 == canonical_form(g, cb).graph6;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_graph6(a) == canonical_graph6(b);
}

}  // namespace uec
