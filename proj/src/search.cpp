#include "uec/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "uec/audit.hpp"
#include "uec/canonical.hpp"
#include "uec/coloring.hpp"
#include "uec/criticality.hpp"
#include "uec/embedding.hpp"
#include "uec/error.hpp"
#include "uec/io.hpp"

namespace uec {

PruneFlags PruneFlags::none() { return {false, false, false, false, false, false, false}; }

PruneFlags PruneFlags::pool() {
  PruneFlags f = none();
  f.planar = f.colorable = f.connected = true;
  return f;
}

namespace {

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
    throw InputError(std::string("bad ") + what + ": '" + std::string(s) + "'");
  return v;
}

int pairs(int i) { return i * (i - 1) / 2; }

int edge_cap(int i, bool planar_only) { return planar_only && i >= 3 ? 3 * i - 6 : pairs(i); }

using Clock = std::chrono::steady_clock;

class BudgetClock {
 public:
  explicit BudgetClock(const Budget& b) : budget_(b), start_(Clock::now()) {}
  /// Counts one unit of work; true once the budget is spent.
  bool tick() {
    const std::uint64_t k = ++count_;
    if (budget_.nodes && k > budget_.nodes) return spent_ = true;
    if (budget_.seconds > 0 && (k & 63) == 0 &&
        std::chrono::duration<double>(Clock::now() - start_).count() > budget_.seconds)
      return spent_ = true;
    return spent_.load();
  }
  bool spent() const { return spent_; }
  std::uint64_t count() const { return count_; }

 private:
  Budget budget_;
  Clock::time_point start_;
  std::atomic<std::uint64_t> count_{0};
  std::atomic<bool> spent_{false};
};

class Enumerator {
 public:
  Enumerator(const SearchConfig& cfg, const std::function<void(const Graph&)>& sink)
      : cfg_(cfg), f_(cfg.prune), sink_(sink), clock_(cfg.budget) {
    if (cfg.n < 1 || cfg.n > 16) throw InputError("enumerate: n must be in 1..16");
    m_max_ = cfg.m_max < 0 ? edge_cap(cfg.n, f_.planar) : std::min(cfg.m_max, edge_cap(cfg.n, f_.planar));
    m_min_ = std::max(cfg.m_min, 0);
    if (f_.min_edges && cfg.n >= 2) m_min_ = std::max(m_min_, 2 * cfg.n - 3);
    if (cfg.shard.total < 1 || cfg.shard.index < 0 || cfg.shard.index >= cfg.shard.total)
      throw InputError("enumerate: bad shard " + cfg.shard.to_string());
    depth_ = cfg.shard.depth > 0 ? std::min(cfg.shard.depth, cfg.n) : std::max(1, cfg.n - 2);
  }

  EnumerationStats run() {
    const Graph root(1);
    if (cfg_.n == 1) {
      if (m_min_ == 0 && final_ok(root) && cfg_.shard.index == 0) emit(root);
      return finish();
    }
    std::vector<Graph> prefix;
    collect(root, 1, prefix);
    std::vector<const Graph*> mine;
    for (std::size_t i = 0; i < prefix.size(); ++i)
      if (static_cast<int>(i % cfg_.shard.total) == cfg_.shard.index) mine.push_back(&prefix[i]);
    if (depth_ == cfg_.n) {
      for (const Graph* g : mine) emit(*g);
      return finish();
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next++) < mine.size() && !clock_.spent();) dfs(*mine[i], depth_);
    };
    const int jobs = std::max(1, cfg_.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    return finish();
  }

 private:
  EnumerationStats finish() {
    return {clock_.count(), emitted_.load(), !clock_.spent()};
  }

  void emit(const Graph& g) {
    ++emitted_;
    sink_(g);
  }

  // largest edge count reachable at level n from m edges at level j, given
  // that each added vertex has minimum degree
  int reachable(int j, int m) const {
    for (int i = j + 1; i <= cfg_.n; ++i) {
      int best = std::min(edge_cap(i, f_.planar), m + i - 1);
      while (best > m && best - (2 * best) / i > m) --best;
      m = best;
    }
    return m;
  }

  bool final_ok(const Graph& g) const {
    const int n = g.order(), m = g.size();
    if (m < m_min_ || m > m_max_) return false;
    if (f_.min_edges && n >= 2 && m < 2 * n - 3) return false;
    if (f_.min_degree2 && n >= 3 && g.min_degree() < 2) return false;
    if (f_.connected && !is_connected(g)) return false;
    if (f_.biconnected && !is_biconnected(g)) return false;
    if (f_.triangles && n >= 4 && triangle_count(g) < (n >= 5 ? 3 : 2)) return false;
    return true;
  }

  template <class Visit>
  void children(const Graph& g, Visit&& visit) {
    const int i = g.order() + 1;
    const Vertex v = i - 1;
    const bool last = i == cfg_.n;
    std::vector<std::pair<std::string, Graph>> accepted;
    std::unordered_set<std::string> seen;
    const VertexMask all = g.vertices();
    for (VertexMask s = 0; s <= all; ++s) {
      const int d = popcount(s);
      if (last && f_.min_degree2 && cfg_.n >= 3 && d < 2) continue;
      bool ok = true;
      for (Vertex w = 0; w < i - 1 && ok; ++w)
        ok = g.degree(w) + static_cast<int>((s >> w) & 1) >= d;
      if (!ok) continue;
      const int m = g.size() + d;
      if (m > m_max_ || m > edge_cap(i, f_.planar) || reachable(i, m) < m_min_) continue;
      Graph child = add_vertex(g, s);
      if (last && !final_ok(child)) continue;
      if (f_.planar && !planar(child)) continue;
      if (f_.colorable && !is_3_colorable(child)) continue;
      // canonical deletion: among vertices of least (degree, neighbour degree
      // sum), the one placed last by the canonical labelling, up to orbit
      std::vector<std::pair<int, int>> inv(i);
      for (Vertex w = 0; w < i; ++w) {
        int sum = 0;
        for (Vertex x : members(child.neighbors(w))) sum += child.degree(x);
        inv[w] = {child.degree(w), sum};
      }
      const auto least = *std::ranges::min_element(inv);
      if (inv[v] != least) continue;
      const CanonicalForm cf = canonical_form(child);
      if (std::ranges::count(inv, least) > 1) {
        Vertex best = -1;
        for (int pos = i - 1; pos >= 0 && best < 0; --pos)
          if (inv[cf.labeling[pos]] == least) best = cf.labeling[pos];
        if (best != v && !same_orbit(child, v, best)) continue;
      }
      if (!seen.insert(cf.graph6).second) continue;
      accepted.emplace_back(cf.graph6, std::move(child));
    }
    std::ranges::sort(accepted, {}, &std::pair<std::string, Graph>::first);
    for (auto& [key, child] : accepted) {
      if (clock_.spent()) return;
      visit(child);
    }
  }

  void collect(const Graph& g, int level, std::vector<Graph>& out) {
    if (level == depth_) {
      out.push_back(g);
      return;
    }
    children(g, [&](const Graph& c) {
      clock_.tick();
      collect(c, level + 1, out);
    });
  }

  void dfs(const Graph& g, int level) {
    if (level == cfg_.n) {
      emit(g);
      return;
    }
    children(g, [&](const Graph& c) {
      if (clock_.tick()) return;
      dfs(c, level + 1);
    });
  }

  const SearchConfig& cfg_;
  PruneFlags f_;
  const std::function<void(const Graph&)>& sink_;
  BudgetClock clock_;
  int m_min_ = 0;
  int m_max_ = 0;
  int depth_ = 1;
  std::atomic<std::uint64_t> emitted_{0};
};

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    out.emplace_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

}  // namespace

ShardSpec ShardSpec::parse(std::string_view text) {
  ShardSpec s;
  std::string_view rest = text;
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    s.depth = parse_int(text.substr(0, colon), "shard depth");
    if (s.depth < 1) throw InputError("shard depth must be positive");
    rest = text.substr(colon + 1);
  }
  const auto slash = rest.find('/');
  if (slash == std::string_view::npos) throw InputError("shard spec must look like i/t or depth:i/t");
  s.index = parse_int(rest.substr(0, slash), "shard index");
  s.total = parse_int(rest.substr(slash + 1), "shard total");
  if (s.total < 1 || s.index < 0 || s.index >= s.total)
    throw InputError("shard index must satisfy 0 <= i < t");
  return s;
}

std::string ShardSpec::to_string() const {
  return (depth > 0 ? std::to_string(depth) + ":" : std::string()) + std::to_string(index) + "/" +
         std::to_string(total);
}

EnumerationStats enumerate(const SearchConfig& config, const std::function<void(const Graph&)>& sink) {
  return Enumerator(config, sink).run();
}

EnumerationResult enumerate(const SearchConfig& config) {
  EnumerationResult out;
  std::mutex mu;
  out.stats = enumerate(config, [&](const Graph& g) {
    std::string key = canonical_graph6(g);
    const std::lock_guard lock(mu);
    out.graph6.push_back(std::move(key));
  });
  std::ranges::sort(out.graph6);
  return out;
}

// ---------------------------------------------------------------------------

std::string ResultRecord::to_line() const {
  return graph6 + "\t" + std::to_string(n) + "\t" + std::to_string(m) + "\t" + flags + "\t" + digest + "\t" +
         shard;
}

ResultRecord ResultRecord::parse(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto f = split_tabs(line);
  if (f.size() != 6) throw InputError("result record needs 6 tab-separated fields, got " + std::to_string(f.size()));
  ResultRecord r;
  r.graph6 = f[0];
  r.n = parse_int(f[1], "record n");
  r.m = parse_int(f[2], "record m");
  r.flags = f[3];
  r.digest = f[4];
  r.shard = f[5];
  const Graph g = parse_graph6(r.graph6);
  if (g.order() != r.n || g.size() != r.m) throw InputError("result record n/m disagree with its graph6");
  if (r.flags.empty() || r.flags.find_first_not_of("PUES-") != std::string::npos)
    throw InputError("result record has bad flags '" + r.flags + "'");
  if (r.digest.empty() || r.shard.empty()) throw InputError("result record has an empty field");
  return r;
}

ResultRecord make_record(const Graph& g, const std::string& shard) {
  ResultRecord r;
  r.graph6 = canonical_graph6(g);
  r.n = g.order();
  r.m = g.size();
  r.shard = shard;
  const ClassificationReport c = classify(g);
  const bool sep_free = separating_3_cycles(g).empty();
  if (c.planar) r.flags += 'P';
  if (c.uniquely_3) r.flags += 'U';
  if (c.in_ue) r.flags += 'E';
  if (sep_free) r.flags += 'S';
  if (r.flags.empty()) r.flags = "-";
  r.digest = c.in_ue && is_connected(g) ? audit_instance(g, DomainMode::strict).digest() : "-";
  return r;
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {}

void ResultCache::load() {
  if (!std::filesystem::exists(path_)) {
    std::ofstream create(path_);
    if (!create) throw InputError("cannot create " + path_);
    return;
  }
  std::ifstream in(path_);
  if (!in) throw InputError("cannot read " + path_);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    ResultRecord r;
    try {
      r = ResultRecord::parse(line);
    } catch (const InputError& e) {
      throw InputError(path_ + ": line " + std::to_string(lineno) + ": " + e.what());
    }
    if (keys_.insert(r.graph6).second) records_.push_back(std::move(r));
  }
}

bool ResultCache::add(const ResultRecord& r) {
  if (!keys_.insert(r.graph6).second) return false;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw InputError("cannot append to " + path_);
  out << r.to_line() << '\n';
  records_.push_back(r);
  return true;
}

std::vector<ResultRecord> ResultCache::records() const {
  auto out = records_;
  std::ranges::sort(out);
  return out;
}

bool ResultCache::contains(const std::string& graph6) const { return keys_.contains(graph6); }

std::vector<ResultRecord> merge_shards(const std::vector<ShardSpec>& specs,
                                       const std::vector<std::vector<ResultRecord>>& outputs) {
  if (specs.size() != outputs.size()) throw InputError("merge_shards: one output per shard spec");
  for (const auto& s : specs)
    if (s.depth != specs.front().depth || s.total != specs.front().total)
      throw InputError("merge_shards: overlapping shard specs " + specs.front().to_string() + " and " +
                       s.to_string());
  std::vector<ResultRecord> all;
  for (const auto& o : outputs) all.insert(all.end(), o.begin(), o.end());
  std::ranges::sort(all);
  std::vector<ResultRecord> out;
  for (auto& r : all)
    if (out.empty() || out.back().graph6 != r.graph6) out.push_back(std::move(r));
  return out;
}

SizeRow size_row_from(int n, const std::vector<ResultRecord>& records, bool complete) {
  SizeRow row;
  row.n = n;
  row.complete = complete;
  for (const auto& r : records) {
    if (r.n != n || r.flags.find('E') == std::string::npos) continue;
    ++row.ue_count;
    if (!row.size || r.m > *row.size) {
      row.size = r.m;
      row.witnesses.clear();
    }
    if (r.m == *row.size) row.witnesses.push_back(r.graph6);
  }
  std::ranges::sort(row.witnesses);
  return row;
}

SizeResult compute_size(int n, int jobs, Budget budget, ShardSpec shard) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.jobs = jobs;
  cfg.budget = budget;
  cfg.shard = shard;
  SizeResult out;
  std::mutex mu;
  const std::string tag = shard.sharded() ? shard.to_string() : "all";
  out.stats = enumerate(cfg, [&](const Graph& g) {
    if (!is_uniquely_3_colorable(g).unique) return;
    ResultRecord r = make_record(g, tag);
    if (r.flags.find('E') == std::string::npos) return;
    const std::lock_guard lock(mu);
    out.records.push_back(std::move(r));
  });
  std::ranges::sort(out.records);
  for (const auto& r : out.records)
    if (!r.digest.ends_with("f0")) out.audits_passed = false;
  out.row = size_row_from(n, out.records, out.stats.complete && !shard.sharded());
  return out;
}

HuntStrategy parse_strategy(std::string_view name) {
  if (name == "augmentation") return HuntStrategy::augmentation;
  if (name == "carving" || name == "triangulation-carving") return HuntStrategy::carving;
  throw InputError("unknown strategy '" + std::string(name) + "' (augmentation or carving)");
}

std::string to_string(HuntStrategy s) {
  return s == HuntStrategy::augmentation ? "augmentation" : "carving";
}

namespace {

class Carver {
 public:
  Carver(int n, int m, Budget budget) : n_(n), m_(m), q_(3 * n - 6 - m), clock_(budget) {}

  HuntResult run() {
    const auto all = triangulations(n_);
    std::vector<const Graph*> eulerian, other;
    for (const Graph& t : all) {
      bool even = true;
      for (Vertex v = 0; v < n_; ++v) even = even && t.degree(v) % 2 == 0;
      (even ? eulerian : other).push_back(&t);
    }
    // phase 1: deleted edges on pairwise distinct faces (equality in the
    // 3-face count), Eulerian triangulations first; phase 2: any q edges
    for (const auto* group : {&eulerian, &other})
      for (const Graph* t : *group) {
        if (clock_.spent()) break;
        carve(*t, true);
      }
    if (out_.hits.empty())
      for (const Graph& t : all) {
        if (clock_.spent()) break;
        carve(t, false);
      }
    out_.exhausted = !clock_.spent();
    out_.candidates = clock_.count();
    std::ranges::sort(out_.hits);
    for (const auto& r : out_.hits)
      if (!r.digest.ends_with("f0")) out_.audits_passed = false;
    return std::move(out_);
  }

 private:
  void carve(const Graph& t, bool distinct_faces) {
    const PlanarEmbedding emb = *is_planar(t).embedding;
    const FaceStructure fs(t, emb);
    edges_ = t.edges();
    face_pairs_.clear();
    for (const Edge& e : edges_) face_pairs_.push_back({fs.face_of(e.u, e.v), fs.face_of(e.v, e.u)});
    chosen_.clear();
    pick(t, 0, 0, distinct_faces, false);
  }

  void pick(const Graph& t, std::size_t from, std::uint64_t used_faces, bool distinct, bool clash) {
    if (clock_.spent()) return;
    if (static_cast<int>(chosen_.size()) == q_) {
      if (!distinct && !clash) return;  // already covered by phase 1
      clock_.tick();
      test(t);
      return;
    }
    const std::size_t left = q_ - chosen_.size();
    for (std::size_t i = from; i + left <= edges_.size(); ++i) {
      const std::uint64_t faces = (std::uint64_t{1} << face_pairs_[i].first) | (std::uint64_t{1} << face_pairs_[i].second);
      const bool overlaps = (faces & used_faces) != 0;
      if (distinct && overlaps) continue;
      chosen_.push_back(i);
      pick(t, i + 1, used_faces | faces, distinct, clash || overlaps);
      chosen_.pop_back();
      if (clock_.spent()) return;
    }
  }

  void test(const Graph& t) {
    Graph g = t;
    for (std::size_t i : chosen_) g.remove_edge(edges_[i].u, edges_[i].v);
    if (g.min_degree() < 2 || triangle_count(g) < 3) return;
    if (!is_uniquely_3_colorable(g).unique) return;
    if (!classify(g).in_ue) return;
    const std::string key = canonical_graph6(g);
    if (!seen_.insert(key).second) return;
    out_.hits.push_back(make_record(g, "hunt:carving"));
  }

  int n_, m_, q_;
  BudgetClock clock_;
  HuntResult out_;
  std::vector<Edge> edges_;
  std::vector<std::pair<int, int>> face_pairs_;
  std::vector<std::size_t> chosen_;
  std::unordered_set<std::string> seen_;
};

}  // namespace

HuntResult hunt(int n, int m, HuntStrategy strategy, Budget budget, int jobs) {
  if (n < 3 || n > 30) throw PreconditionError("hunt: n must be in 3..30");
  const int cap = n >= 6 ? upper_line(n) : 3 * n - 6;
  if (m > cap)
    throw PreconditionError("hunt: m = " + std::to_string(m) + " exceeds the upper bound " + std::to_string(cap));
  if (m < 2 * n - 3) throw PreconditionError("hunt: m is below 2n - 3, no U_E graph exists");
  if (strategy == HuntStrategy::carving) {
    if (n < 4) throw PreconditionError("hunt: carving needs n >= 4");
    return Carver(n, m, budget).run();
  }
  if (n > 16) throw PreconditionError("hunt: augmentation supports n <= 16");
  SearchConfig cfg;
  cfg.n = n;
  cfg.m_min = cfg.m_max = m;
  cfg.budget = budget;
  cfg.jobs = jobs;
  HuntResult out;
  std::mutex mu;
  const EnumerationStats st = enumerate(cfg, [&](const Graph& g) {
    if (!is_uniquely_3_colorable(g).unique) return;
    ResultRecord r = make_record(g, "hunt:augmentation");
    if (r.flags.find('E') == std::string::npos) return;
    const std::lock_guard lock(mu);
    out.hits.push_back(std::move(r));
  });
  out.candidates = st.emitted;
  out.exhausted = st.complete;
  std::ranges::sort(out.hits);
  for (const auto& r : out.hits)
    if (!r.digest.ends_with("f0")) out.audits_passed = false;
  return out;
}

Json to_json(const ResultRecord& r) {
  return {{"graph6", r.graph6}, {"n", r.n}, {"m", r.m}, {"flags", r.flags}, {"audit_digest", r.digest},
          {"shard", r.shard}};
}

}  // namespace uec
