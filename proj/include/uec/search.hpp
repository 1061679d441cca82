#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "uec/bounds.hpp"
#include "uec/graph.hpp"

namespace uec {

/// Predicates applied during enumeration. Hereditary ones (planar,
/// colorable) prune whole subtrees; the rest filter the final level.
struct PruneFlags {
  bool planar = true;
  bool colorable = true;   // every subgraph of a 3-colourable graph is 3-colourable
  bool connected = true;
  bool biconnected = true;
  bool min_degree2 = true;
  bool min_edges = true;   // m >= 2n - 3
  bool triangles = true;   // >= 2 triangles for n >= 4, >= 3 for n >= 5

  static PruneFlags none();
  /// Connected planar 3-colourable graphs.
  static PruneFlags pool();
};

struct Budget {
  double seconds = 0;       // 0 = unlimited
  std::uint64_t nodes = 0;  // 0 = unlimited
};

/// Nodes at `depth` vertices are numbered in DFS order; shard `index` of
/// `total` explores the subtrees below nodes numbered index mod total.
struct ShardSpec {
  int depth = 0;  // 0 = choose from n
  int index = 0;
  int total = 1;

  /// "i/t" or "depth:i/t". Throws InputError.
  static ShardSpec parse(std::string_view text);
  std::string to_string() const;
  bool sharded() const { return total > 1; }
  auto operator<=>(const ShardSpec&) const = default;
};

struct SearchConfig {
  int n = 0;
  int m_min = 0;
  int m_max = -1;  // -1 = largest possible under the flags
  PruneFlags prune;
  Budget budget;
  ShardSpec shard;
  int jobs = 1;
};

struct EnumerationStats {
  std::uint64_t nodes = 0;  // accepted tree nodes, all levels
  std::uint64_t emitted = 0;
  bool complete = true;  // false when the budget ran out
};

/// Isomorph-free enumeration: exactly one graph per isomorphism class on
/// n vertices with m in range and passing the flags. `sink` may be called
/// from several threads at once when jobs > 1.
EnumerationStats enumerate(const SearchConfig& config, const std::function<void(const Graph&)>& sink);

struct EnumerationResult {
  std::vector<std::string> graph6;  // canonical, sorted
  EnumerationStats stats;
};

EnumerationResult enumerate(const SearchConfig& config);

/// One line of the result cache:
/// canonical_g6 \t n \t m \t flags \t audit_digest \t shard
struct ResultRecord {
  std::string graph6;
  int n = 0;
  int m = 0;
  std::string flags;   // letters: P planar, U uniquely 3-colourable, E in U_E, S no separating 3-cycle
  std::string digest;  // audit verdict tally, "-" if not audited
  std::string shard;   // discovery shard, "all" when unsharded

  std::string to_line() const;
  /// Throws InputError on a malformed line.
  static ResultRecord parse(std::string_view line);
  auto operator<=>(const ResultRecord&) const = default;
};

/// Classifies and, for U_E members, audits a graph.
ResultRecord make_record(const Graph& g, const std::string& shard);

/// Append-only file of records keyed by canonical graph6.
class ResultCache {
 public:
  explicit ResultCache(std::string path);
  /// Reads existing records; duplicates collapse to the first occurrence.
  void load();
  /// Appends unless the key is present; returns whether it was new.
  bool add(const ResultRecord& r);
  std::vector<ResultRecord> records() const;  // sorted
  bool contains(const std::string& graph6) const;

 private:
  std::string path_;
  std::vector<ResultRecord> records_;
  std::set<std::string> keys_;
};

/// Union of shard outputs, sorted and deduplicated by graph6. Throws
/// InputError when the shard specs are not from one partition.
std::vector<ResultRecord> merge_shards(const std::vector<ShardSpec>& specs,
                                       const std::vector<std::vector<ResultRecord>>& outputs);

/// Size-table row from U_E records on n vertices.
SizeRow size_row_from(int n, const std::vector<ResultRecord>& records, bool complete);

struct SizeResult {
  SizeRow row;
  std::vector<ResultRecord> records;  // every U_E graph found, sorted
  EnumerationStats stats;
  bool audits_passed = true;
};

/// size(n) by exhaustive enumeration with the default flags; every U_E
/// graph is audited.
SizeResult compute_size(int n, int jobs = 1, Budget budget = {}, ShardSpec shard = {});

enum class HuntStrategy { augmentation, carving };

HuntStrategy parse_strategy(std::string_view name);
std::string to_string(HuntStrategy s);

struct HuntResult {
  std::vector<ResultRecord> hits;  // sorted, deduplicated, audited
  std::uint64_t candidates = 0;
  bool exhausted = true;  // false when the budget ran out
  bool audits_passed = true;
};

/// Throws PreconditionError when m exceeds floor(5n/2) - 6 (n >= 6) or
/// 3n - 6. Carving stops at the first phase that yields a hit.
HuntResult hunt(int n, int m, HuntStrategy strategy, Budget budget = {}, int jobs = 1);

/// Planar triangulations on n vertices (n >= 4), one per isomorphism class,
/// by vertex splitting from K4.
std::vector<Graph> triangulations(int n);

Json to_json(const ResultRecord& r);

}  // namespace uec
