#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "uec/canonical.hpp"
#include "uec/criticality.hpp"
#include "uec/error.hpp"
#include "uec/io.hpp"
#include "uec/search.hpp"

using namespace uec;

namespace {

std::set<std::string> ue_set(int n, PruneFlags flags) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.prune = flags;
  std::set<std::string> out;
  enumerate(cfg, [&](const Graph& g) {
    if (classify(g).in_ue) out.insert(canonical_graph6(g));
  });
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("uec_test_" + name);
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("enumeration examples") {
  SearchConfig cfg;
  cfg.prune = PruneFlags::none();
  cfg.n = 4;
  CHECK(enumerate(cfg).graph6.size() == 11);
  cfg.n = 3;
  CHECK(enumerate(cfg).graph6.size() == 4);

  SearchConfig cp;
  cp.n = 4;
  cp.prune = PruneFlags::none();
  cp.prune.planar = true;
  cp.prune.connected = true;
  cp.m_min = 5;
  const auto r = enumerate(cp).graph6;
  CHECK(std::ranges::find(r, canonical_graph6(fixture("diamond"))) != r.end());
  CHECK(std::ranges::find(r, canonical_graph6(fixture("k4"))) != r.end());
  CHECK(r.size() == 2);
}

TEST_CASE("enumeration completeness against brute force, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    SearchConfig cfg;
    cfg.n = n;
    cfg.prune = PruneFlags::none();
    const auto ours = enumerate(cfg);
    const auto brute = oracle::brute_classes(n, [](const Graph&) { return true; });
    CHECK(ours.graph6.size() == brute.size());
    CHECK(std::ranges::adjacent_find(ours.graph6) == ours.graph6.end());
    CHECK(ours.stats.complete);
  }
}

TEST_CASE("known class counts") {
  const std::size_t all7 = 1044;
  SearchConfig cfg;
  cfg.n = 7;
  cfg.prune = PruneFlags::none();
  CHECK(enumerate(cfg).graph6.size() == all7);
  const std::size_t connected_planar[] = {1, 1, 2, 6, 20, 99, 646};
  for (int n = 1; n <= 7; ++n) {
    SearchConfig cp;
    cp.n = n;
    cp.prune = PruneFlags::none();
    cp.prune.planar = true;
    cp.prune.connected = true;
    CHECK(enumerate(cp).graph6.size() == connected_planar[n - 1]);
  }
}

TEST_CASE("pruning soundness, n <= 7") {
  for (int n = 3; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(ue_set(n, PruneFlags{}) == ue_set(n, PruneFlags::none()));
  }
}

TEST_CASE("enumeration is deterministic and independent of jobs") {
  SearchConfig cfg;
  cfg.n = 7;
  cfg.prune = PruneFlags::pool();
  const auto a = enumerate(cfg);
  const auto b = enumerate(cfg);
  cfg.jobs = 3;
  const auto c = enumerate(cfg);
  CHECK(a.graph6 == b.graph6);
  CHECK(a.graph6 == c.graph6);
  CHECK(a.stats.nodes == c.stats.nodes);
}

TEST_CASE("size rows for small n") {
  const auto s4 = compute_size(4);
  REQUIRE(s4.row.size);
  CHECK(*s4.row.size == 5);
  CHECK(s4.row.witnesses == std::vector<std::string>{canonical_graph6(fixture("diamond"))});
  CHECK(s4.row.ue_count == 1);
  const auto s5 = compute_size(5);
  CHECK(*s5.row.size == 7);
  CHECK(std::ranges::find(s5.row.witnesses, canonical_graph6(fixture("fan5"))) != s5.row.witnesses.end());
  const auto s6 = compute_size(6);
  CHECK(*s6.row.size == 9);
  CHECK(std::ranges::find(s6.row.witnesses, canonical_graph6(fixture("fan6"))) != s6.row.witnesses.end());
  CHECK(s6.audits_passed);
  const auto s3 = compute_size(3);
  CHECK(*s3.row.size == 3);
}

TEST_CASE("size rows agree with brute force, n <= 6") {
  for (int n = 3; n <= 6; ++n) {
    int best = -1;
    std::size_t count = 0;
    for (const auto& code : oracle::brute_classes(n, [](const Graph& g) {
           return planar(g) && oracle::critical(g);
         })) {
      ++count;
      best = std::max(best, static_cast<int>(std::ranges::count(code, '1')));
    }
    const auto s = compute_size(n);
    CHECK(s.row.ue_count == static_cast<long long>(count));
    CHECK(*s.row.size == best);
  }
}

TEST_CASE("shard specs") {
  const auto s = ShardSpec::parse("1/4");
  CHECK(s.index == 1);
  CHECK(s.total == 4);
  CHECK(s.depth == 0);
  CHECK(ShardSpec::parse("3:2/5").depth == 3);
  CHECK(ShardSpec::parse("3:2/5").to_string() == "3:2/5");
  CHECK_THROWS_AS(ShardSpec::parse("4/4"), InputError);
  CHECK_THROWS_AS(ShardSpec::parse("x/4"), InputError);
  CHECK_THROWS_AS(ShardSpec::parse("2"), InputError);
  CHECK_THROWS_AS(ShardSpec::parse("0:0/2"), InputError);
}

TEST_CASE("sharded runs partition the unsharded run") {
  for (int n : {6, 7}) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.prune = PruneFlags::pool();
    const auto whole = enumerate(cfg).graph6;
    for (int total : {2, 4, 5}) {
      std::vector<std::string> parts;
      for (int i = 0; i < total; ++i) {
        cfg.shard = {0, i, total};
        const auto p = enumerate(cfg).graph6;
        parts.insert(parts.end(), p.begin(), p.end());
      }
      std::ranges::sort(parts);
      CHECK(parts == whole);  // no duplicates either
    }
  }
}

TEST_CASE("merge_shards is order independent and idempotent") {
  std::vector<ShardSpec> specs;
  std::vector<std::vector<ResultRecord>> outs;
  for (int i = 0; i < 4; ++i) {
    specs.push_back({0, i, 4});
    outs.push_back(compute_size(6, 1, {}, specs.back()).records);
  }
  const auto merged = merge_shards(specs, outs);
  auto rs = specs;
  auto ro = outs;
  std::ranges::reverse(rs);
  std::ranges::reverse(ro);
  CHECK(merge_shards(rs, ro) == merged);
  auto ds = specs;
  auto dout = outs;
  ds.push_back(specs[1]);
  dout.push_back(outs[1]);
  CHECK(merge_shards(ds, dout) == merged);
  const auto whole = compute_size(6);
  CHECK(merged.size() == whole.records.size());
  const auto row = size_row_from(6, merged, true);
  CHECK(to_json(row).dump() == to_json(whole.row).dump());
  CHECK_THROWS_AS(merge_shards({{0, 0, 4}, {0, 1, 3}}, {{}, {}}), InputError);
}

TEST_CASE("result records") {
  ResultRecord r{"Cn", 4, 5, "PUES", "p10v3n9f0", "all"};
  CHECK(r.to_line() == "Cn\t4\t5\tPUES\tp10v3n9f0\tall");
  CHECK(ResultRecord::parse(r.to_line()) == r);
  CHECK_THROWS_AS(ResultRecord::parse("Cn\t4\t5\tPUES\tp1"), InputError);
  CHECK_THROWS_AS(ResultRecord::parse("Cn\t4\t6\tPUES\tp1\tall"), InputError);   // m disagrees
  CHECK_THROWS_AS(ResultRecord::parse("Cn\t5\t5\tPUES\tp1\tall"), InputError);   // n disagrees
  CHECK_THROWS_AS(ResultRecord::parse("C!\t4\t5\tPUES\tp1\tall"), InputError);
  const auto fan5 = make_record(fixture("fan5"), "all");
  CHECK(fan5.flags == "PUE");
  CHECK(fan5.digest.ends_with("f0"));
  const auto oct = make_record(fixture("oct"), "all");
  CHECK(oct.flags.find('E') == std::string::npos);
  CHECK(oct.digest == "-");
}

TEST_CASE("result cache append and reload") {
  const auto path = temp_file("cache.tsv");
  const auto s5 = compute_size(5);
  {
    ResultCache c(path.string());
    c.load();
    int added = 0;
    for (const auto& r : s5.records) added += c.add(r);
    CHECK(added == static_cast<int>(s5.records.size()));
    for (const auto& r : s5.records) CHECK_FALSE(c.add(r));
  }
  ResultCache again(path.string());
  again.load();
  CHECK(again.records() == s5.records);
  int added = 0;
  for (const auto& r : compute_size(5).records) added += again.add(r);
  CHECK(added == 0);
  {
    std::ofstream out(path, std::ios::app);
    out << "garbage line\n";
  }
  ResultCache broken(path.string());
  CHECK_THROWS_AS(broken.load(), InputError);
  std::filesystem::remove(path);
}

TEST_CASE("hunt examples") {
  const auto h = hunt(6, 9, HuntStrategy::augmentation);
  REQUIRE_FALSE(h.hits.empty());
  CHECK(std::ranges::any_of(h.hits, [](const ResultRecord& r) { return r.graph6 == canonical_graph6(fixture("fan6")); }));
  CHECK(h.audits_passed);
  const auto c = hunt(6, 9, HuntStrategy::carving);
  CHECK_FALSE(c.hits.empty());
  CHECK_THROWS_AS(hunt(10, 20, HuntStrategy::carving), PreconditionError);
  CHECK_THROWS_AS(hunt(10, 16, HuntStrategy::carving), PreconditionError);
  CHECK_THROWS_AS(parse_strategy("annealing"), InputError);
}

TEST_CASE("budget exhaustion is reported") {
  SearchConfig cfg;
  cfg.n = 8;
  cfg.budget.nodes = 50;
  const auto r = enumerate(cfg);
  CHECK_FALSE(r.stats.complete);
  const auto s = compute_size(8, 1, {0, 50});
  CHECK_FALSE(s.row.complete);
  CHECK(size_table_assert({s.row})[0].verdict == Verdict::not_applicable);
}

TEST_CASE("triangulation counts") {
  const std::size_t expected[] = {1, 1, 2, 5, 14, 50, 233};
  for (int n = 4; n <= 10; ++n) {
    const auto ts = triangulations(n);
    CHECK(ts.size() == expected[n - 4]);
    for (const auto& t : ts) {
      CHECK(t.size() == 3 * n - 6);
      CHECK(planar(t));
    }
  }
}
