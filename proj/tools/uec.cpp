#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "uec/audit.hpp"
#include "uec/bounds.hpp"
#include "uec/canonical.hpp"
#include "uec/criticality.hpp"
#include "uec/error.hpp"
#include "uec/io.hpp"
#include "uec/search.hpp"
#include "uec/structure.hpp"

namespace {

using namespace uec;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string input;
  std::string format = "auto";
  std::string output = "json";
  bool relaxed = false;
  int jobs = 1;
  double budget_seconds = 0;
  std::string shard;
  int max_n = 8;
  int min_n = 3;
  int n = 0;
  std::optional<int> m;
  std::string strategy = "augmentation";
  std::string cache;
  std::vector<std::string> merge;
};

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_graph6(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    return line.find_first_of(" \t") == std::string::npos && line.find_first_not_of("0123456789\r") != std::string::npos;
  }
  return false;
}

Graph parse_text(const std::string& text, const std::string& format, const std::string& origin) {
  const bool g6 = format == "auto" ? looks_like_graph6(text) || origin.ends_with(".g6")
                                   : parse_format(format) == GraphFormat::graph6;
  if (!g6) return parse_edge_list(text);
  std::istringstream in(text);
  std::string line, found;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!found.empty()) throw InputError("graph6 input holds more than one graph");
    found = line;
  }
  if (found.empty()) throw InputError("graph6 input is empty");
  return parse_graph6(found);
}

Graph load_graph(const Options& o) {
  if (o.input.empty()) throw InputError("missing input (file path, '-' or fixture name)");
  if (o.input == "-") return parse_text(read_all(std::cin), o.format, "-");
  if (std::filesystem::exists(o.input)) {
    std::ifstream in(o.input);
    if (!in) throw InputError("cannot read " + o.input);
    try {
      return parse_text(read_all(in), o.format, o.input);
    } catch (const InputError& e) {
      throw InputError(o.input + ": " + e.what());
    }
  }
  try {
    return fixture(o.input);
  } catch (const InputError&) {
    throw InputError("no such file or fixture: " + o.input);
  }
}

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Json& j, const Options& o) {
  if (o.output == "text") render_text(j, "", std::cout);
  else std::cout << j.dump(2) << "\n";
}

Json partition_json(const std::optional<ColorPartition>& p) {
  return p ? Json(p->classes) : Json(nullptr);
}

Json witnesses_json(const std::vector<EdgeWitness>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) {
    Json e{{"edge", {w.edge.u, w.edge.v}}};
    if (w.partition) e["partition"] = w.partition->classes;
    out.push_back(e);
  }
  return out;
}

int cmd_check(const Options& o) {
  const Graph g = load_graph(o);
  const ClassificationReport r = classify(g);
  emit({{"graph6", canonical_graph6(g)},
        {"n", r.n},
        {"m", r.m},
        {"planar", r.planar},
        {"chromatic_3", r.chromatic_3},
        {"uniquely_3", r.uniquely_3},
        {"partition", partition_json(r.partition)},
        {"edge_critical_definitional", r.edge_critical_definitional},
        {"edge_critical_contraction", r.edge_critical_contraction},
        {"in_ue", r.in_ue},
        {"definitional_witnesses", witnesses_json(r.definitional_witnesses)},
        {"contraction_witnesses", witnesses_json(r.contraction_witnesses)}},
       o);
  return kExitOk;
}

int cmd_audit(const Options& o) {
  const Graph g = load_graph(o);
  if (!o.relaxed) {
    if (!classify(g).in_ue) throw InputError("strict audit requires a graph in U_E (use --relaxed)");
    if (!separating_3_cycles(g).empty())
      throw InputError("strict audit requires a graph without separating 3-cycles (use --relaxed)");
  }
  const AuditReport r = audit_instance(g, o.relaxed ? DomainMode::relaxed : DomainMode::strict);
  emit(to_json(r), o);
  return r.passed() ? kExitOk : kExitFailed;
}

int cmd_decompose(const Options& o) {
  const Graph g = load_graph(o);
  const PlanarityResult pr = is_planar(g);
  if (!pr.planar) throw InputError("decompose requires a planar graph");
  if (!o.relaxed && !separating_3_cycles(g).empty())
    throw InputError("graph has a separating 3-cycle (use --relaxed)");
  const DomainMode mode = o.relaxed ? DomainMode::relaxed : DomainMode::strict;
  const TriangleDecomposition d = triangle_components(g, mode);
  const AuxGraph aux = build_HG(g, *pr.embedding, d);
  std::vector<AuditResult> checks{decomposition_audit(g, d), thm41_audit(aux, d, mode)};
  if (o.relaxed)
    for (auto& c : checks) c.binding = false;
  Json cj = Json::array();
  for (const auto& c : checks) cj.push_back(to_json(c));
  emit({{"graph6", canonical_graph6(g)},
        {"mode", o.relaxed ? "relaxed" : "strict"},
        {"decomposition", to_json(d)},
        {"aux_graph", to_json(aux)},
        {"checks", cj}},
       o);
  return all_passed(checks) ? kExitOk : kExitFailed;
}

int cmd_bound(const Options& o) {
  const Graph g = load_graph(o);
  if (!planar(g)) throw InputError("bound requires a planar graph");
  const BoundReport r = bound_report(g);
  const bool in_ue = classify(g).in_ue;
  const std::vector<AuditResult> checks{formula1_audit(r), formula2_audit(r), thm46_audit(r, in_ue)};
  Json cj = Json::array();
  for (const auto& c : checks) cj.push_back(to_json(c));
  emit({{"graph6", canonical_graph6(g)}, {"in_ue", in_ue}, {"report", to_json(r)}, {"checks", cj}}, o);
  return all_passed(checks) ? kExitOk : kExitFailed;
}

Budget budget_of(const Options& o) {
  Budget b;
  b.seconds = o.budget_seconds;
  return b;
}

int cmd_search(const Options& o) {
  if (o.n < 1) throw InputError("search requires --n");
  std::optional<ResultCache> cache;
  if (!o.cache.empty()) {
    cache.emplace(o.cache);
    cache->load();
  }
  std::vector<ResultRecord> records;
  Json j{{"n", o.n}};
  bool ok = true;
  if (o.m) {
    const HuntStrategy s = parse_strategy(o.strategy);
    const HuntResult h = hunt(o.n, *o.m, s, budget_of(o), o.jobs);
    records = h.hits;
    ok = h.audits_passed;
    j["mode"] = "hunt";
    j["m"] = *o.m;
    j["strategy"] = to_string(s);
    j["candidates"] = h.candidates;
    j["exhausted"] = h.exhausted;
    j["status"] = !h.hits.empty() ? "found" : h.exhausted ? "none" : "inconclusive";
  } else {
    const ShardSpec shard = o.shard.empty() ? ShardSpec{} : ShardSpec::parse(o.shard);
    const SizeResult s = compute_size(o.n, o.jobs, budget_of(o), shard);
    records = s.records;
    ok = s.audits_passed;
    j["mode"] = "exhaustive";
    j["shard"] = shard.sharded() ? shard.to_string() : "all";
    j["nodes"] = s.stats.nodes;
    j["candidates"] = s.stats.emitted;
    j["complete"] = s.stats.complete;
    j["row"] = to_json(s.row);
  }
  int added = 0;
  if (cache)
    for (const auto& r : records) added += cache->add(r);
  Json rj = Json::array();
  for (const auto& r : records) rj.push_back(to_json(r));
  j["records"] = rj;
  if (cache) j["cache_added"] = added;
  j["audits_passed"] = ok;
  emit(j, o);
  return ok ? kExitOk : kExitFailed;
}

std::string table_text(const std::vector<SizeRow>& rows) {
  std::ostringstream out;
  out << std::setw(4) << "n" << std::setw(8) << "size" << std::setw(8) << "2n-3" << std::setw(10) << "9n/4-6"
      << std::setw(12) << "5n/2-6" << std::setw(10) << "U_E" << std::setw(10) << "complete" << "\n";
  for (const auto& r : rows) {
    std::ostringstream conj;
    conj << std::fixed << std::setprecision(2) << 9.0 * r.n / 4.0 - 6.0;
    out << std::setw(4) << r.n << std::setw(8) << (r.size ? std::to_string(*r.size) : "none") << std::setw(8)
        << lower_line(r.n) << std::setw(10) << conj.str() << std::setw(12) << upper_line(r.n) << std::setw(10)
        << r.ue_count << std::setw(10) << (r.complete ? "yes" : "no") << "\n";
  }
  return out.str();
}

int cmd_size_table(const Options& o) {
  std::vector<SizeRow> rows;
  Json details = Json::array();
  bool ok = true;
  if (!o.merge.empty()) {
    std::vector<ShardSpec> specs;
    std::vector<std::vector<ResultRecord>> outputs;
    for (const auto& path : o.merge) {
      if (!std::filesystem::exists(path)) throw InputError("no such result cache: " + path);
      ResultCache c(path);
      c.load();
      auto recs = c.records();
      if (recs.empty()) continue;  // a shard with no hits
      for (const auto& r : recs)
        if (r.shard != recs.front().shard) throw InputError(path + ": records from several shards");
      specs.push_back(recs.front().shard == "all" ? ShardSpec{} : ShardSpec::parse(recs.front().shard));
      outputs.push_back(std::move(recs));
    }
    if (specs.empty()) throw InputError("no records in the merged caches");
    const auto merged = merge_shards(specs, outputs);
    std::set<int> ns;
    for (const auto& r : merged) ns.insert(r.n);
    for (int n : ns) rows.push_back(size_row_from(n, merged, true));
  } else {
    if (o.min_n < 3 || o.max_n < o.min_n || o.max_n > 12)
      throw InputError("size-table needs 3 <= --min-n <= --max-n <= 12");
    for (int n = o.min_n; n <= o.max_n; ++n) {
      const SizeResult s = compute_size(n, o.jobs, budget_of(o));
      rows.push_back(s.row);
      ok = ok && s.audits_passed;
    }
  }
  const auto checks = size_table_assert(rows);
  ok = ok && all_passed(checks);
  Json rj = Json::array(), cj = Json::array();
  for (const auto& r : rows) rj.push_back(to_json(r));
  for (const auto& c : checks) cj.push_back(to_json(c));
  const Json j{{"rows", rj}, {"checks", cj}, {"audits_passed", ok}};
  if (o.output == "text") {
    std::cout << table_text(rows);
    render_text(j, "", std::cout);
  } else {
    emit(j, o);
  }
  return ok ? kExitOk : kExitFailed;
}

void add_common(CLI::App* c, Options& o) {
  c->add_option("--format", o.format, "Input format: auto, edgelist or graph6")
      ->check(CLI::IsMember({"auto", "edgelist", "el", "graph6", "g6"}));
  c->add_option("--output", o.output, "Output: json or text")->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Edge-critical uniquely 3-colourable planar graph toolkit"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "Classify a graph");
  auto* audit = app.add_subcommand("audit", "Run the theorem battery on a graph");
  auto* decompose = app.add_subcommand("decompose", "Triangle-subgraph decomposition and auxiliary graph");
  auto* bound = app.add_subcommand("bound", "Edge-count accounting");
  for (auto* c : {check, audit, decompose, bound}) {
    c->add_option("input", o.input, "File path, '-' for stdin, or fixture name")->required();
    add_common(c, o);
  }
  for (auto* c : {audit, decompose}) c->add_flag("--relaxed", o.relaxed, "Run outside the audit domain (non-binding)");

  auto* search = app.add_subcommand("search", "Exhaustive size(n) run or hunt for (n, m) witnesses");
  add_common(search, o);
  search->add_option("--n", o.n, "Number of vertices")->required();
  search->add_option("--m", o.m, "Target edge count (hunt mode)");
  search->add_option("--strategy", o.strategy, "Hunt strategy: augmentation or carving");
  search->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  search->add_option("--budget-seconds", o.budget_seconds, "Wall-clock budget, 0 = none")->check(CLI::NonNegativeNumber);
  search->add_option("--shard", o.shard, "Shard i/t or depth:i/t");
  search->add_option("--cache", o.cache, "Append-only result cache file");

  auto* table = app.add_subcommand("size-table", "size(n) table against the reference lines");
  add_common(table, o);
  table->add_option("--max-n", o.max_n, "Largest n (default 8)");
  table->add_option("--min-n", o.min_n, "Smallest n (default 3)");
  table->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  table->add_option("--budget-seconds", o.budget_seconds, "Wall-clock budget per row, 0 = none")
      ->check(CLI::NonNegativeNumber);
  table->add_option("--merge", o.merge, "Build the table from shard result caches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (check->parsed()) return cmd_check(o);
    if (audit->parsed()) return cmd_audit(o);
    if (decompose->parsed()) return cmd_decompose(o);
    if (bound->parsed()) return cmd_bound(o);
    if (search->parsed()) return cmd_search(o);
    if (table->parsed()) return cmd_size_table(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const TheoremViolation& e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitInput;
}
